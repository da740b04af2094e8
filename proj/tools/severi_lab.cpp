// severi-lab: command-line surface over the severi C API.
//
// Exit codes: 0 success (result JSON/CSV on stdout), 1 domain error
// (structured {"error", "message"} JSON on stdout), 2 usage error
// (message on stderr). Logging goes to stderr only.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "severi/severi.h"

namespace {

struct Options {
    std::string format = "json";
    bool verbose = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        std::cerr << "severi-lab: cannot read file: " << path << "\n";
        std::exit(2);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

[[noreturn]] void finish(severi_ctx* ctx, const Options& opt, int status, char* result,
                         const std::string& what) {
    if (status == SEVERI_OK) {
        std::string payload(result);
        severi_string_free(result);
        if (opt.format == "csv") {
            char* csv = nullptr;
            int cs = severi_json_to_csv(ctx, payload.c_str(), &csv);
            if (cs != SEVERI_OK) {
                std::cerr << "severi-lab: " << severi_last_error(ctx) << "\n";
                severi_ctx_free(ctx);
                std::exit(2);
            }
            std::cout << csv;
            severi_string_free(csv);
        } else {
            std::cout << payload << "\n";
        }
        if (opt.verbose) std::cerr << "severi-lab: " << what << ": ok\n";
        severi_ctx_free(ctx);
        std::exit(0);
    }
    std::string code = severi_last_error_code(ctx);
    std::string message = severi_last_error(ctx);
    if (status == SEVERI_ERR_USAGE) {
        std::cerr << "severi-lab: " << what << ": " << message << "\n";
        severi_ctx_free(ctx);
        std::exit(2);
    }
    // domain errors are data: structured JSON on stdout
    std::string escaped;
    for (char c : message) {
        if (c == '"' || c == '\\') escaped += '\\';
        escaped += c;
    }
    std::cout << "{\"error\":\"" << code << "\",\"message\":\"" << escaped << "\"}\n";
    if (opt.verbose) std::cerr << "severi-lab: " << what << ": " << code << "\n";
    severi_ctx_free(ctx);
    std::exit(1);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"severi-lab: exact plane-curve singularity, Severi-stratum and tropical calculators"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--verbose", opt.verbose, "log progress to stderr");

    // germ analyze <poly>
    auto* germ = app.add_subcommand("germ", "plane curve germ invariants");
    germ->fallthrough();
    germ->require_subcommand(1);
    auto* germ_analyze = germ->add_subcommand("analyze", "multiplicity, mu, tau, delta, branches, ADE label");
    germ_analyze->fallthrough();
    std::string germ_poly;
    germ_analyze->add_option("poly", germ_poly, "germ f(x, y), e.g. \"y^2 - x^3\"")->required();

    // family scan / stratify
    auto* family = app.add_subcommand("family", "hyperelliptic families y^2 = p(x)");
    family->fallthrough();
    family->require_subcommand(1);
    auto* family_scan = family->add_subcommand("scan", "classify fibers along a family");
    family_scan->fallthrough();
    std::string family_spec, family_samples;
    family_scan->add_option("--spec", family_spec, "JSON file {\"coeffs\": [...]}")->required();
    family_scan->add_option("--samples", family_samples, "comma-separated rational samples")->required();
    auto* family_strat = family->add_subcommand("stratify", "stratify the cusp versal family y^2 = x^3 + ax + b");
    family_strat->fallthrough();
    std::string strat_a, strat_b, strat_t;
    family_strat->add_option("--a", strat_a, "coefficient a");
    family_strat->add_option("--b", strat_b, "coefficient b");
    family_strat->add_option("--t", strat_t, "scan along (a,b) = (-3t^2, 2t^3), comma-separated t values");

    // strata expdim
    auto* strata = app.add_subcommand("strata", "Severi-type stratum dimension counts");
    strata->fallthrough();
    strata->require_subcommand(1);
    auto* strata_expdim = strata->add_subcommand("expdim", "expected dimension and cusp bounds");
    strata_expdim->fallthrough();
    std::string surface;
    long s_d = 0, s_g = 0, s_n = 0, s_a = 0, s_b = 0, q_delta = 0, q_kappa = 0;
    bool has_d = false, has_g = false, has_n = false, has_a = false, has_b = false;
    strata_expdim->add_option("--surface", surface, "p2 | k3 | hirzebruch")->required();
    strata_expdim->add_option("--d", s_d, "P2 degree")->each([&](const std::string&) { has_d = true; });
    strata_expdim->add_option("--g", s_g, "K3 genus")->each([&](const std::string&) { has_g = true; });
    strata_expdim->add_option("--n", s_n, "Hirzebruch n")->each([&](const std::string&) { has_n = true; });
    strata_expdim->add_option("--a", s_a, "Hirzebruch a")->each([&](const std::string&) { has_a = true; });
    strata_expdim->add_option("--b", s_b, "Hirzebruch b")->each([&](const std::string&) { has_b = true; });
    strata_expdim->add_option("--delta", q_delta, "number of nodes");
    strata_expdim->add_option("--kappa", q_kappa, "number of cusps");

    // defmap rank / realize
    auto* defmap = app.add_subcommand("defmap", "global-to-local deformation map models");
    defmap->fallthrough();
    defmap->require_subcommand(1);
    auto* defmap_rank = defmap->add_subcommand("rank", "image dimension / maximal singularity count");
    defmap_rank->fallthrough();
    std::string defmap_spec;
    defmap_rank->add_option("--spec", defmap_spec, "JSON file {\"budgets\":[...],\"matrix\":[[...]]}")->required();
    auto* defmap_realize = defmap->add_subcommand("realize", "solve for a global section with prescribed local directions");
    defmap_realize->fallthrough();
    std::string realize_spec, realize_target;
    defmap_realize->add_option("--spec", realize_spec, "JSON spec file")->required();
    defmap_realize->add_option("--target", realize_target, "comma-separated rational target")->required();

    // tropical count / contract
    auto* tropical = app.add_subcommand("tropical", "tropical Severi degrees and boundary events");
    tropical->fallthrough();
    tropical->require_subcommand(1);
    auto* trop_count = tropical->add_subcommand("count", "enumerate degree-d delta-nodal tropical curves");
    trop_count->fallthrough();
    int t_d = 1, t_delta = 0;
    std::string algorithm = "paths";
    trop_count->add_option("--d", t_d, "degree (<= 4)")->required();
    trop_count->add_option("--delta", t_delta, "number of nodes")->required();
    trop_count->add_option("--algorithm", algorithm, "paths | floor | both")
        ->check(CLI::IsMember({"paths", "floor", "both"}));
    auto* trop_contract = tropical->add_subcommand("contract", "contract bounded edges");
    trop_contract->fallthrough();
    std::string curve_file, edges_csv;
    trop_contract->add_option("--curve", curve_file, "TropicalCurve JSON file")->required();
    trop_contract->add_option("--edges", edges_csv, "comma-separated edge indices");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        std::cerr << "severi-lab: " << e.what() << "\n";
        return 2;
    }

    severi_ctx* ctx = severi_ctx_new();
    char* out = nullptr;

    if (germ_analyze->parsed()) {
        int st = severi_germ_analyze(ctx, germ_poly.c_str(), &out);
        finish(ctx, opt, st, out, "germ analyze");
    }
    if (family_scan->parsed()) {
        std::string spec = read_file(family_spec);
        int st = severi_family_scan(ctx, spec.c_str(), family_samples.c_str(), &out);
        finish(ctx, opt, st, out, "family scan");
    }
    if (family_strat->parsed()) {
        bool point_mode = !strat_a.empty() || !strat_b.empty();
        bool scan_mode = !strat_t.empty();
        if (point_mode == scan_mode) {
            std::cerr << "severi-lab: family stratify needs either --a/--b or --t\n";
            severi_ctx_free(ctx);
            return 2;
        }
        int st = scan_mode
                     ? severi_family_scan_discriminant(ctx, strat_t.c_str(), &out)
                     : severi_family_stratify(ctx, strat_a.c_str(), strat_b.c_str(), &out);
        finish(ctx, opt, st, out, "family stratify");
    }
    if (strata_expdim->parsed()) {
        std::ostringstream q;
        q << "{\"surface\":\"" << surface << "\"";
        if (has_d) q << ",\"d\":" << s_d;
        if (has_g) q << ",\"g\":" << s_g;
        if (has_n) q << ",\"n\":" << s_n;
        if (has_a) q << ",\"a\":" << s_a;
        if (has_b) q << ",\"b\":" << s_b;
        q << ",\"delta\":" << q_delta << ",\"kappa\":" << q_kappa << "}";
        int st = severi_strata_expdim(ctx, q.str().c_str(), &out);
        finish(ctx, opt, st, out, "strata expdim");
    }
    if (defmap_rank->parsed()) {
        std::string spec = read_file(defmap_spec);
        int st = severi_defmap_rank(ctx, spec.c_str(), &out);
        finish(ctx, opt, st, out, "defmap rank");
    }
    if (defmap_realize->parsed()) {
        std::string spec = read_file(realize_spec);
        int st = severi_defmap_realize(ctx, spec.c_str(), realize_target.c_str(), &out);
        finish(ctx, opt, st, out, "defmap realize");
    }
    if (trop_count->parsed()) {
        int st = severi_tropical_count(ctx, t_d, t_delta, algorithm.c_str(), &out);
        finish(ctx, opt, st, out, "tropical count");
    }
    if (trop_contract->parsed()) {
        std::string curve = read_file(curve_file);
        int st = severi_tropical_contract(ctx, curve.c_str(), edges_csv.c_str(), &out);
        finish(ctx, opt, st, out, "tropical contract");
    }

    std::cerr << "severi-lab: no subcommand\n";
    severi_ctx_free(ctx);
    return 2;
}
