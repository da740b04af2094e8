#include "severi/json_ops.hpp"

#include <iostream>
#include <sstream>

#include "severi/bivar.hpp"
#include "severi/defmap.hpp"
#include "severi/errors.hpp"
#include "severi/family.hpp"
#include "severi/germ.hpp"
#include "severi/strata.hpp"

namespace severi::ops {

namespace {

const Int kJsonIntCap = Int(1) << 53;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorCode::parse_error, "malformed JSON input");
    return j;
}

Rat rat_from_json(const json& v) {
    if (v.is_number_integer()) return Rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return rat_from_string(v.get<std::string>());
    fail(ErrorCode::parse_error, "expected an integer or \"p/q\" string");
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(csv);
    while (std::getline(is, cur, ',')) {
        cur = trim(cur);
        if (cur.empty()) fail(ErrorCode::parse_error, "empty entry in comma-separated list");
        out.push_back(cur);
    }
    if (out.empty()) fail(ErrorCode::parse_error, "empty comma-separated list");
    return out;
}

json profile_json(const std::vector<std::pair<int, int>>& profile) {
    json arr = json::array();
    for (auto& [m, count] : profile) arr.push_back(json{{"mult", m}, {"count", count}});
    return arr;
}

} // namespace

json rat_json(const Rat& r) {
    if (rat_is_integer(r)) {
        Int n = r.get_num();
        if (n < kJsonIntCap && -n < kJsonIntCap) return static_cast<long long>(n.get_si());
    }
    return rat_to_string(r);
}

json int_json(const Int& n) {
    if (n < kJsonIntCap && -n < kJsonIntCap) return static_cast<long long>(n.get_si());
    return n.get_str();
}

std::vector<Rat> parse_rat_csv(const std::string& csv) {
    std::vector<Rat> out;
    for (auto& tok : split_csv(csv)) out.push_back(rat_from_string(tok));
    return out;
}

std::vector<int> parse_int_csv(const std::string& csv) {
    std::vector<int> out;
    for (auto& tok : split_csv(csv)) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            fail(ErrorCode::parse_error, "bad integer: " + tok);
        }
    }
    return out;
}

json germ_analyze(const std::string& poly_text) {
    QPoly f = parse_poly(poly_text, "x", "y");
    GermReport rep = classify(f);
    json out;
    out["m"] = rep.multiplicity;
    out["mu"] = rep.milnor;
    out["tau"] = rep.tjurina;
    out["delta"] = rep.delta;
    out["branches"] = rep.branches;
    out["ade"] = rep.ade.str();
    return out;
}

json family_scan(const std::string& family_json_text, const std::string& samples_csv) {
    json spec = parse_json(family_json_text);
    if (!spec.is_object() || !spec.contains("coeffs") || !spec["coeffs"].is_array())
        fail(ErrorCode::parse_error, "family spec must be {\"coeffs\": [list of strings in s]}");
    FamilySpec family;
    for (auto& c : spec["coeffs"]) {
        if (!c.is_string()) fail(ErrorCode::parse_error, "family coefficients must be strings");
        family.coeffs.push_back(parse_upoly(c.get<std::string>(), "s"));
    }
    std::vector<Rat> samples = parse_rat_csv(samples_csv);
    PathReport rep = equigeneric_path_check(family, samples);

    json out;
    out["equigeneric"] = rep.equigeneric;
    json js = json::array();
    for (auto& s : rep.samples) {
        json one;
        one["s"] = rat_json(s.s);
        one["delta"] = s.fiber.total_delta;
        one["smooth"] = s.fiber.smooth;
        one["profile"] = profile_json(s.fiber.multiplicity_profile);
        json pts = json::array();
        for (auto& p : s.fiber.singular_points) {
            json pj;
            if (p.location) pj["location"] = rat_json(*p.location);
            pj["factor"] = p.factor;
            pj["factor_degree"] = p.factor_degree;
            pj["ade"] = p.ade();
            pts.push_back(std::move(pj));
        }
        one["singular_points"] = std::move(pts);
        js.push_back(std::move(one));
    }
    out["samples"] = std::move(js);
    json trs = json::array();
    for (auto& t : rep.transitions) {
        json tj;
        tj["from_s"] = rat_json(rep.samples[t.from_index].s);
        tj["to_s"] = rat_json(rep.samples[t.to_index].s);
        tj["before"] = t.before;
        tj["after"] = t.after;
        trs.push_back(std::move(tj));
    }
    out["transitions"] = std::move(trs);
    return out;
}

json family_stratify_point(const std::string& a, const std::string& b) {
    Rat ra = rat_from_string(a), rb = rat_from_string(b);
    CubicStratum s = stratify_cubic(ra, rb);
    json out;
    out["a"] = rat_json(ra);
    out["b"] = rat_json(rb);
    out["discriminant"] = rat_json(s.discriminant);
    out["label"] = s.label_str();
    return out;
}

json family_stratify_scan(const std::string& t_csv) {
    std::vector<Rat> ts = parse_rat_csv(t_csv);
    std::vector<CubicStratum> strata = scan_discriminant(ts);
    json out;
    json arr = json::array();
    for (std::size_t i = 0; i < ts.size(); ++i) {
        json one;
        one["t"] = rat_json(ts[i]);
        one["a"] = rat_json(Rat(-3) * ts[i] * ts[i]);
        one["b"] = rat_json(Rat(2) * ts[i] * ts[i] * ts[i]);
        one["discriminant"] = rat_json(strata[i].discriminant);
        one["label"] = strata[i].label_str();
        arr.push_back(std::move(one));
    }
    out["samples"] = std::move(arr);
    return out;
}

namespace {

SurfaceSpec surface_from_json(const json& q) {
    if (!q.contains("surface") || !q["surface"].is_string())
        fail(ErrorCode::parse_error, "missing surface kind");
    std::string kind = q["surface"].get<std::string>();
    auto get_long = [&](const char* key) -> long {
        if (!q.contains(key) || !q[key].is_number_integer())
            fail(ErrorCode::parse_error, std::string("missing integer field: ") + key);
        return q[key].get<long>();
    };
    if (kind == "p2") return SurfaceSpec(P2Spec{get_long("d")});
    if (kind == "k3") return SurfaceSpec(K3Spec{get_long("g")});
    if (kind == "hirzebruch")
        return SurfaceSpec(HirzebruchSpec{get_long("n"), get_long("a"), get_long("b")});
    fail(ErrorCode::invalid_spec, "surface must be p2, k3 or hirzebruch");
}

} // namespace

json strata_expdim(const std::string& query_json_text) {
    json q = parse_json(query_json_text);
    SurfaceSpec s = surface_from_json(q);
    if (s.positivity_warning())
        std::cerr << "warning: " << s.describe()
                  << ": the dimension formula assumes b large (b >= a*n); values computed anyway\n";
    StrataQuery query;
    if (q.contains("delta")) query.delta = q["delta"].get<long>();
    if (q.contains("kappa")) query.kappa = q["kappa"].get<long>();
    json out;
    out["surface"] = s.describe();
    out["delta"] = query.delta;
    out["kappa"] = query.kappa;
    out["dim"] = linear_system_dim(s);
    out["genus"] = arithmetic_genus(s);
    out["expdim"] = expected_dim(s, query);
    out["max_cusps"] = max_cusps(s);
    out["nonempty_expected"] = nonempty_expected(s, query);
    out["binding_bound"] = max_cusps_binding(s);
    return out;
}

namespace {

DeformationMap defmap_from_json(const std::string& text) {
    json spec = parse_json(text);
    if (!spec.is_object() || !spec.contains("budgets") || !spec.contains("matrix"))
        fail(ErrorCode::parse_error, "defmap spec must be {\"budgets\": [...], \"matrix\": [[...]]}");
    DeformationMap m;
    for (auto& b : spec["budgets"]) {
        if (!b.is_string()) fail(ErrorCode::parse_error, "budgets must be strings");
        m.budgets.push_back(SingularityBudget::from_name(b.get<std::string>()));
    }
    for (auto& row : spec["matrix"]) {
        if (!row.is_array()) fail(ErrorCode::parse_error, "matrix rows must be arrays");
        std::vector<Rat> r;
        for (auto& v : row) r.push_back(rat_from_json(v));
        m.matrix.push_back(std::move(r));
    }
    m.validate();
    return m;
}

} // namespace

json defmap_rank(const std::string& spec_json_text) {
    DeformationMap m = defmap_from_json(spec_json_text);
    json out;
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["rank"] = image_dimension(m);
    out["max_singular_count"] = max_singular_count(m);
    out["codim_budget"] = codim_budget(m.budgets);
    return out;
}

json defmap_realize(const std::string& spec_json_text, const std::string& target_csv) {
    DeformationMap m = defmap_from_json(spec_json_text);
    std::vector<Rat> target = parse_rat_csv(target_csv);
    auto sol = realizable(m, target);
    if (!sol)
        fail(ErrorCode::unrealizable, "target is not in the image of the map");
    json out;
    out["realizable"] = true;
    json xs = json::array();
    for (auto& v : *sol) xs.push_back(rat_json(v));
    out["solution"] = std::move(xs);
    return out;
}

json tropical_curve_to_json(const TropicalCurve& c) {
    json out;
    out["degree"] = c.degree;
    json vs = json::array();
    for (auto& v : c.vertices) vs.push_back(json::array({rat_json(v[0]), rat_json(v[1])}));
    out["vertices"] = std::move(vs);
    json es = json::array();
    for (auto& e : c.edges) {
        json ej;
        ej["v"] = json::array({e.u, e.v});
        ej["dir"] = json::array({e.dir[0], e.dir[1]});
        ej["weight"] = e.weight;
        ej["length"] = rat_json(e.length);
        es.push_back(std::move(ej));
    }
    out["edges"] = std::move(es);
    json rs = json::array();
    for (auto& r : c.rays) {
        json rj;
        rj["v"] = r.v;
        rj["dir"] = json::array({r.dir[0], r.dir[1]});
        rj["weight"] = r.weight;
        rs.push_back(std::move(rj));
    }
    out["rays"] = std::move(rs);
    return out;
}

TropicalCurve tropical_curve_from_json(const json& j) {
    if (!j.is_object()) fail(ErrorCode::parse_error, "curve must be a JSON object");
    TropicalCurve c;
    if (!j.contains("degree") || !j["degree"].is_number_integer())
        fail(ErrorCode::parse_error, "curve needs an integer degree");
    c.degree = j["degree"].get<int>();
    if (!j.contains("vertices") || !j["vertices"].is_array())
        fail(ErrorCode::parse_error, "curve needs a vertices array");
    for (auto& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2) fail(ErrorCode::parse_error, "vertex must be [x, y]");
        c.vertices.push_back({rat_from_json(v[0]), rat_from_json(v[1])});
    }
    auto check_vertex = [&](int idx) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= c.vertices.size())
            fail(ErrorCode::parse_error, "vertex index out of range");
    };
    if (j.contains("edges")) {
        for (auto& e : j["edges"]) {
            TropicalCurve::Edge edge;
            auto& vv = e.at("v");
            edge.u = vv.at(0).get<int>();
            edge.v = vv.at(1).get<int>();
            check_vertex(edge.u);
            check_vertex(edge.v);
            edge.dir = {e.at("dir").at(0).get<long>(), e.at("dir").at(1).get<long>()};
            edge.weight = e.at("weight").get<long>();
            edge.length = rat_from_json(e.at("length"));
            if (edge.weight < 1) fail(ErrorCode::parse_error, "edge weight must be >= 1");
            if (!(edge.length > 0)) fail(ErrorCode::parse_error, "edge length must be > 0");
            c.edges.push_back(std::move(edge));
        }
    }
    if (j.contains("rays")) {
        for (auto& r : j["rays"]) {
            TropicalCurve::Ray ray;
            ray.v = r.at("v").get<int>();
            check_vertex(ray.v);
            ray.dir = {r.at("dir").at(0).get<long>(), r.at("dir").at(1).get<long>()};
            ray.weight = r.at("weight").get<long>();
            if (ray.weight < 1) fail(ErrorCode::parse_error, "ray weight must be >= 1");
            c.rays.push_back(std::move(ray));
        }
    }
    return c;
}

json tropical_count(int d, int delta, const std::string& algorithm) {
    if (algorithm != "paths" && algorithm != "floor" && algorithm != "both")
        fail(ErrorCode::invalid_input, "algorithm must be paths, floor or both");
    json out;
    out["d"] = d;
    out["delta"] = delta;
    if (algorithm == "floor") {
        auto recs = enumerate_floor_diagrams(d, delta);
        Int total(0);
        for (auto& r : recs) total += r.multiplicity;
        long g = static_cast<long>(d - 1) * (d - 2) / 2 - delta;
        out["points"] = 3 * d - 1 + g;
        out["algorithm"] = "floor";
        out["total"] = int_json(total);
        json pt = json::array();
        for (auto& r : recs)
            pt.push_back(json{{"type", r.type}, {"multiplicity", int_json(r.multiplicity)}});
        out["per_type"] = std::move(pt);
        return out;
    }
    EnumerationResult res = enumerate_curves(d, delta);
    out["points"] = res.points;
    out["algorithm"] = algorithm;
    out["total"] = int_json(res.total);
    if (algorithm == "both") {
        Int floor_total = severi_degree_floor(d, delta);
        out["total_floor"] = int_json(floor_total);
        out["agree"] = (floor_total == res.total);
    }
    json pt = json::array();
    for (auto& r : res.records) {
        json rec;
        rec["type"] = r.type;
        rec["multiplicity"] = int_json(r.multiplicity);
        rec["curve"] = tropical_curve_to_json(r.curve);
        pt.push_back(std::move(rec));
    }
    out["per_type"] = std::move(pt);
    return out;
}

json tropical_contract(const std::string& curve_json_text, const std::string& edges_csv) {
    TropicalCurve c = tropical_curve_from_json(parse_json(curve_json_text));
    std::vector<int> edges = edges_csv.empty() ? std::vector<int>{} : parse_int_csv(edges_csv);
    ContractReport rep = contract_edges(c, edges);
    json out;
    out["contracted_edges"] = edges;
    json vm = json::array();
    for (int v : rep.vertex_map) vm.push_back(v);
    out["vertex_map"] = std::move(vm);
    json vals = json::array();
    for (long v : rep.valences) vals.push_back(v);
    out["valences"] = std::move(vals);
    out["balanced"] = rep.balanced;
    out["curve"] = tropical_curve_to_json(rep.curve);
    return out;
}

json tropical_cusp_signature(const std::string& curve_json_text, const std::string& edges_csv) {
    TropicalCurve c = tropical_curve_from_json(parse_json(curve_json_text));
    std::vector<int> edges = parse_int_csv(edges_csv);
    CuspSignature sig = cusp_signature(c, edges);
    json out;
    out["vanishing_count"] = sig.vanishing_count;
    out["codimension"] = sig.codimension;
    json vp = json::array();
    for (long v : sig.valence_profile) vp.push_back(v);
    out["valence_profile"] = std::move(vp);
    out["cusp_candidate"] = sig.cusp_candidate;
    out["worse_than_cusp"] = sig.worse_than_cusp;
    out["balanced"] = sig.balanced;
    return out;
}

std::string to_csv(const json& j) {
    if (!j.is_object()) fail(ErrorCode::unsupported_format, "csv output requires an object result");
    // first array-of-objects field supplies the rows
    std::string rows_key;
    for (auto& [key, value] : j.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            rows_key = key;
            break;
        }
    }
    auto cell = [](const json& v) -> std::string {
        std::string s;
        if (v.is_string()) s = v.get<std::string>();
        else s = v.dump();
        bool quote = s.find_first_of(",\"\n") != std::string::npos;
        if (!quote) return s;
        std::string q = "\"";
        for (char ch : s) {
            if (ch == '"') q += "\"\"";
            else q += ch;
        }
        q += "\"";
        return q;
    };
    std::ostringstream os;
    if (rows_key.empty()) {
        bool first = true;
        for (auto& [key, value] : j.items()) {
            os << (first ? "" : ",") << key;
            first = false;
        }
        os << "\n";
        first = true;
        for (auto& [key, value] : j.items()) {
            (void)key;
            os << (first ? "" : ",") << cell(value);
            first = false;
        }
        os << "\n";
        return os.str();
    }
    // header: scalar fields, then the row object's fields
    std::vector<std::string> scalar_keys;
    for (auto& [key, value] : j.items())
        if (key != rows_key && !value.is_array() && !value.is_object()) scalar_keys.push_back(key);
    std::vector<std::string> row_keys;
    for (auto& [key, value] : j[rows_key].front().items()) {
        (void)value;
        row_keys.push_back(key);
    }
    bool first = true;
    for (auto& k : scalar_keys) { os << (first ? "" : ",") << k; first = false; }
    for (auto& k : row_keys) { os << (first ? "" : ",") << k; first = false; }
    os << "\n";
    for (auto& row : j[rows_key]) {
        first = true;
        for (auto& k : scalar_keys) { os << (first ? "" : ",") << cell(j[k]); first = false; }
        for (auto& k : row_keys) {
            os << (first ? "" : ",") << (row.contains(k) ? cell(row[k]) : "");
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

} // namespace severi::ops
