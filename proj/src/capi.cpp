#include "severi/severi.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "severi/errors.hpp"
#include "severi/json_ops.hpp"

struct severi_ctx {
    std::string last_error;
    std::string last_code;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int usage_status(severi::ErrorCode c) {
    using severi::ErrorCode;
    switch (c) {
        case ErrorCode::parse_error:
        case ErrorCode::unsupported_format:
            return SEVERI_ERR_USAGE;
        default:
            return SEVERI_ERR_DOMAIN;
    }
}

template <class Fn>
int run(severi_ctx* ctx, char** out_json, Fn&& fn) {
    if (!ctx) return SEVERI_ERR_USAGE;
    ctx->last_error.clear();
    ctx->last_code.clear();
    try {
        severi::ops::json result = fn();
        if (!out_json) {
            ctx->last_error = "null output pointer";
            ctx->last_code = "invalid_input";
            return SEVERI_ERR_USAGE;
        }
        *out_json = dup_string(result.dump());
        return SEVERI_OK;
    } catch (const severi::Error& e) {
        ctx->last_error = e.what();
        ctx->last_code = e.code_name();
        return usage_status(e.code());
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        ctx->last_code = "internal_error";
        return SEVERI_ERR_DOMAIN;
    }
}

const char* safe_cstr(const char* s, const char* what, severi_ctx* ctx) {
    if (s) return s;
    if (ctx) {
        ctx->last_error = std::string("null argument: ") + what;
        ctx->last_code = "invalid_input";
    }
    return nullptr;
}

} // namespace

extern "C" {

severi_ctx* severi_ctx_new(void) { return new severi_ctx(); }
void severi_ctx_free(severi_ctx* ctx) { delete ctx; }

const char* severi_last_error(const severi_ctx* ctx) {
    return ctx ? ctx->last_error.c_str() : "";
}
const char* severi_last_error_code(const severi_ctx* ctx) {
    return ctx ? ctx->last_code.c_str() : "";
}

const char* severi_version(void) { return "0.1.0"; }

void severi_string_free(char* s) { std::free(s); }

int severi_germ_analyze(severi_ctx* ctx, const char* poly, char** out_json) {
    if (!safe_cstr(poly, "poly", ctx)) return SEVERI_ERR_USAGE;
    return run(ctx, out_json, [&] { return severi::ops::germ_analyze(poly); });
}

int severi_family_scan(severi_ctx* ctx, const char* family_json, const char* samples,
                       char** out_json) {
    if (!safe_cstr(family_json, "family_json", ctx) || !safe_cstr(samples, "samples", ctx))
        return SEVERI_ERR_USAGE;
    return run(ctx, out_json, [&] { return severi::ops::family_scan(family_json, samples); });
}

int severi_family_stratify(severi_ctx* ctx, const char* a, const char* b, char** out_json) {
    if (!safe_cstr(a, "a", ctx) || !safe_cstr(b, "b", ctx)) return SEVERI_ERR_USAGE;
    return run(ctx, out_json, [&] { return severi::ops::family_stratify_point(a, b); });
}

int severi_family_scan_discriminant(severi_ctx* ctx, const char* t_values, char** out_json) {
    if (!safe_cstr(t_values, "t_values", ctx)) return SEVERI_ERR_USAGE;
    return run(ctx, out_json, [&] { return severi::ops::family_stratify_scan(t_values); });
}

int severi_strata_expdim(severi_ctx* ctx, const char* query_json, char** out_json) {
    if (!safe_cstr(query_json, "query_json", ctx)) return SEVERI_ERR_USAGE;
    return run(ctx, out_json, [&] { return severi::ops::strata_expdim(query_json); });
}

int severi_defmap_rank(severi_ctx* ctx, const char* spec_json, char** out_json) {
    if (!safe_cstr(spec_json, "spec_json", ctx)) return SEVERI_ERR_USAGE;
    return run(ctx, out_json, [&] { return severi::ops::defmap_rank(spec_json); });
}

int severi_defmap_realize(severi_ctx* ctx, const char* spec_json, const char* target,
                          char** out_json) {
    if (!safe_cstr(spec_json, "spec_json", ctx) || !safe_cstr(target, "target", ctx))
        return SEVERI_ERR_USAGE;
    return run(ctx, out_json, [&] { return severi::ops::defmap_realize(spec_json, target); });
}

int severi_tropical_count(severi_ctx* ctx, int d, int delta, const char* algorithm,
                          char** out_json) {
    if (!safe_cstr(algorithm, "algorithm", ctx)) return SEVERI_ERR_USAGE;
    return run(ctx, out_json, [&] { return severi::ops::tropical_count(d, delta, algorithm); });
}

int severi_tropical_contract(severi_ctx* ctx, const char* curve_json, const char* edges,
                             char** out_json) {
    if (!safe_cstr(curve_json, "curve_json", ctx) || !safe_cstr(edges, "edges", ctx))
        return SEVERI_ERR_USAGE;
    return run(ctx, out_json, [&] { return severi::ops::tropical_contract(curve_json, edges); });
}

int severi_tropical_cusp_signature(severi_ctx* ctx, const char* curve_json, const char* edges,
                                   char** out_json) {
    if (!safe_cstr(curve_json, "curve_json", ctx) || !safe_cstr(edges, "edges", ctx))
        return SEVERI_ERR_USAGE;
    return run(ctx, out_json, [&] {
        return severi::ops::tropical_cusp_signature(curve_json, edges);
    });
}

int severi_json_to_csv(severi_ctx* ctx, const char* result_json, char** out_csv) {
    if (!safe_cstr(result_json, "result_json", ctx)) return SEVERI_ERR_USAGE;
    if (!ctx) return SEVERI_ERR_USAGE;
    ctx->last_error.clear();
    ctx->last_code.clear();
    try {
        auto j = severi::ops::json::parse(result_json, nullptr, false);
        if (j.is_discarded())
            severi::fail(severi::ErrorCode::parse_error, "malformed JSON input");
        std::string csv = severi::ops::to_csv(j);
        if (!out_csv) return SEVERI_ERR_USAGE;
        *out_csv = dup_string(csv);
        return SEVERI_OK;
    } catch (const severi::Error& e) {
        ctx->last_error = e.what();
        ctx->last_code = e.code_name();
        return usage_status(e.code());
    } catch (const std::exception& e) {
        ctx->last_error = e.what();
        ctx->last_code = "internal_error";
        return SEVERI_ERR_DOMAIN;
    }
}

} // extern "C"
