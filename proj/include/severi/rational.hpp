#pragma once

#include <gmpxx.h>

#include <string>

#include "severi/errors.hpp"

namespace severi {

// All arithmetic in this library is exact. Rationals are GMP mpq values,
// always kept in canonical form (lowest terms, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

/// Parse "p", "-p" or "p/q" (arbitrary precision). Throws parse_error on
/// anything else, including q = 0.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) fail(ErrorCode::parse_error, "empty rational literal");
    // mpq_set_str accepts some sloppy inputs (e.g. leading whitespace);
    // validate the character set first.
    std::size_t slashes = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c >= '0' && c <= '9') continue;
        if (c == '/' && i > 0) { ++slashes; continue; }
        if (c == '-' && (i == 0 || s[i - 1] == '/')) continue;
        fail(ErrorCode::parse_error, "bad rational literal: " + s);
    }
    if (slashes > 1 || s.back() == '/' || s.back() == '-')
        fail(ErrorCode::parse_error, "bad rational literal: " + s);
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        fail(ErrorCode::parse_error, "bad rational literal: " + s);
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        fail(ErrorCode::parse_error, "zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// Canonical string form: "p" for integers, otherwise "p/q" in lowest
/// terms with q > 0. This is the wire format used by the CLI and C API.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline bool rat_is_integer(const Rat& r) { return r.get_den() == 1; }

} // namespace severi
