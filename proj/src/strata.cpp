#include "severi/strata.hpp"

#include <algorithm>

namespace severi {

std::string SurfaceSpec::describe() const {
    if (is_p2()) return "P2(d=" + std::to_string(p2().d) + ")";
    if (is_k3()) return "K3(g=" + std::to_string(k3().g) + ")";
    const auto& h = hirzebruch();
    return "F" + std::to_string(h.n) + "(a=" + std::to_string(h.a) + ", b=" + std::to_string(h.b) + ")";
}

long linear_system_dim(const SurfaceSpec& s) {
    if (s.is_p2()) {
        long d = s.p2().d;
        return (d + 2) * (d + 1) / 2 - 1;
    }
    if (s.is_k3()) return s.k3().g;
    const auto& h = s.hirzebruch();
    return (h.a + 1) * (h.b + 1) - h.a * (h.a + 1) * h.n / 2 - 1;
}

long arithmetic_genus(const SurfaceSpec& s) {
    if (s.is_p2()) {
        long d = s.p2().d;
        return (d - 1) * (d - 2) / 2;
    }
    if (s.is_k3()) return s.k3().g;
    // Intersection form on F_n: E^2 = -n, E.F = 1, F^2 = 0, and
    // K = -2E - (n+2)F; then p_a = L.(L+K)/2 + 1 for L = aE + bF.
    const auto& h = s.hirzebruch();
    long l_sq = -h.n * h.a * h.a + 2 * h.a * h.b;
    long l_k = 2 * h.a * h.n - h.a * (h.n + 2) - 2 * h.b;
    return (l_sq + l_k) / 2 + 1;
}

long expected_dim(const SurfaceSpec& s, const StrataQuery& q) {
    if (q.delta < 0 || q.kappa < 0) fail(ErrorCode::invalid_spec, "delta and kappa must be nonnegative");
    return linear_system_dim(s) - q.delta - 2 * q.kappa;
}

long max_cusps(const SurfaceSpec& s) {
    return std::min(linear_system_dim(s) / 2, arithmetic_genus(s));
}

std::string max_cusps_binding(const SurfaceSpec& s) {
    long dim_bound = linear_system_dim(s) / 2;
    long genus_bound = arithmetic_genus(s);
    if (dim_bound == genus_bound) return "both";
    return dim_bound < genus_bound ? "dimension" : "genus";
}

long conditions_imposed(const StrataQuery& q) {
    if (q.delta < 0 || q.kappa < 0) fail(ErrorCode::invalid_spec, "delta and kappa must be nonnegative");
    return q.delta + 2 * q.kappa;
}

bool nonempty_expected(const SurfaceSpec& s, const StrataQuery& q) {
    return expected_dim(s, q) >= 0 && q.kappa <= max_cusps(s) &&
           q.delta + q.kappa <= arithmetic_genus(s);
}

} // namespace severi
