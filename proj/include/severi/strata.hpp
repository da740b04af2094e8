#pragma once

#include <string>
#include <variant>

#include "severi/errors.hpp"

namespace severi {

// Surface carrying a linear system |L|: the plane with O(d), a K3 with a
// primitive class of genus g (L^2 = 2g-2), or a Hirzebruch surface F_n
// with L = aE + bF (E the negative section, F the fiber).
struct P2Spec { long d = 1; };
struct K3Spec { long g = 2; };
struct HirzebruchSpec { long n = 0; long a = 1; long b = 0; };

class SurfaceSpec {
public:
    explicit SurfaceSpec(P2Spec s) : v_(s) { validate(); }
    explicit SurfaceSpec(K3Spec s) : v_(s) { validate(); }
    explicit SurfaceSpec(HirzebruchSpec s) : v_(s) { validate(); }

    bool is_p2() const { return std::holds_alternative<P2Spec>(v_); }
    bool is_k3() const { return std::holds_alternative<K3Spec>(v_); }
    bool is_hirzebruch() const { return std::holds_alternative<HirzebruchSpec>(v_); }
    const P2Spec& p2() const { return std::get<P2Spec>(v_); }
    const K3Spec& k3() const { return std::get<K3Spec>(v_); }
    const HirzebruchSpec& hirzebruch() const { return std::get<HirzebruchSpec>(v_); }

    std::string describe() const;

    /// True when the Hirzebruch positivity heuristic b >= a*n fails; the
    /// dimension formula assumes b large, so callers may want to warn.
    bool positivity_warning() const {
        if (!is_hirzebruch()) return false;
        const auto& h = hirzebruch();
        return h.b < h.a * h.n;
    }

private:
    void validate() const {
        if (is_p2() && p2().d < 1) fail(ErrorCode::invalid_spec, "P2 requires d >= 1");
        if (is_k3() && k3().g < 2) fail(ErrorCode::invalid_spec, "K3 requires g >= 2");
        if (is_hirzebruch()) {
            const auto& h = hirzebruch();
            if (h.a < 1) fail(ErrorCode::invalid_spec, "Hirzebruch requires a >= 1");
            if (h.n < 0) fail(ErrorCode::invalid_spec, "Hirzebruch requires n >= 0");
        }
    }
    std::variant<P2Spec, K3Spec, HirzebruchSpec> v_;
};

/// (delta, kappa): number of prescribed nodes and cusps.
struct StrataQuery {
    long delta = 0;
    long kappa = 0;
};

long linear_system_dim(const SurfaceSpec& s);
long arithmetic_genus(const SurfaceSpec& s);

/// dim|L| - delta - 2*kappa; negative values signal expected emptiness
/// and are returned unclamped.
long expected_dim(const SurfaceSpec& s, const StrataQuery& q);

/// min(floor(dim|L| / 2), p_a).
long max_cusps(const SurfaceSpec& s);

/// Which max_cusps bound binds: "dimension", "genus" or "both".
std::string max_cusps_binding(const SurfaceSpec& s);

/// delta + 2*kappa: one condition per node, two per cusp.
long conditions_imposed(const StrataQuery& q);

/// expected_dim >= 0 AND kappa <= max_cusps AND delta + kappa <= p_a.
bool nonempty_expected(const SurfaceSpec& s, const StrataQuery& q);

} // namespace severi
