#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "severi/errors.hpp"
#include "severi/rational.hpp"

namespace severi {

/// Dense univariate polynomial over a commutative coefficient type K.
/// K must be constructible from int and support +, -, *, ==. The
/// division-based operations (divmod, gcd, monic) additionally require
/// K to be a field with operator/.
template <class K>
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(int c) { if (!(K(c) == K(0))) coeffs_.push_back(K(c)); }
    explicit UPoly(const K& c) { if (!(c == K(0))) coeffs_.push_back(c); }
    explicit UPoly(std::vector<K> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

    static UPoly variable() { return UPoly(std::vector<K>{K(0), K(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const K& leading() const {
        if (is_zero()) fail(ErrorCode::zero_polynomial, "leading coefficient of zero polynomial");
        return coeffs_.back();
    }

    K coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs_.size())) return K(0);
        return coeffs_[static_cast<std::size_t>(i)];
    }

    const std::vector<K>& coeffs() const { return coeffs_; }

    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly operator+(const UPoly& o) const {
        std::vector<K> c(std::max(coeffs_.size(), o.coeffs_.size()), K(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] = c[i] + o.coeffs_[i];
        return UPoly(std::move(c));
    }

    UPoly operator-() const {
        std::vector<K> c = coeffs_;
        for (auto& x : c) x = K(0) - x;
        UPoly r;
        r.coeffs_ = std::move(c);
        return r;
    }

    UPoly operator-(const UPoly& o) const { return *this + (-o); }

    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly();
        std::vector<K> c(coeffs_.size() + o.coeffs_.size() - 1, K(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
        return UPoly(std::move(c));
    }

    UPoly operator*(const K& s) const {
        std::vector<K> c = coeffs_;
        for (auto& x : c) x = x * s;
        return UPoly(std::move(c));
    }

    /// Multiply by x^n.
    UPoly shift_up(int n) const {
        if (is_zero() || n == 0) return *this;
        std::vector<K> c(coeffs_.size() + static_cast<std::size_t>(n), K(0));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(n)] = coeffs_[i];
        return UPoly(std::move(c));
    }

    K eval(const K& x) const {
        K acc(0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    UPoly derivative() const {
        if (coeffs_.size() <= 1) return UPoly();
        std::vector<K> c(coeffs_.size() - 1, K(0));
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            c[i - 1] = coeffs_[i] * K(static_cast<int>(i));
        return UPoly(std::move(c));
    }

    /// p(x + a).
    UPoly translate(const K& a) const {
        UPoly result;
        // Horner from the top: result = result*(x+a) + c_i
        UPoly xa(std::vector<K>{a, K(1)});
        for (std::size_t i = coeffs_.size(); i-- > 0;)
            result = result * xa + UPoly(coeffs_[i]);
        return result;
    }

    /// Quotient and remainder; requires a field K and o != 0.
    std::pair<UPoly, UPoly> divmod(const UPoly& o) const {
        if (o.is_zero()) fail(ErrorCode::zero_polynomial, "division by zero polynomial");
        UPoly rem = *this;
        std::vector<K> q;
        int dq = degree() - o.degree();
        if (dq < 0) return {UPoly(), rem};
        q.assign(static_cast<std::size_t>(dq) + 1, K(0));
        const K& lead = o.leading();
        while (!rem.is_zero() && rem.degree() >= o.degree()) {
            int k = rem.degree() - o.degree();
            K f = rem.leading() / lead;
            q[static_cast<std::size_t>(k)] = f;
            rem = rem - (o * f).shift_up(k);
        }
        return {UPoly(std::move(q)), rem};
    }

    UPoly operator/(const UPoly& o) const { return divmod(o).first; }
    UPoly operator%(const UPoly& o) const { return divmod(o).second; }

    /// Exact division; throws if the remainder is nonzero.
    UPoly exact_div(const UPoly& o) const {
        auto [q, r] = divmod(o);
        if (!r.is_zero()) fail(ErrorCode::assertion_failure, "inexact polynomial division");
        return q;
    }

    bool divides(const UPoly& dividend) const { return (dividend % *this).is_zero(); }

    UPoly monic() const {
        if (is_zero()) return *this;
        K inv = K(1) / leading();
        return *this * inv;
    }

private:
    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == K(0)) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

using QUPoly = UPoly<Rat>;

/// Monic gcd via the Euclidean algorithm (field coefficients).
template <class K>
UPoly<K> upoly_gcd(UPoly<K> a, UPoly<K> b) {
    while (!b.is_zero()) {
        UPoly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
void upoly_ext_gcd(const UPoly<K>& a, const UPoly<K>& b,
                   UPoly<K>& g, UPoly<K>& s, UPoly<K>& t) {
    UPoly<K> r0 = a, r1 = b;
    UPoly<K> s0(1), s1(0), t0(0), t1(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        UPoly<K> s2 = s0 - q * s1;
        UPoly<K> t2 = t0 - q * t1;
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) { g = r0; s = s0; t = t0; return; }
    K inv = K(1) / r0.leading();
    g = r0 * inv; s = s0 * inv; t = t0 * inv;
}

/// Square-free part: p / gcd(p, p').
template <class K>
UPoly<K> squarefree_part(const UPoly<K>& p) {
    if (p.is_zero()) return p;
    UPoly<K> g = upoly_gcd(p, p.derivative());
    if (g.degree() <= 0) return p.monic();
    return p.exact_div(g).monic();
}

/// Yun's square-free decomposition. Returns pairs (factor, multiplicity)
/// with multiplicities strictly increasing; factors monic, square-free,
/// pairwise coprime, and p = lead * prod factor^mult.
template <class K>
std::vector<std::pair<UPoly<K>, int>> yun_squarefree(const UPoly<K>& p) {
    std::vector<std::pair<UPoly<K>, int>> out;
    if (p.degree() <= 0) return out;
    UPoly<K> f = p.monic();
    UPoly<K> d = f.derivative();
    UPoly<K> a = upoly_gcd(f, d);
    UPoly<K> b = f.exact_div(a);
    UPoly<K> c = d.exact_div(a);
    int i = 1;
    while (b.degree() > 0) {
        UPoly<K> w = c - b.derivative();
        UPoly<K> g = upoly_gcd(b, w);
        if (g.degree() > 0) out.emplace_back(g, i);
        b = b.exact_div(g);
        c = w.exact_div(g);
        ++i;
    }
    return out;
}

} // namespace severi
