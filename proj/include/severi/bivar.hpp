#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "severi/errors.hpp"
#include "severi/rational.hpp"
#include "severi/upoly.hpp"

namespace severi {

/// Sparse bivariate polynomial over K, canonical form (no zero terms).
/// Exponent pairs are (i, j) for x^i y^j.
template <class K>
class BPoly {
public:
    using Key = std::pair<int, int>;

    BPoly() = default;
    explicit BPoly(const K& c) { if (!(c == K(0))) terms_[{0, 0}] = c; }

    static BPoly monomial(int i, int j, const K& c) {
        BPoly p;
        if (!(c == K(0))) p.terms_[{i, j}] = c;
        return p;
    }
    static BPoly var_x() { return monomial(1, 0, K(1)); }
    static BPoly var_y() { return monomial(0, 1, K(1)); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Key, K>& terms() const { return terms_; }

    void add_term(int i, int j, const K& c) {
        if (i < 0 || j < 0) fail(ErrorCode::invalid_input, "negative exponent");
        auto it = terms_.find({i, j});
        if (it == terms_.end()) {
            if (!(c == K(0))) terms_[{i, j}] = c;
        } else {
            it->second = it->second + c;
            if (it->second == K(0)) terms_.erase(it);
        }
    }

    bool operator==(const BPoly& o) const { return terms_ == o.terms_; }

    BPoly operator+(const BPoly& o) const {
        BPoly r = *this;
        for (auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    BPoly operator-(const BPoly& o) const {
        BPoly r = *this;
        for (auto& [k, c] : o.terms_) r.add_term(k.first, k.second, K(0) - c);
        return r;
    }
    BPoly operator*(const BPoly& o) const {
        BPoly r;
        for (auto& [ka, ca] : terms_)
            for (auto& [kb, cb] : o.terms_)
                r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
        return r;
    }
    BPoly operator*(const K& s) const {
        BPoly r;
        if (s == K(0)) return r;
        for (auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }

    /// Minimal total degree of a nonzero term (order of vanishing at 0).
    int order_at_origin() const {
        if (is_zero()) fail(ErrorCode::zero_polynomial, "order of zero polynomial");
        int best = -1;
        for (auto& [k, c] : terms_) {
            int d = k.first + k.second;
            if (best < 0 || d < best) best = d;
        }
        return best;
    }

    int total_degree() const {
        int best = -1;
        for (auto& [k, c] : terms_) best = std::max(best, k.first + k.second);
        return best;
    }
    int degree_x() const {
        int best = -1;
        for (auto& [k, c] : terms_) best = std::max(best, k.first);
        return best;
    }
    int degree_y() const {
        int best = -1;
        for (auto& [k, c] : terms_) best = std::max(best, k.second);
        return best;
    }

    K eval(const K& x, const K& y) const {
        // Small polynomials only; plain monomial evaluation is fine here.
        K acc(0);
        for (auto& [k, c] : terms_) {
            K t = c;
            for (int i = 0; i < k.first; ++i) t = t * x;
            for (int j = 0; j < k.second; ++j) t = t * y;
            acc = acc + t;
        }
        return acc;
    }

    BPoly derivative_x() const {
        BPoly r;
        for (auto& [k, c] : terms_)
            if (k.first > 0) r.add_term(k.first - 1, k.second, c * K(k.first));
        return r;
    }
    BPoly derivative_y() const {
        BPoly r;
        for (auto& [k, c] : terms_)
            if (k.second > 0) r.add_term(k.first, k.second - 1, c * K(k.second));
        return r;
    }

    /// Coefficient of x^i as a polynomial in y.
    UPoly<K> coeff_of_x(int i) const {
        std::vector<K> c;
        for (auto& [k, cf] : terms_) {
            if (k.first != i) continue;
            if (static_cast<int>(c.size()) <= k.second) c.resize(static_cast<std::size_t>(k.second) + 1, K(0));
            c[static_cast<std::size_t>(k.second)] = cf;
        }
        return UPoly<K>(std::move(c));
    }

    /// f(0, y).
    UPoly<K> restrict_x0() const { return coeff_of_x(0); }
    /// f(x, 0).
    UPoly<K> restrict_y0() const {
        std::vector<K> c;
        for (auto& [k, cf] : terms_) {
            if (k.second != 0) continue;
            if (static_cast<int>(c.size()) <= k.first) c.resize(static_cast<std::size_t>(k.first) + 1, K(0));
            c[static_cast<std::size_t>(k.first)] = cf;
        }
        return UPoly<K>(std::move(c));
    }

    /// Substitution f(x, x*y), the first blow-up chart. Monomial map
    /// x^i y^j -> x^(i+j) y^j.
    BPoly blowup_chart_x() const {
        BPoly r;
        for (auto& [k, c] : terms_) r.add_term(k.first + k.second, k.second, c);
        return r;
    }
    /// Substitution f(x*y, y), the second blow-up chart:
    /// x^i y^j -> x^i y^(i+j).
    BPoly blowup_chart_y() const {
        BPoly r;
        for (auto& [k, c] : terms_) r.add_term(k.first, k.first + k.second, c);
        return r;
    }

    /// Exact division by x^m (every term must have x-exponent >= m).
    BPoly divide_x_power(int m) const {
        BPoly r;
        for (auto& [k, c] : terms_) {
            if (k.first < m) fail(ErrorCode::assertion_failure, "inexact division by x power");
            r.terms_[{k.first - m, k.second}] = c;
        }
        return r;
    }
    BPoly divide_y_power(int m) const {
        BPoly r;
        for (auto& [k, c] : terms_) {
            if (k.second < m) fail(ErrorCode::assertion_failure, "inexact division by y power");
            r.terms_[{k.first, k.second - m}] = c;
        }
        return r;
    }

    /// f(x, y + a).
    BPoly translate_y(const K& a) const {
        // Collect x-slices, shift each univariate-in-y polynomial.
        BPoly r;
        for (int i = 0; i <= degree_x(); ++i) {
            UPoly<K> s = coeff_of_x(i);
            if (s.is_zero()) continue;
            UPoly<K> t = s.translate(a);
            for (int j = 0; j <= t.degree(); ++j)
                if (!(t.coeff(j) == K(0))) r.add_term(i, j, t.coeff(j));
        }
        return r;
    }
    /// f(x + a, y).
    BPoly translate_x(const K& a) const { return swap_vars().translate_y(a).swap_vars(); }

    BPoly swap_vars() const {
        BPoly r;
        for (auto& [k, c] : terms_) r.terms_[{k.second, k.first}] = c;
        return r;
    }

    /// f(a x + b y, c x + d y).
    BPoly compose_linear(const K& a, const K& b, const K& c, const K& d) const {
        BPoly X = monomial(1, 0, a) + monomial(0, 1, b);
        BPoly Y = monomial(1, 0, c) + monomial(0, 1, d);
        BPoly r;
        for (auto& [k, cf] : terms_) {
            BPoly t{cf};
            for (int i = 0; i < k.first; ++i) t = t * X;
            for (int j = 0; j < k.second; ++j) t = t * Y;
            r = r + t;
        }
        return r;
    }

    /// Drop all terms of total degree >= cap.
    BPoly truncate(int cap) const {
        BPoly r;
        for (auto& [k, c] : terms_)
            if (k.first + k.second < cap) r.terms_[k] = c;
        return r;
    }

private:
    std::map<Key, K> terms_;
};

using QPoly = BPoly<Rat>;

/// Parse the shared polynomial grammar: terms joined by + / -, each term
/// [coef][*]v1^i[*]v2^j with integer or p/q coefficients, expanded form
/// only (no parentheses). `vars` gives the accepted variable names; a
/// variable absent from a term has exponent 0.
QPoly parse_poly(const std::string& text, const std::string& var_x, const std::string& var_y);

/// Univariate front end of the same grammar (single accepted variable).
QUPoly parse_upoly(const std::string& text, const std::string& var);

std::string poly_to_string(const QPoly& p, const std::string& var_x, const std::string& var_y);
std::string upoly_to_string(const QUPoly& p, const std::string& var);

/// gcd in Q[x][y] up to a constant, via primitive polynomial remainder
/// sequences; used for the non-isolatedness pre-screen.
QPoly bivariate_gcd(const QPoly& a, const QPoly& b);

} // namespace severi
