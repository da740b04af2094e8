#include "severi/factor.hpp"

#include <algorithm>
#include <optional>

#include "severi/errors.hpp"

namespace severi {

namespace {

constexpr unsigned long kTrialDivisionCap = 1u << 22;
constexpr long kKroneckerBudget = 5000000;

// Prime factorization by trial division; desk-scale inputs only.
std::vector<std::pair<Int, int>> factor_int(Int n) {
    std::vector<std::pair<Int, int>> out;
    if (n < 0) n = -n;
    if (n <= 1) return out;
    unsigned long steps = 0;
    for (Int p = 2; p * p <= n; p == 2 ? p = 3 : p += 2) {
        if (++steps > kTrialDivisionCap)
            fail(ErrorCode::assertion_failure, "integer too large to factor by trial division");
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<Int> divisors_of(const Int& n) {
    auto primes = factor_int(n);
    std::vector<Int> divs{1};
    for (auto& [p, e] : primes) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Clear denominators and strip integer content; returns integer
// coefficients of a primitive polynomial with the same roots.
std::vector<Int> primitive_integer_coeffs(const QUPoly& p) {
    Int den = 1;
    for (int i = 0; i <= p.degree(); ++i) {
        Int d = p.coeff(i).get_den();
        den = den / gcd(den, d) * d;
    }
    std::vector<Int> c(static_cast<std::size_t>(p.degree()) + 1);
    Int content = 0;
    for (int i = 0; i <= p.degree(); ++i) {
        Rat scaled = p.coeff(i) * Rat(den);
        c[static_cast<std::size_t>(i)] = scaled.get_num();
        content = gcd(content, c[static_cast<std::size_t>(i)]);
    }
    if (content > 1)
        for (auto& x : c) x /= content;
    return c;
}

Int eval_int(const std::vector<Int>& c, const Int& x) {
    Int acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

// Lagrange interpolation through (xs[i], ys[i]) over Q.
QUPoly interpolate(const std::vector<Int>& xs, const std::vector<Int>& ys) {
    QUPoly acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        QUPoly basis{Rat(1)};
        Rat denom(1);
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis = basis * QUPoly(std::vector<Rat>{Rat(-xs[j]), Rat(1)});
            denom *= Rat(xs[i] - xs[j]);
        }
        acc = acc + basis * (Rat(ys[i]) / denom);
    }
    return acc;
}

// Kronecker: find one nontrivial monic factor of a primitive square-free
// integer polynomial with no rational roots, or nullopt if irreducible.
std::optional<QUPoly> kronecker_split(const QUPoly& p) {
    int n = p.degree();
    std::vector<Int> ic = primitive_integer_coeffs(p);
    long budget = kKroneckerBudget;
    for (int k = 2; k <= n / 2; ++k) {
        // evaluation points 0, 1, -1, 2, -2, ...
        std::vector<Int> xs;
        for (long v = 0; static_cast<int>(xs.size()) < k + 1; v = (v <= 0 ? 1 - v : -v))
            xs.push_back(Int(v));
        std::vector<std::vector<Int>> choices;
        for (auto& x : xs) {
            Int val = eval_int(ic, x);
            // no rational roots => nonzero at every integer
            std::vector<Int> ds = divisors_of(val);
            std::vector<Int> signed_ds;
            for (auto& d : ds) { signed_ds.push_back(d); signed_ds.push_back(-d); }
            choices.push_back(std::move(signed_ds));
        }
        // fix the first value positive: g and -g give the same factor
        choices[0].erase(
            std::remove_if(choices[0].begin(), choices[0].end(), [](const Int& d) { return d < 0; }),
            choices[0].end());
        std::vector<std::size_t> idx(xs.size(), 0);
        std::vector<Int> ys(xs.size());
        while (true) {
            if (--budget < 0)
                fail(ErrorCode::assertion_failure, "factorization budget exceeded");
            for (std::size_t i = 0; i < xs.size(); ++i) ys[i] = choices[i][idx[i]];
            QUPoly g = interpolate(xs, ys);
            if (g.degree() == k) {
                QUPoly gm = g.monic();
                if (gm.divides(p)) return gm;
            }
            // advance odometer
            std::size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == choices[pos].size()) {
                idx[pos] = 0;
                ++pos;
            }
            if (pos == idx.size()) break;
        }
    }
    return std::nullopt;
}

} // namespace

std::vector<std::pair<Rat, int>> rational_roots(const QUPoly& p, QUPoly* cofactor) {
    if (p.is_zero()) fail(ErrorCode::zero_polynomial, "roots of zero polynomial");
    std::vector<std::pair<Rat, int>> roots;
    QUPoly work = p.monic();
    // root at 0
    int z = 0;
    while (work.degree() > 0 && work.coeff(0) == Rat(0)) {
        work = work.exact_div(QUPoly::variable());
        ++z;
    }
    if (z > 0) roots.emplace_back(Rat(0), z);
    if (work.degree() > 0) {
        std::vector<Int> ic = primitive_integer_coeffs(work);
        std::vector<Int> num_divs = divisors_of(ic.front());
        std::vector<Int> den_divs = divisors_of(ic.back());
        for (auto& u : num_divs) {
            for (auto& v : den_divs) {
                if (gcd(u, v) != 1) continue;
                for (int sign : {1, -1}) {
                    Rat c(sign * u, v);
                    c.canonicalize();
                    if (!(work.eval(c) == Rat(0))) continue;
                    QUPoly lin(std::vector<Rat>{Rat(-c), Rat(1)});
                    int mult = 0;
                    while (lin.divides(work)) {
                        work = work.exact_div(lin);
                        ++mult;
                    }
                    roots.emplace_back(c, mult);
                }
            }
        }
    }
    if (cofactor) *cofactor = work.monic();
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

std::vector<QUPoly> factor_squarefree_rootfree(const QUPoly& p) {
    if (p.degree() <= 3) return {p.monic()};
    auto split = kronecker_split(p.monic());
    if (!split) return {p.monic()};
    QUPoly rest = p.monic().exact_div(*split);
    auto a = factor_squarefree_rootfree(*split);
    auto b = factor_squarefree_rootfree(rest);
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

std::vector<std::pair<QUPoly, int>> factor_rational(const QUPoly& p) {
    if (p.is_zero()) fail(ErrorCode::zero_polynomial, "factorization of zero polynomial");
    std::vector<std::pair<QUPoly, int>> out;
    for (auto& [sf, mult] : yun_squarefree(p)) {
        QUPoly cof;
        for (auto& [root, m] : rational_roots(sf, &cof)) {
            (void)m; // sf square-free: every root is simple
            out.emplace_back(QUPoly(std::vector<Rat>{Rat(-root), Rat(1)}), mult);
        }
        if (cof.degree() > 0)
            for (auto& f : factor_squarefree_rootfree(cof)) out.emplace_back(f, mult);
    }
    return out;
}

bool is_irreducible_q(const QUPoly& p) {
    if (p.degree() < 1) return false;
    if (p.degree() == 1) return true;
    if (upoly_gcd(p, p.derivative()).degree() > 0) return false;
    QUPoly cof;
    auto roots = rational_roots(p, &cof);
    if (!roots.empty()) return false;
    return factor_squarefree_rootfree(p).size() == 1;
}

} // namespace severi
