#include "severi/germ.hpp"

#include <limits>
#include <sstream>
#include <type_traits>

#include "severi/factor.hpp"
#include "severi/linalg.hpp"
#include "severi/numberfield.hpp"

namespace severi {

namespace {

// ---- generic helpers over the coefficient field ------------------------

template <class K>
int order_at_zero(const UPoly<K>& u) {
    if (u.is_zero()) return -1;
    for (int i = 0; i <= u.degree(); ++i)
        if (!(u.coeff(i) == K(0))) return i;
    return -1;
}

std::string equation_string(const QPoly& p) { return poly_to_string(p, "x", "y"); }

std::string equation_string(const BPoly<ExtElem>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : p.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        if (k.first) os << "*x^" << k.first;
        if (k.second) os << "*y^" << k.second;
    }
    return os.str();
}

std::string scalar_string(const Rat& c) { return rat_to_string(c); }
std::string scalar_string(const ExtElem& c) { return c.to_string(); }

// Distinct roots of g lying in the coefficient field, plus the monic
// square-free root-free cofactor.
std::vector<Rat> distinct_field_roots(const UPoly<Rat>& g, UPoly<Rat>& cofactor) {
    QUPoly cof;
    auto rr = rational_roots(g, &cof);
    std::vector<Rat> out;
    out.reserve(rr.size());
    for (auto& [r, m] : rr) out.push_back(r);
    cofactor = cof.degree() > 0 ? squarefree_part(cof) : cof;
    return out;
}

std::vector<ExtElem> distinct_field_roots(const UPoly<ExtElem>& g, UPoly<ExtElem>& cofactor) {
    std::shared_ptr<const ExtField> field;
    bool all_rational = true;
    for (int i = 0; i <= g.degree(); ++i) {
        if (!field) field = g.coeff(i).field();
        if (!g.coeff(i).is_rational()) all_rational = false;
    }
    if (all_rational) {
        std::vector<Rat> rc(static_cast<std::size_t>(g.degree()) + 1);
        for (int i = 0; i <= g.degree(); ++i) rc[static_cast<std::size_t>(i)] = g.coeff(i).rational_value();
        QUPoly cof;
        auto rr = rational_roots(QUPoly(std::move(rc)), &cof);
        std::vector<ExtElem> out;
        for (auto& [r, m] : rr) out.push_back(field ? ExtElem(field, QUPoly(r)) : ExtElem(r));
        cofactor = lift_to_ext(cof.degree() > 0 ? squarefree_part(cof) : cof, field);
        return out;
    }
    // Extract the root 0; other field-rational roots surface as degree-1
    // clusters of the profile refinement.
    std::vector<ExtElem> out;
    UPoly<ExtElem> work = g;
    bool zero_root = false;
    while (work.degree() > 0 && work.coeff(0) == ExtElem(0)) {
        work = work.exact_div(UPoly<ExtElem>::variable());
        zero_root = true;
    }
    if (zero_root) out.push_back(field ? ExtElem(field, QUPoly(Rat(0))) : ExtElem(0));
    cofactor = work.degree() > 0 ? squarefree_part(work) : work;
    return out;
}

// ---- profile clusters ---------------------------------------------------

template <class K>
struct OrdProbe {
    int min_ord = 0;
    bool uniform = true;
    UPoly<K> splitter;
};

// min over the roots of square-free q of the root multiplicity in c;
// uniform == false means some roots have strictly higher multiplicity,
// collected by `splitter` (a proper monic divisor of q).
template <class K>
OrdProbe<K> probe_ord(const UPoly<K>& q, const UPoly<K>& c) {
    OrdProbe<K> out;
    UPoly<K> e = c;
    while ((e % q).is_zero()) {
        ++out.min_ord;
        e = e.derivative();
        if (e.is_zero())
            fail(ErrorCode::assertion_failure, "derivative chain exhausted in cluster probe");
    }
    UPoly<K> s = upoly_gcd(q, e);
    if (s.degree() > 0) {
        out.uniform = false;
        out.splitter = s;
    }
    return out;
}

template <class K>
struct ClusterInfo {
    UPoly<K> q;        // monic, square-free; roots are the cluster
    long mult = 0;     // multiplicity of the strict transform at each root
    int trans_ord = 0; // intersection order with the exceptional line
};

// Split q0 into clusters on which the strict transform h behaves
// uniformly (same multiplicity and tangency order at every root).
template <class K>
std::vector<ClusterInfo<K>> analyze_clusters(const UPoly<K>& q0, const BPoly<K>& h) {
    int dx = h.degree_x();
    std::vector<UPoly<K>> work{q0.monic()}, stable;
    while (!work.empty()) {
        UPoly<K> q = work.back();
        work.pop_back();
        if (q.degree() <= 0) continue;
        bool split = false;
        for (int j = 0; j <= dx && !split; ++j) {
            UPoly<K> cj = h.coeff_of_x(j);
            if (cj.is_zero()) continue;
            auto probe = probe_ord(q, cj);
            if (!probe.uniform) {
                work.push_back(probe.splitter);
                work.push_back(q.exact_div(probe.splitter).monic());
                split = true;
            }
        }
        if (!split) stable.push_back(q);
    }
    std::vector<ClusterInfo<K>> out;
    for (auto& q : stable) {
        ClusterInfo<K> ci;
        ci.q = q;
        long m = std::numeric_limits<long>::max();
        for (int j = 0; j <= dx; ++j) {
            UPoly<K> cj = h.coeff_of_x(j);
            if (cj.is_zero()) continue;
            auto probe = probe_ord(q, cj);
            if (j == 0) ci.trans_ord = probe.min_ord;
            m = std::min(m, static_cast<long>(j) + probe.min_ord);
        }
        ci.mult = m;
        out.push_back(std::move(ci));
    }
    return out;
}

// ---- the resolver -------------------------------------------------------

class Resolver {
public:
    explicit Resolver(const GermOptions& opt) : opt_(opt) {}

    BlowupTree run(const QPoly& f) {
        if (f.is_zero()) fail(ErrorCode::zero_polynomial, "cannot resolve the zero polynomial");
        if (!(f.eval(Rat(0), Rat(0)) == Rat(0)))
            fail(ErrorCode::invalid_input, "germ does not vanish at the origin");
        QPoly common = bivariate_gcd(f, bivariate_gcd(f.derivative_x(), f.derivative_y()));
        if (common.total_degree() > 0 && common.eval(Rat(0), Rat(0)) == Rat(0))
            fail(ErrorCode::non_isolated,
                 "singularity at the origin is not isolated (repeated component through 0)");
        if (f.order_at_origin() <= 1) {
            tree_.smooth_germ = true;
            return std::move(tree_);
        }
        resolve_point<Rat>(f, false, false, 1, -1, 0, "origin");
        return std::move(tree_);
    }

private:
    int add_node(int parent, long mult, long weight, bool bookkeeping,
                 const std::string& center, const std::string& eq) {
        BlowupNode n;
        n.id = static_cast<int>(tree_.nodes.size());
        n.parent = parent;
        n.mult = mult;
        n.weight = weight;
        n.bookkeeping = bookkeeping;
        n.center = center;
        n.local_equation = eq;
        tree_.nodes.push_back(std::move(n));
        if (parent >= 0) tree_.nodes[static_cast<std::size_t>(parent)].children.push_back(tree_.nodes.back().id);
        return tree_.nodes.back().id;
    }

    void credit_branch(int node, long w) {
        if (node < 0) fail(ErrorCode::assertion_failure, "branch credited above the root");
        tree_.nodes[static_cast<std::size_t>(node)].branches_here += w;
    }

    template <class K>
    void resolve_point(const BPoly<K>& h, bool exc_x0, bool exc_y0,
                       long weight, int parent, int depth, const std::string& center) {
        constexpr bool in_extension = std::is_same_v<K, ExtElem>;
        long m = h.order_at_origin();
        if (m < 1) fail(ErrorCode::assertion_failure, "strict transform misses its center");

        if (m == 1) {
            bool transverse = true;
            if (exc_x0 && order_at_zero(h.restrict_x0()) != 1) transverse = false;
            if (transverse && exc_y0 && order_at_zero(h.restrict_y0()) != 1) transverse = false;
            if (transverse) {
                credit_branch(parent, weight);
                return;
            }
        }
        if (depth >= opt_.blowup_depth_cap)
            fail(ErrorCode::resolution_depth_exceeded,
                 "blow-up depth cap exceeded (" + std::to_string(opt_.blowup_depth_cap) + ")");

        int id = add_node(parent, m, weight, m == 1, center, equation_string(h));

        // chart covering the tangent direction x = 0
        BPoly<K> h2 = h.blowup_chart_y().divide_y_power(static_cast<int>(m));
        if (h2.eval(K(0), K(0)) == K(0))
            resolve_point<K>(h2, exc_x0, true, weight, id, depth + 1, "dir x=0");

        // chart covering directions y = c*x
        BPoly<K> h1 = h.blowup_chart_x().divide_x_power(static_cast<int>(m));
        UPoly<K> g = h1.restrict_x0();
        if (g.is_zero())
            fail(ErrorCode::assertion_failure, "strict transform contains the exceptional line");

        UPoly<K> cofactor;
        for (const K& c : distinct_field_roots(g, cofactor)) {
            BPoly<K> hc = h1.translate_y(c);
            resolve_point<K>(hc, true, exc_y0 && c == K(0), weight, id, depth + 1,
                             "dir y=" + scalar_string(c) + "*x");
        }
        if (cofactor.degree() <= 0) return;

        for (auto& ci : analyze_clusters(cofactor, h1)) {
            if (ci.q.degree() == 1) {
                // a field-rational direction isolated by the refinement
                K c = K(0) - ci.q.coeff(0);
                BPoly<K> hc = h1.translate_y(c);
                resolve_point<K>(hc, true, false, weight, id, depth + 1,
                                 "dir y=" + scalar_string(c) + "*x");
                continue;
            }
            if (ci.mult == 1 && ci.trans_ord == 1) {
                // smooth transverse conjugate points: one branch each
                credit_branch(id, weight * ci.q.degree());
                continue;
            }
            if constexpr (in_extension) {
                fail(ErrorCode::resolution_depth_exceeded,
                     "cluster requires a nested algebraic extension (one level supported)");
            } else {
                for (auto& q : factor_squarefree_rootfree(ci.q)) {
                    auto field = std::make_shared<ExtField>(ExtField{q});
                    ExtElem alpha = ExtElem::generator(field);
                    BPoly<ExtElem> lifted = lift_to_ext(h1, field).translate_y(alpha);
                    resolve_point<ExtElem>(lifted, true, false,
                                           weight * q.degree(), id, depth + 1,
                                           "cluster of " + upoly_to_string(q, "c"));
                }
            }
        }
    }

    GermOptions opt_;
    BlowupTree tree_;
};

// ---- truncated local-algebra quotients ----------------------------------

long quotient_dim(const std::vector<QPoly>& gens, int D) {
    const int n_mono = D * (D + 1) / 2; // monomials of total degree < D
    EchelonAccumulator acc(static_cast<std::size_t>(n_mono));
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        int og = g.order_at_origin();
        for (int t = 0; t + og < D; ++t) {
            for (int a = t; a >= 0; --a) {
                int b = t - a;
                std::vector<Rat> row(static_cast<std::size_t>(n_mono), Rat(0));
                bool nonzero = false;
                for (auto& [k, c] : g.terms()) {
                    int i = k.first + a, j = k.second + b;
                    if (i + j >= D) continue;
                    row[static_cast<std::size_t>((i + j) * (i + j + 1) / 2 + j)] += c;
                    nonzero = true;
                }
                if (nonzero) acc.add_row(std::move(row));
            }
        }
    }
    return n_mono - acc.rank();
}

void check_isolated_inputs(const QPoly& f) {
    if (f.is_zero()) fail(ErrorCode::zero_polynomial, "zero polynomial");
    if (!(f.eval(Rat(0), Rat(0)) == Rat(0)))
        fail(ErrorCode::invalid_input, "germ does not vanish at the origin");
    QPoly common = bivariate_gcd(f, bivariate_gcd(f.derivative_x(), f.derivative_y()));
    if (common.total_degree() > 0 && common.eval(Rat(0), Rat(0)) == Rat(0))
        fail(ErrorCode::non_isolated,
             "singularity at the origin is not isolated (repeated component through 0)");
}

long stabilized_quotient(const QPoly& f, const std::vector<QPoly>& gens, const GermOptions& opt) {
    int D = std::max(2, 2 * f.total_degree());
    while (D <= opt.quotient_degree_cap) {
        long v1 = quotient_dim(gens, D);
        long v2 = quotient_dim(gens, D + 1);
        if (v1 == v2) return v1; // stabilization between D and D+1
        D *= 2;
    }
    fail(ErrorCode::non_isolated, "truncated quotient did not stabilize below the degree cap");
}

} // namespace

long multiplicity(const QPoly& f) {
    if (f.is_zero()) fail(ErrorCode::zero_polynomial, "multiplicity of zero polynomial");
    return f.order_at_origin();
}

long milnor_number(const QPoly& f, const GermOptions& opt) {
    check_isolated_inputs(f);
    return stabilized_quotient(f, {f.derivative_x(), f.derivative_y()}, opt);
}

long tjurina_number(const QPoly& f, const GermOptions& opt) {
    check_isolated_inputs(f);
    return stabilized_quotient(f, {f, f.derivative_x(), f.derivative_y()}, opt);
}

BlowupTree resolve(const QPoly& f, const GermOptions& opt) {
    Resolver r(opt);
    return r.run(f);
}

long delta_invariant(const QPoly& f, const GermOptions& opt) { return resolve(f, opt).delta(); }

long branch_count(const QPoly& f, const GermOptions& opt) { return resolve(f, opt).branches(); }

GermReport classify(const QPoly& f, const GermOptions& opt) {
    GermReport rep;
    rep.multiplicity = multiplicity(f);
    if (!(f.eval(Rat(0), Rat(0)) == Rat(0)))
        fail(ErrorCode::invalid_input, "germ does not vanish at the origin");
    rep.milnor = milnor_number(f, opt);
    rep.tjurina = tjurina_number(f, opt);
    BlowupTree tree = resolve(f, opt);
    rep.delta = tree.delta();
    rep.branches = tree.branches();

    // Milnor formula across the two independent pipelines.
    if (rep.milnor != 2 * rep.delta - rep.branches + 1)
        fail(ErrorCode::assertion_failure,
             "Milnor formula cross-check failed: mu=" + std::to_string(rep.milnor) +
                 " delta=" + std::to_string(rep.delta) + " r=" + std::to_string(rep.branches));
    if (rep.tjurina > rep.milnor)
        fail(ErrorCode::assertion_failure, "tau > mu");

    if (rep.multiplicity <= 1) {
        rep.ade = {AdeLabel::Kind::Smooth, 0};
    } else if (rep.multiplicity == 2 && rep.milnor >= 1) {
        rep.ade = {AdeLabel::Kind::A, static_cast<int>(rep.milnor)};
    } else if (rep.multiplicity == 3 && rep.milnor == 4 && rep.branches == 3) {
        rep.ade = {AdeLabel::Kind::D, 4};
    } else {
        rep.ade = {AdeLabel::Kind::Other, 0};
    }
    return rep;
}

} // namespace severi
