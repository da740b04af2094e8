#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>
#include <thread>

#include "severi/germ.hpp"

using namespace severi;

namespace {

QPoly germ(const std::string& s) { return parse_poly(s, "x", "y"); }

// y^2 - x^(k+1), the A_k normal form
QPoly ak_normal_form(int k) {
    QPoly f;
    f.add_term(0, 2, Rat(1));
    f.add_term(k + 1, 0, Rat(-1));
    return f;
}

} // namespace

TEST_CASE("multiplicity") {
    CHECK(multiplicity(germ("y^2 - x^3")) == 2);
    CHECK(multiplicity(germ("x")) == 1);
    CHECK(multiplicity(germ("x^2*y + x*y^2")) == 3); // x*y*(x+y) expanded
    CHECK_THROWS_AS(multiplicity(QPoly()), Error);
}

TEST_CASE("milnor numbers of the basic germs") {
    CHECK(milnor_number(germ("y^2 - x^2")) == 1);
    CHECK(milnor_number(germ("y^2 - x^3")) == 2);
    CHECK(milnor_number(germ("y^2 - x^4")) == 3);
}

TEST_CASE("tjurina numbers") {
    CHECK(tjurina_number(germ("y^2 - x^2")) == 1);
    CHECK(tjurina_number(germ("y^2 - x^3")) == 2);
    CHECK(tjurina_number(germ("y^2 - x^5")) == 4);
}

TEST_CASE("non-isolated germs are rejected") {
    CHECK_THROWS_AS(milnor_number(germ("x^2*y^2")), Error);
    try {
        milnor_number(germ("x^2*y^2"));
        FAIL("expected non_isolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::non_isolated);
    }
}

TEST_CASE("resolve: cusp tree shape") {
    BlowupTree t = resolve(germ("y^2 - x^3"));
    REQUIRE(t.nodes.size() >= 1);
    CHECK(t.nodes[0].mult == 2);
    // one further bookkeeping blow-up for transversality, contributing 0 to delta
    for (std::size_t i = 1; i < t.nodes.size(); ++i) CHECK(t.nodes[i].mult == 1);
    CHECK(t.delta() == 1);
    CHECK(t.branches() == 1);
}

TEST_CASE("resolve: tacnode is a (2,2) chain") {
    BlowupTree t = resolve(germ("y^2 - x^4"));
    std::vector<long> mults;
    for (auto& n : t.nodes) mults.push_back(n.mult);
    REQUIRE(mults.size() == 2);
    CHECK(mults[0] == 2);
    CHECK(mults[1] == 2);
    CHECK(t.delta() == 2);
}

TEST_CASE("resolve: smooth germ gives the empty tree") {
    BlowupTree t = resolve(germ("y - x^2"));
    CHECK(t.nodes.empty());
    CHECK(t.smooth_germ);
    CHECK(t.branches() == 1);
    CHECK(t.delta() == 0);
}

TEST_CASE("delta invariants") {
    CHECK(delta_invariant(germ("y^2 - x^2")) == 1);
    CHECK(delta_invariant(germ("y^2 - x^3")) == 1);
    CHECK(delta_invariant(germ("y^2 - x^4")) == 2);
    CHECK(delta_invariant(germ("x^2*y + x*y^2")) == 3); // ordinary triple point
}

TEST_CASE("branch counts") {
    CHECK(branch_count(germ("y^2 - x^2")) == 2);
    CHECK(branch_count(germ("y^2 - x^3")) == 1);
    CHECK(branch_count(germ("x^2*y + x*y^2")) == 3);
    // conjugate branches count with their field degree
    CHECK(branch_count(germ("y^2 + x^2")) == 2);
}

TEST_CASE("classify: node, cusp, tacnode") {
    GermReport node = classify(germ("y^2 - x^2"));
    CHECK(node.multiplicity == 2);
    CHECK(node.milnor == 1);
    CHECK(node.tjurina == 1);
    CHECK(node.delta == 1);
    CHECK(node.branches == 2);
    CHECK(node.ade.str() == "A1");

    GermReport cusp = classify(germ("y^2 - x^3"));
    CHECK(cusp.milnor == 2);
    CHECK(cusp.tjurina == 2);
    CHECK(cusp.delta == 1);
    CHECK(cusp.branches == 1);
    CHECK(cusp.ade.str() == "A2");

    GermReport tac = classify(germ("y^2 - x^4"));
    CHECK(tac.milnor == 3);
    CHECK(tac.tjurina == 3);
    CHECK(tac.delta == 2);
    CHECK(tac.branches == 2);
    CHECK(tac.ade.str() == "A3");
}

TEST_CASE("A_k table: mu = tau = k, delta = ceil(k/2), branches by parity") {
    for (int k = 1; k <= 8; ++k) {
        GermReport r = classify(ak_normal_form(k));
        CHECK(r.multiplicity == 2);
        CHECK(r.milnor == k);
        CHECK(r.tjurina == k);
        CHECK(r.delta == (k + 1) / 2);
        CHECK(r.branches == (k % 2 == 1 ? 2 : 1));
        CHECK(r.ade.str() == "A" + std::to_string(k));
    }
}

TEST_CASE("D4 classification") {
    GermReport r = classify(germ("x^2*y + x*y^2"));
    CHECK(r.multiplicity == 3);
    CHECK(r.milnor == 4);
    CHECK(r.branches == 3);
    CHECK(r.ade.str() == "D4");
}

TEST_CASE("everything outside the (m, mu, r) table is Other, never guessed") {
    // x(y^2 + x^3): m=3, mu=5; not in the lookup table
    GermReport d5 = classify(germ("x*y^2 + x^4"));
    CHECK(d5.multiplicity == 3);
    CHECK(d5.milnor == 5);
    CHECK(d5.ade.str() == "Other");
    // E6 = y^3 - x^4
    GermReport e6 = classify(germ("y^3 - x^4"));
    CHECK(e6.milnor == 6);
    CHECK(e6.ade.str() == "Other");
}

TEST_CASE("germs with irrational tangent directions") {
    // (y^2 - 2x^2)^2 + x^5: smooth conjugate points after one blow-up
    GermReport a = classify(germ("y^4 - 4*x^2*y^2 + 4*x^4 + x^5"));
    CHECK(a.delta == 6);
    CHECK(a.branches == 2);
    CHECK(a.milnor == 11);

    // (y^2 - 2x^2)^2 + x^7: singular conjugate points; the resolution
    // recenters in Q(sqrt 2) and keeps all arithmetic exact
    GermReport b = classify(germ("y^4 - 4*x^2*y^2 + 4*x^4 + x^7"));
    CHECK(b.delta == 8);
    CHECK(b.branches == 2);
    CHECK(b.milnor == 15);

    // (x^2 + y^2)^2 + x^5: same shape over Q(i)
    GermReport c = classify(germ("x^4 + 2*x^2*y^2 + y^4 + x^5"));
    CHECK(c.delta == 6);
    CHECK(c.branches == 2);
    CHECK(c.milnor == 11);

    // node with irrational branches y = +- sqrt(2) x
    GermReport d = classify(germ("y^2 - 2*x^2"));
    CHECK(d.ade.str() == "A1");
    CHECK(d.branches == 2);
}

TEST_CASE("germ tangent to the x = 0 direction uses the second chart") {
    GermReport r = classify(germ("x^2 - y^3"));
    CHECK(r.milnor == 2);
    CHECK(r.delta == 1);
    CHECK(r.branches == 1);
    CHECK(r.ade.str() == "A2");
}

TEST_CASE("a pair of transverse cusps") {
    // x^6 - y^4 = (x^3 - y^2)(x^3 + y^2): delta = 1 + 1 + I(b1, b2) = 8
    GermReport r = classify(germ("x^6 - y^4"));
    CHECK(r.multiplicity == 4);
    CHECK(r.delta == 8);
    CHECK(r.branches == 2);
    CHECK(r.milnor == 15);
    CHECK(r.tjurina == 15);
}

TEST_CASE("Milnor formula holds across the two pipelines") {
    const char* corpus[] = {
        "y^2 - x^2", "y^2 - x^3", "y^2 - x^4", "y^2 - x^5",
        "x^2*y + x*y^2", "y^2 + x^2", "y^3 - x^4", "y^3 - x^5",
        "x^4 - y^4", "y^4 - 4*x^2*y^2 + 4*x^4 + x^5",
    };
    for (auto* s : corpus) {
        QPoly f = germ(s);
        long mu = milnor_number(f);
        BlowupTree t = resolve(f);
        CHECK_MESSAGE(mu == 2 * t.delta() - t.branches() + 1, s);
        CHECK(tjurina_number(f) <= mu);
    }
}

TEST_CASE("invariance under unimodular coordinate changes") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> shear(-3, 3);
    const char* corpus[] = {"y^2 - x^3", "y^2 - x^4", "x^2*y + x*y^2"};
    for (auto* s : corpus) {
        QPoly f = germ(s);
        GermReport base = classify(f);
        for (int trial = 0; trial < 4; ++trial) {
            // product of two shears: always determinant 1
            long p = shear(rng), q = shear(rng);
            QPoly g = f.compose_linear(Rat(1), Rat(p), Rat(0), Rat(1))
                          .compose_linear(Rat(1), Rat(0), Rat(q), Rat(1));
            GermReport r = classify(g);
            CHECK(r.multiplicity == base.multiplicity);
            CHECK(r.milnor == base.milnor);
            CHECK(r.tjurina == base.tjurina);
            CHECK(r.delta == base.delta);
            CHECK(r.branches == base.branches);
            CHECK(r.ade.str() == base.ade.str());
        }
    }
}

TEST_CASE("error paths") {
    CHECK_THROWS_AS(classify(QPoly()), Error);
    CHECK_THROWS_AS(classify(germ("x + 1")), Error);          // does not vanish at 0
    CHECK_THROWS_AS(delta_invariant(germ("x^2*y^2")), Error); // non-isolated
}

TEST_CASE("random germs satisfy the Milnor formula across pipelines") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> nterms(2, 5), expo(0, 4), coef(-3, 3);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
        QPoly f;
        int k = nterms(rng);
        for (int i = 0; i < k; ++i) {
            int a = expo(rng), b = expo(rng);
            if (a == 0 && b == 0) continue;
            int c = coef(rng);
            if (c) f.add_term(a, b, Rat(c));
        }
        if (f.is_zero()) continue;
        try {
            // classify cross-checks mu = 2 delta - r + 1 internally and
            // raises assertion_failure on any pipeline disagreement
            GermReport r = classify(f);
            CHECK(r.tjurina <= r.milnor);
            ++checked;
        } catch (const Error& e) {
            CHECK(e.code() != ErrorCode::assertion_failure);
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("operations are safe to call concurrently") {
    const char* inputs[] = {"y^2 - x^3", "y^2 - x^5", "x^2*y + x*y^2", "y^2 + x^2"};
    long expected_mu[] = {2, 4, 4, 1};
    std::vector<std::thread> workers;
    std::array<bool, 4> ok{};
    for (int w = 0; w < 4; ++w) {
        workers.emplace_back([&, w] {
            bool all = true;
            for (int rep = 0; rep < 5; ++rep) {
                GermReport r = classify(parse_poly(inputs[w], "x", "y"));
                all = all && (r.milnor == expected_mu[w]);
            }
            ok[static_cast<std::size_t>(w)] = all;
        });
    }
    for (auto& t : workers) t.join();
    for (bool b : ok) CHECK(b);
}
