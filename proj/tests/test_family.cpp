#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "severi/bivar.hpp"
#include "severi/family.hpp"

using namespace severi;

namespace {

MonicUnivariate poly(const std::string& s) {
    return MonicUnivariate(parse_upoly(s, "x"));
}

FamilySpec family_from(const std::vector<std::string>& coeffs) {
    FamilySpec f;
    for (auto& c : coeffs) f.coeffs.push_back(parse_upoly(c, "s"));
    return f;
}

} // namespace

TEST_CASE("classify_fiber: the cusp model x^3") {
    FiberClassification c = classify_fiber(poly("x^3"));
    REQUIRE(c.singular_points.size() == 1);
    CHECK(c.singular_points[0].ade() == "A2");
    CHECK(*c.singular_points[0].location == 0);
    CHECK(c.total_delta == 1);
    CHECK(!c.smooth);
}

TEST_CASE("classify_fiber: (x^2-1)^2 has two nodes") {
    FiberClassification c = classify_fiber(poly("x^4 - 2*x^2 + 1"));
    REQUIRE(c.singular_points.size() == 2);
    for (auto& p : c.singular_points) CHECK(p.ade() == "A1");
    CHECK(c.total_delta == 2);
    REQUIRE(c.multiplicity_profile.size() == 1);
    CHECK(c.multiplicity_profile[0] == std::pair<int, int>{2, 2});
}

TEST_CASE("classify_fiber: x^3 - 3x + 2 = (x-1)^2 (x+2)") {
    FiberClassification c = classify_fiber(poly("x^3 - 3*x + 2"));
    REQUIRE(c.singular_points.size() == 1);
    CHECK(*c.singular_points[0].location == 1);
    CHECK(c.singular_points[0].ade() == "A1");
    CHECK(c.total_delta == 1);
}

TEST_CASE("classify_fiber: square-free fibers are smooth") {
    FiberClassification c = classify_fiber(poly("x^3 + x + 1"));
    CHECK(c.smooth);
    CHECK(c.total_delta == 0);
    CHECK(c.singular_points.empty());
}

TEST_CASE("classify_fiber: irrational repeated roots are reported by factor") {
    // (x^2 - 2)^2: two conjugate A1 points
    FiberClassification c = classify_fiber(poly("x^4 - 4*x^2 + 4"));
    REQUIRE(c.singular_points.size() == 1);
    CHECK(!c.singular_points[0].location.has_value());
    CHECK(c.singular_points[0].factor_degree == 2);
    CHECK(c.singular_points[0].ade() == "A1");
    CHECK(c.total_delta == 2);
    REQUIRE(c.multiplicity_profile.size() == 1);
    CHECK(c.multiplicity_profile[0] == std::pair<int, int>{2, 2});
}

TEST_CASE("cubic discriminant") {
    CHECK(cubic_discriminant(Rat(0), Rat(0)) == 0);
    CHECK(cubic_discriminant(Rat(-3), Rat(2)) == 0);
    CHECK(cubic_discriminant(Rat(1), Rat(1)) == -31);
}

TEST_CASE("stratify_cubic") {
    CHECK(stratify_cubic(Rat(0), Rat(0)).label == CubicStratum::Label::Cusp);
    CHECK(stratify_cubic(Rat(-3), Rat(2)).label == CubicStratum::Label::OneNode);
    CHECK(stratify_cubic(Rat(1), Rat(1)).label == CubicStratum::Label::Smooth);
    CHECK(stratify_cubic(Rat(-3, 4), Rat(1, 4)).label == CubicStratum::Label::OneNode);
}

TEST_CASE("stratify agrees with classify_fiber on cubics") {
    for (int na = -8; na <= 8; ++na) {
        for (int nb = -8; nb <= 8; ++nb) {
            Rat a(na, 2), b(nb, 2);
            a.canonicalize();
            b.canonicalize();
            CubicStratum s = stratify_cubic(a, b);
            QUPoly p = QUPoly(std::vector<Rat>{b, a, Rat(0), Rat(1)});
            FiberClassification c = classify_fiber(MonicUnivariate(p));
            switch (s.label) {
                case CubicStratum::Label::Smooth:
                    CHECK(c.smooth);
                    break;
                case CubicStratum::Label::OneNode:
                    REQUIRE(c.singular_points.size() == 1);
                    CHECK(c.singular_points[0].ade() == "A1");
                    break;
                case CubicStratum::Label::Cusp:
                    REQUIRE(c.singular_points.size() == 1);
                    CHECK(c.singular_points[0].ade() == "A2");
                    break;
            }
        }
    }
}

TEST_CASE("scan_discriminant walks the parametrized boundary") {
    std::vector<Rat> ts{Rat(0), Rat(1), Rat(1, 2), Rat(-2)};
    auto strata = scan_discriminant(ts);
    REQUIRE(strata.size() == 4);
    CHECK(strata[0].label == CubicStratum::Label::Cusp);
    for (std::size_t i = 1; i < strata.size(); ++i) {
        CHECK(strata[i].label == CubicStratum::Label::OneNode);
        CHECK(strata[i].discriminant == 0);
    }
}

TEST_CASE("collision scan: (x-s)^2 (x+2s)") {
    FamilySpec fam = family_from({"2*s^3", "-3*s^2", "0", "1"});
    PathReport rep = equigeneric_path_check(fam, {Rat(1), Rat(1, 2), Rat(0)});
    REQUIRE(rep.samples.size() == 3);
    for (auto& s : rep.samples) CHECK(s.fiber.total_delta == 1);
    CHECK(rep.equigeneric);
    REQUIRE(rep.transitions.size() == 1);
    CHECK(rep.transitions[0].from_index == 1);
    CHECK(rep.transitions[0].to_index == 2);
    CHECK(rep.samples[0].labels == std::vector<std::string>{"A1"});
    CHECK(rep.samples[2].labels == std::vector<std::string>{"A2"});
}

TEST_CASE("collision scan: (x^2-s)^2, two nodes collide to a tacnode") {
    FamilySpec fam = family_from({"s^2", "0", "-2*s", "0", "1"});
    PathReport rep = equigeneric_path_check(fam, {Rat(1), Rat(0)});
    REQUIRE(rep.samples.size() == 2);
    CHECK(rep.samples[0].fiber.total_delta == 2);
    CHECK(rep.samples[1].fiber.total_delta == 2);
    CHECK(rep.equigeneric);
    CHECK(rep.samples[0].labels == std::vector<std::string>{"A1", "A1"});
    CHECK(rep.samples[1].labels == std::vector<std::string>{"A3"});
    REQUIRE(rep.transitions.size() == 1);
}

TEST_CASE("constant family has no transitions") {
    FamilySpec fam = family_from({"0", "0", "0", "1"}); // x^3 for all s
    PathReport rep = equigeneric_path_check(fam, {Rat(2), Rat(1), Rat(0)});
    CHECK(rep.equigeneric);
    CHECK(rep.transitions.empty());
    for (auto& s : rep.samples) CHECK(s.fiber.total_delta == 1);
}

TEST_CASE("delta is lower semicontinuous at corpus transitions") {
    // family with a genuine delta jump: p_s = x^2 - s (node appears at s=0)
    FamilySpec fam = family_from({"-1*s", "0", "1"});
    PathReport rep = equigeneric_path_check(fam, {Rat(1), Rat(1, 4), Rat(0)});
    CHECK(!rep.equigeneric);
    CHECK(rep.samples.back().fiber.total_delta >= rep.samples.front().fiber.total_delta);
}

TEST_CASE("profile property: squares of random square-free polynomials") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        // p = (x^2 + c1 x + c0)^2 * (x + c2), arranged square-free and coprime
        Rat c0(coef(rng)), c1(coef(rng)), c2(coef(rng));
        QUPoly p(std::vector<Rat>{c0, c1, Rat(1)});
        if (upoly_gcd(p, p.derivative()).degree() > 0) continue;
        QUPoly q(std::vector<Rat>{c2, Rat(1)});
        if (upoly_gcd(p, q).degree() > 0) continue;
        FiberClassification c = classify_fiber(MonicUnivariate(p * p * q));
        for (auto& pt : c.singular_points) CHECK(pt.root_multiplicity == 2);
        long total = 0;
        for (auto& pt : c.singular_points) total += pt.factor_degree;
        CHECK(total == 2); // the two roots of p
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(MonicUnivariate(parse_upoly("2*x^2", "x")), Error);
    CHECK_THROWS_AS(MonicUnivariate(parse_upoly("5", "x")), Error);
    CHECK(MonicUnivariate::normalized(parse_upoly("2*x^2 - 2", "x")).poly().leading() == 1);
    FamilySpec empty;
    CHECK_THROWS_AS(equigeneric_path_check(empty, {Rat(0)}), Error);
    // leading coefficient vanishes at the sample
    FamilySpec collapsing = family_from({"1", "0", "s"});
    CHECK_THROWS_AS(equigeneric_path_check(collapsing, {Rat(0)}), Error);
}
