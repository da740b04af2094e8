#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "severi/bivar.hpp"
#include "severi/factor.hpp"
#include "severi/linalg.hpp"
#include "severi/numberfield.hpp"

using namespace severi;

TEST_CASE("rational parse/print round trip") {
    CHECK(rat_to_string(rat_from_string("-4/6")) == "-2/3");
    CHECK(rat_to_string(rat_from_string("10/5")) == "2");
    CHECK(rat_from_string("0") == 0);
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
    CHECK_THROWS_AS(rat_from_string("1.5"), Error);
    CHECK_THROWS_AS(rat_from_string("--2"), Error);
    CHECK_THROWS_AS(rat_from_string(""), Error);
}

TEST_CASE("polynomial grammar") {
    QPoly f = parse_poly("y^2 - x^3", "x", "y");
    CHECK(f.terms().size() == 2);
    CHECK(f.eval(Rat(1), Rat(1)) == 0);
    CHECK(f.eval(Rat(4), Rat(8)) == 0);

    QPoly g = parse_poly("x^2*y + x*y^2", "x", "y");
    CHECK(g.degree_x() == 2);
    CHECK(g.degree_y() == 2);

    CHECK(parse_poly("1/2*x - 1/2*x", "x", "y").is_zero());
    CHECK(parse_poly("3x^2", "x", "y") == parse_poly("3*x^2", "x", "y"));
    CHECK(parse_poly("- x + y", "x", "y") == parse_poly("y - x", "x", "y"));

    CHECK_THROWS_AS(parse_poly("x*(x+y)", "x", "y"), Error); // no parentheses
    CHECK_THROWS_AS(parse_poly("x^-2", "x", "y"), Error);
    CHECK_THROWS_AS(parse_poly("x*x", "x", "y"), Error);
    CHECK_THROWS_AS(parse_poly("", "x", "y"), Error);
    CHECK_THROWS_AS(parse_poly("x +", "x", "y"), Error);
    CHECK_THROWS_AS(parse_poly("z^2", "x", "y"), Error);
}

TEST_CASE("printing is parse-stable") {
    const char* inputs[] = {"y^2 - x^3", "x^2*y + x*y^2", "1/2*x^4 - 2*y + 7"};
    for (auto* s : inputs) {
        QPoly f = parse_poly(s, "x", "y");
        CHECK(parse_poly(poly_to_string(f, "x", "y"), "x", "y") == f);
    }
}

TEST_CASE("univariate machinery") {
    QUPoly p = parse_upoly("s^3 - 3*s + 2", "s"); // (s-1)^2 (s+2)
    QUPoly cof;
    auto roots = rational_roots(p, &cof);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == -2);
    CHECK(roots[0].second == 1);
    CHECK(roots[1].first == 1);
    CHECK(roots[1].second == 2);
    CHECK(cof.degree() == 0);

    auto yun = yun_squarefree(p);
    REQUIRE(yun.size() == 2);
    CHECK(yun[0].second == 1);
    CHECK(yun[1].second == 2);
}

TEST_CASE("kronecker factorization") {
    // (s^2+1)(s^2+2): square-free, no rational roots
    QUPoly p = parse_upoly("s^4 + 3*s^2 + 2", "s");
    auto factors = factor_squarefree_rootfree(p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] * factors[1] == p.monic());

    CHECK(is_irreducible_q(parse_upoly("s^2 - 2", "s")));
    CHECK(is_irreducible_q(parse_upoly("s^4 + 1", "s")));
    CHECK(!is_irreducible_q(parse_upoly("s^4 + 3*s^2 + 2", "s")));
}

TEST_CASE("bivariate gcd") {
    QPoly f = parse_poly("x^2*y^2", "x", "y");
    QPoly g = bivariate_gcd(f, bivariate_gcd(f.derivative_x(), f.derivative_y()));
    CHECK(g.total_degree() >= 2); // xy divides the gcd

    QPoly a = parse_poly("y^2 - x^3", "x", "y");
    QPoly common = bivariate_gcd(a, a.derivative_y());
    CHECK(common.total_degree() == 0);
}

TEST_CASE("extension field arithmetic") {
    auto field = std::make_shared<ExtField>(ExtField{parse_upoly("s^2 - 2", "s")});
    ExtElem r2 = ExtElem::generator(field);
    CHECK((r2 * r2).is_rational());
    CHECK((r2 * r2).rational_value() == 2);
    ExtElem inv = (ExtElem(1) + r2).inverse(); // 1/(1+sqrt2) = sqrt2 - 1
    CHECK(inv == r2 - ExtElem(1));
    CHECK_THROWS_AS(ExtElem(0).inverse(), Error);
}

TEST_CASE("linear algebra ranks agree") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<int> dim(1, 8), entry(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
        QMatrix m(r, std::vector<Rat>(c));
        for (auto& row : m)
            for (auto& x : row) x = Rat(entry(rng));
        CHECK(rank_row_echelon(m) == rank_bareiss(m));
    }
}

TEST_CASE("solve_linear finds exact solutions") {
    QMatrix m = {{Rat(1), Rat(0)}, {Rat(1), Rat(0)}};
    auto sol = solve_linear(m, {Rat(1), Rat(1)});
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] == 1);
    CHECK(!solve_linear(m, {Rat(1), Rat(0)}).has_value());
}
