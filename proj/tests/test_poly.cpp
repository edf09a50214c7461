#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ktwist/parse.hpp"
#include "ktwist/poly.hpp"

using namespace ktwist;

namespace {

MultiPoly random_poly(RingPtr ring, std::mt19937& rng, int max_terms, int max_deg,
                      int coeff_bound) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<int> expo(ring->laurent ? -max_deg : 0, max_deg);
    std::vector<MultiPoly::Term> terms;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        ExponentVector e(ring->nvars);
        for (int i = 0; i < ring->nvars; ++i) e[i] = expo(rng);
        terms.emplace_back(std::move(e), Int(coeff(rng)));
    }
    return MultiPoly::from_terms(ring, terms);
}

}  // namespace

TEST_CASE("grevlex order basics") {
    ExponentVector a{2, 0}, b{1, 1}, c{0, 2};
    CHECK(grevlex_cmp(a, b) > 0);
    CHECK(grevlex_cmp(b, c) > 0);
    CHECK(grevlex_cmp(a, a) == 0);
    CHECK(grevlex_cmp(ExponentVector{0, 0}, a) < 0);
}

TEST_CASE("basic arithmetic identities") {
    RingPtr ring = x_ring(2);
    MultiPoly x1 = MultiPoly::variable(ring, 0);
    MultiPoly x2 = MultiPoly::variable(ring, 1);

    // difference of squares
    CHECK((x1 + x2) * (x1 - x2) == x1 * x1 - x2 * x2);

    // additive identity
    MultiPoly p = x1 * x1 + Int(3) * x2;
    CHECK(p + MultiPoly(ring) == p);

    // (x1+x2+x3)^2 has 6 terms with coefficients {1,1,1,2,2,2}; expected
    // value computed by direct expansion
    RingPtr ring3 = x_ring(3);
    MultiPoly s(ring3);
    for (int i = 0; i < 3; ++i) s += MultiPoly::variable(ring3, i);
    MultiPoly sq = s * s;
    CHECK(sq.term_count() == 6);
    int ones = 0, twos = 0;
    for (const auto& [e, c] : sq.terms()) {
        if (c == 1) ++ones;
        if (c == 2) ++twos;
    }
    CHECK(ones == 3);
    CHECK(twos == 3);
}

TEST_CASE("ring mismatch is rejected") {
    MultiPoly a = MultiPoly::variable(x_ring(2), 0);
    MultiPoly b = MultiPoly::variable(x_ring(3), 0);
    CHECK_THROWS_AS(a + b, RingMismatchError);
    CHECK_THROWS_AS(a * b, RingMismatchError);
}

TEST_CASE("partial derivative") {
    RingPtr ring = e_ring(2);
    MultiPoly e1 = MultiPoly::variable(ring, 0);
    MultiPoly e2 = MultiPoly::variable(ring, 1);

    // power rule: d(x1^2 x2)/dx1 = 2 x1 x2
    RingPtr xr = x_ring(2);
    MultiPoly x1 = MultiPoly::variable(xr, 0);
    MultiPoly x2 = MultiPoly::variable(xr, 1);
    CHECK(derivative(x1 * x1 * x2, 0) == Int(2) * x1 * x2);

    // constants vanish
    CHECK(derivative(MultiPoly(xr, Int(7)), 0).is_zero());

    // term-wise oracle: d(e1^4 - 4 e1^2 e2 + 2 e2^2)/de1 = 4 e1^3 - 8 e1 e2
    MultiPoly p = pow(e1, 4) - Int(4) * pow(e1, 2) * e2 + Int(2) * pow(e2, 2);
    CHECK(derivative(p, 0) == Int(4) * pow(e1, 3) - Int(8) * e1 * e2);

    CHECK_THROWS_AS(derivative(p, 5), DomainError);
}

TEST_CASE("evaluation") {
    RingPtr ring = x_ring(2);
    MultiPoly x1 = MultiPoly::variable(ring, 0);
    MultiPoly x2 = MultiPoly::variable(ring, 1);

    CHECK(evaluate(x1 * x1 + x2, {Rat(1), Rat(2)}) == Rat(3));

    // pole: x1 * x2^-1 at (1, 0)
    RingPtr lring = x_ring(2, true);
    MultiPoly lp = MultiPoly::variable(lring, 0) * MultiPoly::variable(lring, 1, -1);
    CHECK_THROWS_AS(evaluate(lp, {Rat(1), Rat(0)}), DomainError);
    CHECK(evaluate(lp, {Rat(3), Rat(2)}) == make_rat(3, 2));

    // Newton identity p2 = e1^2 - 2 e2 checked through evaluation:
    // e1^2 - 2 e2 at (x1+x2, x1 x2) = (3, 2) equals x1^2 + x2^2 at (1, 2)
    RingPtr er = e_ring(2);
    MultiPoly e1 = MultiPoly::variable(er, 0);
    MultiPoly e2 = MultiPoly::variable(er, 1);
    MultiPoly p2 = e1 * e1 - Int(2) * e2;
    CHECK(evaluate(p2, {Rat(3), Rat(2)}) == Rat(5));
    CHECK(Rat(5) == Rat(1 * 1 + 2 * 2));
}

TEST_CASE("complex evaluation") {
    RingPtr ring = x_ring(2);
    MultiPoly p = parse_poly("x1^2 + x2", ring);
    std::complex<double> v = evaluate(p, {std::complex<double>(0, 1), std::complex<double>(2, 0)});
    CHECK(v.real() == doctest::Approx(1.0));  // i^2 + 2
    CHECK(v.imag() == doctest::Approx(0.0));

    RingPtr lring = x_ring(1, true);
    MultiPoly inv = MultiPoly::variable(lring, 0, -1);
    CHECK_THROWS_AS(evaluate(inv, {std::complex<double>(0, 0)}), DomainError);
    CHECK(evaluate(inv, {std::complex<double>(2, 0)}).real() == doctest::Approx(0.5));
}

TEST_CASE("evaluate is a ring homomorphism at rational points") {
    std::mt19937 rng(12345);
    RingPtr ring = x_ring(3);
    std::uniform_int_distribution<int> num(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly a = random_poly(ring, rng, 5, 4, 9);
        MultiPoly b = random_poly(ring, rng, 5, 4, 9);
        std::vector<Rat> pt{make_rat(num(rng), 3), make_rat(num(rng), 2), Rat(num(rng))};
        CHECK(evaluate(a * b, pt) == evaluate(a, pt) * evaluate(b, pt));
        CHECK(evaluate(a + b, pt) == evaluate(a, pt) + evaluate(b, pt));
    }
}

TEST_CASE("ring axioms hold structurally on random inputs") {
    std::mt19937 rng(99);
    for (bool laurent : {false, true}) {
        RingPtr ring = x_ring(3, laurent);
        for (int trial = 0; trial < 40; ++trial) {
            MultiPoly a = random_poly(ring, rng, 4, 3, 7);
            MultiPoly b = random_poly(ring, rng, 4, 3, 7);
            MultiPoly c = random_poly(ring, rng, 4, 3, 7);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            for (const MultiPoly& p : {a + b, a * b, a - c, (a * b) * c}) p.check_invariants();
        }
    }
}

TEST_CASE("parser grammar and errors") {
    RingPtr ring = x_ring(2);
    MultiPoly x1 = MultiPoly::variable(ring, 0);
    MultiPoly x2 = MultiPoly::variable(ring, 1);

    CHECK(parse_poly("x1^2*x2 - 3", ring) == x1 * x1 * x2 - MultiPoly(ring, Int(3)));

    CHECK_THROWS_WITH_AS(parse_poly("x1 + ", ring), "expected operand at offset 5", ParseError);

    CHECK(to_string(parse_poly("x2*x1", ring)) == "x1*x2");

    CHECK_THROWS_AS(parse_poly("x1 + y", ring), ParseError);
    CHECK_THROWS_AS(parse_poly("x1^-2", ring), ParseError);
    CHECK(parse_poly("x1^-2", x_ring(2, true)) == MultiPoly::variable(x_ring(2, true), 0, -2));

    CHECK(to_string(parse_poly("(x1+x2)^2 - 2*x1*x2", ring)) == "x1^2 + x2^2");
    CHECK(to_string(MultiPoly(ring)) == "0");
}

TEST_CASE("parse after render is the identity") {
    std::mt19937 rng(2024);
    for (bool laurent : {false, true}) {
        RingPtr ring = x_ring(3, laurent);
        for (int trial = 0; trial < 80; ++trial) {
            MultiPoly p = random_poly(ring, rng, 6, 5, 99);
            CHECK(parse_poly(to_string(p), ring) == p);
        }
    }
    // rational round-trip, including non-integral coefficients
    RingPtr rring = r_ring(3);
    RatPoly q = RatPoly::monomial(rring, {2, 1}, make_rat(-3, 2)) +
                RatPoly(rring, make_rat(5, 7)) + RatPoly::variable(rring, 1);
    CHECK(parse_rat_poly(to_string(q), rring) == q);
}

TEST_CASE("canonical form stores no zero coefficients") {
    RingPtr ring = x_ring(2);
    MultiPoly x1 = MultiPoly::variable(ring, 0);
    MultiPoly p = x1 - x1;
    CHECK(p.is_zero());
    p.check_invariants();
    MultiPoly q = MultiPoly::from_terms(ring, {{{1, 0}, Int(2)}, {{1, 0}, Int(-2)}});
    CHECK(q.is_zero());
}

TEST_CASE("rational polynomials keep positive denominators in lowest terms") {
    RingPtr ring = r_ring(3);
    RatPoly p = RatPoly::monomial(ring, {1, 0}, make_rat(4, -6));
    CHECK(p.leading_term().second == make_rat(-2, 3));
    p.check_invariants();
}
