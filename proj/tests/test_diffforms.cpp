#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ktwist/diffforms.hpp"
#include "ktwist/parse.hpp"
#include "ktwist/symfunc.hpp"

using namespace ktwist;

namespace {

MultiPoly rand_poly(RingPtr ring, std::mt19937& rng, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::vector<MultiPoly::Term> terms;
    for (int t = 0, n = nterms(rng); t < n; ++t) {
        ExponentVector e(ring->nvars);
        for (int i = 0; i < ring->nvars; ++i) e[i] = expo(rng);
        terms.emplace_back(std::move(e), Int(coeff(rng)));
    }
    return MultiPoly::from_terms(ring, terms);
}

DiffForm rand_form(const SymFrame& fr, int degree, std::mt19937& rng) {
    DiffForm f(fr, degree);
    RingPtr ring = fr.ring();
    std::uniform_int_distribution<int> keep(0, 2);
    std::vector<int> idx(degree);
    auto rec = [&](auto&& self, int pos, int from) -> void {
        if (pos == degree) {
            if (keep(rng) == 0) return;
            f.add_term(idx, rand_poly(ring, rng, 3, 3));
            return;
        }
        for (int i = from; i < fr.nvars(); ++i) {
            idx[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    rec(rec, 0, 0);
    return f;
}

// apply the adjacent transposition (i, i+1) to variables and d-symbols
DiffForm transpose_form(const DiffForm& f, int i) {
    DiffForm out(f.frame(), f.degree());
    RingPtr ring = f.frame().ring();
    for (const auto& [t, c] : f.components()) {
        IndexTuple nt = t;
        int sign = 1;
        bool has_i = false, has_i1 = false;
        for (int v : nt) {
            if (v == i) has_i = true;
            if (v == i + 1) has_i1 = true;
        }
        if (has_i && has_i1) {
            sign = -1;  // both symbols present: relabeling reverses their order
        } else {
            for (int& v : nt) {
                if (v == i) v = i + 1;
                else if (v == i + 1) v = i;
            }
            std::sort(nt.begin(), nt.end());
        }
        std::vector<MultiPoly::Term> terms;
        for (const auto& [e, coef] : c.terms()) {
            ExponentVector ne = e;
            std::swap(ne[i], ne[i + 1]);
            terms.emplace_back(std::move(ne), sign > 0 ? coef : Int(-coef));
        }
        out.add_term(nt, MultiPoly::from_terms(ring, terms));
    }
    return out;
}

}  // namespace

TEST_CASE("exterior derivative on the stated relations") {
    SymFrame xf = x_frame(2);
    RingPtr ring = xf.ring();
    MultiPoly x1 = MultiPoly::variable(ring, 0);
    MultiPoly x2 = MultiPoly::variable(ring, 1);

    // Leibniz: d(x1 x2) = x2 dx1 + x1 dx2
    DiffForm d12 = exterior_derivative(DiffForm::from_poly(xf, x1 * x2));
    DiffForm expect(xf, 1);
    expect.add_term({0}, x2);
    expect.add_term({1}, x1);
    CHECK(d12 == expect);

    // constants die
    CHECK(exterior_derivative(DiffForm::from_poly(xf, MultiPoly(ring, Int(7)))).is_zero());

    // d(e1^2 - 2 e2) = 2 e1 de1 - 2 de2 in the E frame
    SymFrame ef = e_frame(2);
    RingPtr er = ef.ring();
    DiffForm dp = exterior_derivative(DiffForm::from_poly(ef, parse_poly("e1^2 - 2*e2", er)));
    DiffForm expect_e(ef, 1);
    expect_e.add_term({0}, parse_poly("2*e1", er));
    expect_e.add_term({1}, MultiPoly(er, Int(-2)));
    CHECK(dp == expect_e);
}

TEST_CASE("wedge antisymmetry and nilpotence") {
    SymFrame xf = x_frame(2);
    DiffForm dx1 = DiffForm::generator(xf, 0);
    DiffForm dx2 = DiffForm::generator(xf, 1);
    CHECK(wedge(dx1, dx2) == -wedge(dx2, dx1));
    CHECK(wedge(dx1, dx1).is_zero());

    // sign bookkeeping: (x1 dx1 + x2 dx2) ^ (dx1 + dx2) = (x1 - x2) dx1^dx2
    RingPtr ring = xf.ring();
    MultiPoly x1 = MultiPoly::variable(ring, 0);
    MultiPoly x2 = MultiPoly::variable(ring, 1);
    DiffForm a(xf, 1);
    a.add_term({0}, x1);
    a.add_term({1}, x2);
    DiffForm expect(xf, 2);
    expect.add_term({0, 1}, x1 - x2);
    CHECK(wedge(a, dx1 + dx2) == expect);

    CHECK_THROWS_AS(wedge(dx1, DiffForm::generator(x_frame(3), 0)), RingMismatchError);
}

TEST_CASE("d after d vanishes") {
    std::mt19937 rng(4242);
    for (SymFrame fr : {x_frame(3), e_frame(3), r_frame(4), x_frame(2)}) {
        RingPtr ring = fr.ring();
        for (int trial = 0; trial < 30; ++trial) {
            MultiPoly p = rand_poly(ring, rng, 5, 6);
            CHECK(exterior_derivative(exterior_derivative(DiffForm::from_poly(fr, p))).is_zero());
            DiffForm omega = rand_form(fr, 1, rng);
            CHECK(exterior_derivative(exterior_derivative(omega)).is_zero());
        }
    }
}

TEST_CASE("wedge is associative and graded commutative") {
    std::mt19937 rng(31337);
    SymFrame fr = x_frame(3);
    for (int trial = 0; trial < 25; ++trial) {
        for (int p = 0; p <= 2; ++p)
            for (int q = 0; q <= 2; ++q) {
                DiffForm f = rand_form(fr, p, rng);
                DiffForm g = rand_form(fr, q, rng);
                DiffForm fg = wedge(f, g);
                DiffForm gf = wedge(g, f);
                if ((p * q) % 2 == 1) gf = -gf;
                CHECK(fg == gf);
                DiffForm h = rand_form(fr, 1, rng);
                CHECK(wedge(wedge(f, g), h) == wedge(f, wedge(g, h)));
                fg.check_invariants();
            }
    }
}

TEST_CASE("squares of odd twists vanish") {
    std::mt19937 rng(99);
    for (int N = 2; N <= 4; ++N)
        for (int k = 0; k <= 3; ++k) {
            TwistForm tw = twist_form(N, k);
            CHECK(wedge(tw.x_form, tw.x_form).is_zero());
            for (int p = 0; p <= N; ++p) {
                DiffForm omega = rand_form(x_frame(N), p, rng);
                CHECK(wedge(tw.x_form, wedge(tw.x_form, omega)).is_zero());
            }
        }
}

TEST_CASE("twist form examples") {
    TwistForm t21 = twist_form(2, 1);
    CHECK(t21.m == 3);
    CHECK(t21.e_coeffs[0] == parse_poly("e1^2 - e2", e_ring(2)));
    CHECK(t21.e_coeffs[1] == -MultiPoly::variable(e_ring(2), 0));
    CHECK(t21.r_coeffs[0] == parse_poly("r1^2 - 1", r_ring(2)));

    TwistForm t22 = twist_form(2, 2);
    CHECK(t22.r_coeffs[0] == parse_poly("r1^3 - 2*r1", r_ring(2)));

    TwistForm t31 = twist_form(3, 1);
    CHECK(t31.r_coeffs[0] == parse_poly("r1^3 - 2*r1*r2 + 1", r_ring(3)));
    CHECK(t31.r_coeffs[1] == -parse_poly("r1^2 - r2", r_ring(3)));

    CHECK_THROWS_AS(twist_form(1, 1), DomainError);
    CHECK_THROWS_AS(twist_form(2, -1), DomainError);
}

TEST_CASE("basic class at twist index 1 is d e1") {
    TwistForm t = twist_form_index(3, 1);
    CHECK(t.e_coeffs[0] == MultiPoly(e_ring(3), Int(1)));
    CHECK(t.e_coeffs[1].is_zero());
    CHECK(t.e_coeffs[2].is_zero());
    CHECK(t.x_form == exterior_derivative(DiffForm::from_poly(x_frame(3), elementary(1, 3))));
}

TEST_CASE("eta convention in the Laurent torus frame") {
    // sum x_i * (dx_i / x_i) = sum dx_i
    SymFrame lf = x_frame(2, true);
    RingPtr ring = lf.ring();
    DiffForm delta(lf, 1);
    for (int i = 0; i < 2; ++i) {
        DiffForm eta(lf, 1);
        eta.add_term({i}, MultiPoly::variable(ring, i, -1));
        delta = delta + MultiPoly::variable(ring, i) * eta;
    }
    DiffForm expected(lf, 1);
    expected.add_term({0}, MultiPoly(ring, Int(1)));
    expected.add_term({1}, MultiPoly(ring, Int(1)));
    CHECK(delta == expected);
}

TEST_CASE("frame conversion of differentials") {
    CHECK(frame_convert_d(parse_poly("e1", e_ring(2))) ==
          exterior_derivative(DiffForm::from_poly(x_frame(2), elementary(1, 2))));

    // F = e2 (N=2): x2 dx1 + x1 dx2
    RingPtr xr = x_ring(2);
    DiffForm de2 = frame_convert_d(parse_poly("e2", e_ring(2)));
    DiffForm expect(x_frame(2), 1);
    expect.add_term({0}, MultiPoly::variable(xr, 1));
    expect.add_term({1}, MultiPoly::variable(xr, 0));
    CHECK(de2 == expect);

    // F = p~_3 (N=2): 3 x1^2 dx1 + 3 x2^2 dx2
    DiffForm dp3 = frame_convert_d(power_sum_in_e(3, 2));
    DiffForm expect3(x_frame(2), 1);
    expect3.add_term({0}, parse_poly("3*x1^2", xr));
    expect3.add_term({1}, parse_poly("3*x2^2", xr));
    CHECK(dp3 == expect3);

    // chain rule: converting dF must match d of the substituted polynomial
    std::mt19937 rng(8);
    for (int N = 2; N <= 4; ++N) {
        RingPtr er = e_ring(N);
        for (int trial = 0; trial < 15; ++trial) {
            MultiPoly F = rand_poly(er, rng, 4, 3);
            CHECK(frame_convert_d(F) ==
                  exterior_derivative(DiffForm::from_poly(x_frame(N), expand_in_x(F))));
        }
    }
}

TEST_CASE("twist back-expansion holds across the grid") {
    for (int N = 2; N <= 5; ++N)
        for (int m = 1; m <= N + 6; ++m) {
            TwistForm tw = twist_form_index(N, m);  // construction verifies the identity
            CHECK(tw.x_form == power_twist_x_form(N, m - 1));
            for (const MultiPoly& a : tw.e_coeffs) a.check_invariants();
        }
}

TEST_CASE("x-frame representative is Weyl invariant") {
    for (int N = 2; N <= 5; ++N)
        for (int m = 1; m <= N + 3; ++m) {
            DiffForm alpha = power_twist_x_form(N, m - 1);
            for (int i = 0; i + 1 < N; ++i) CHECK(transpose_form(alpha, i) == alpha);
        }
}

TEST_CASE("form rendering") {
    SymFrame xf = x_frame(2);
    RingPtr ring = xf.ring();
    DiffForm f(xf, 1);
    f.add_term({0}, MultiPoly::variable(ring, 0, 2));
    f.add_term({1}, MultiPoly(ring, Int(1)));
    CHECK(to_string(f) == "(x1^2)*dx1 + dx2");
    DiffForm top(xf, 2);
    top.add_term({0, 1}, MultiPoly(ring, Int(-3)));
    CHECK(to_string(top) == "(-3)*dx1^dx2");
    CHECK(to_string(DiffForm(e_frame(2), 1)) == "0");
}
