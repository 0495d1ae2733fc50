#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgkz/toprec.hpp"

using namespace qgkz;

namespace {

CurveModel cp1(Rat w0, Rat w1) {
    CurveModel m;
    m.family = Family::projective_space;
    m.N = 2;
    m.n = 0;
    m.w = {w0, w1};
    return m;
}
CurveModel hyper(Rat w0, Rat w1, Rat l1) {
    CurveModel m;
    m.family = Family::complete_intersection_degree_one;
    m.N = 2;
    m.n = 1;
    m.w = {w0, w1};
    m.lambda = {l1};
    return m;
}

// push an x-polynomial through x = z^2 - L on the plus branch, over z^denpow,
// with (x+L)^{half} -> z^{2*half} understood by the caller
RatFunc table_entry(const std::vector<Rat>& num_x, Rat L, Rat den_scale, int den_zpow) {
    // numerator poly in x evaluated at x = z^2 - L
    RatFunc x = RatFunc(QPoly(std::vector<Rat>{-L, Rat(0), Rat(1)}));
    RatFunc acc;
    RatFunc pw(Rat(1));
    for (size_t i = 0; i < num_x.size(); ++i) {
        acc += pw * num_x[i];
        pw *= x;
    }
    return acc / RatFunc(QPoly::monomial(den_zpow, den_scale));
}

} // namespace

TEST_CASE("omega_1^1 for the equivariant CP1 curve") {
    auto c = build_curve(cp1(Rat(1), Rat(0)), CoordKind::cp1_sqrt);
    ExactTR tr(c);
    Rat L = c.Lambda();
    const MLaurent& w11 = tr.omega(1, 1);
    // (L - z^2)/(16 z^4) = L/16 z^{-4} - 1/16 z^{-2}
    CHECK(w11.coeff({-4}) == L / 16);
    CHECK(w11.coeff({-2}) == Rat(-1, 16));
    CHECK(w11.terms().size() == 2);
}

TEST_CASE("correlator symmetry and pole structure") {
    auto c = build_curve(cp1(Rat(2), Rat(-1)), CoordKind::cp1_sqrt);
    ExactTR tr(c);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}, {0, 5}, {1, 3}}) {
        const MLaurent& w = tr.omega(g, n);
        CHECK(w.symmetric());
        for (auto& [k, v] : w.terms())
            for (int e : k) {
                CHECK(e < 0);                       // poles only at z = 0
                CHECK(e % 2 == 0);                  // even orders
                CHECK(-e <= 6 * g - 4 + 2 * n);     // bounded order
            }
    }
}

TEST_CASE("table of free energies, equivariant CP1, w = (1,0)") {
    auto c = build_curve(cp1(Rat(1), Rat(0)), CoordKind::cp1_sqrt);
    ExactTR tr(c);
    Rat L = c.Lambda();
    // Printed entries on the z = +sqrt(x+Lambda) branch:
    //   F_3^{(0)} = -L/(2 z^3)                    (x+L)^{3/2} -> z^3
    //   F_1^{(1)} = (3x + 2L)/(48 z^3)
    //   F_4^{(0)} = L(-3x + L)/(4 z^6)
    //   F_2^{(1)} = (3x^2 - 6 L x - 2 L^2)/(96 z^6)
    //   F_5^{(0)} = -L(12x^2 - 21 L x + 2 L^2)/(8 z^9)
    //   F_3^{(1)} = (6x^3 - 63 L x^2 + 18 L^2 x + 4 L^3)/(192 z^9)
    //   F_1^{(2)} = -(−45x^3 + 186 L x^2 + 72 L^2 x + 16 L^3)/(15360 z^9)
    auto F03 = table_entry({Rat(0) - L}, L, Rat(2), 3) * Rat(1);
    // F03 written directly: -L/(2 z^3)
    RatFunc expect_F03 = RatFunc(QPoly(-L), QPoly::monomial(3, Rat(2)));
    RatFunc expect_F11 = table_entry({Rat(2) * L, Rat(3)}, L, Rat(48), 3);
    RatFunc expect_F04 = table_entry({L * L, Rat(-3) * L}, L, Rat(4), 6);
    RatFunc expect_F21 = table_entry({Rat(-2) * L * L, Rat(-6) * L, Rat(3)}, L, Rat(96), 6);
    RatFunc expect_F05 = table_entry({Rat(-2) * L * L * L, Rat(21) * L * L, Rat(-12) * L}, L, Rat(8), 9);
    RatFunc expect_F31 = table_entry({Rat(4) * L * L * L, Rat(18) * L * L, Rat(-63) * L, Rat(6)}, L, Rat(192), 9);
    RatFunc expect_F12 = table_entry({Rat(-16) * L * L * L, Rat(-72) * L * L, Rat(-186) * L, Rat(45)}, L, Rat(15360), 9);

    // the engine fixes one global branch orientation; allow one coherent sign
    // flip z -> -z applied to every entry simultaneously
    auto flip = [](const RatFunc& f) { return f.compose(-rf_var()); };
    RatFunc got_F03 = tr.f_gn(0, 3);
    bool plus_branch = got_F03 == expect_F03;
    bool minus_branch = got_F03 == flip(expect_F03);
    REQUIRE((plus_branch || minus_branch));
    auto oriented = [&](const RatFunc& f) { return plus_branch ? f : flip(f); };

    CHECK(tr.f_gn(0, 3) == oriented(expect_F03));
    CHECK(tr.f_gn(1, 1) == oriented(expect_F11));
    CHECK(tr.f_gn(0, 4) == oriented(expect_F04));
    CHECK(tr.f_gn(1, 2) == oriented(expect_F21));
    CHECK(tr.f_gn(0, 5) == oriented(expect_F05));
    CHECK(tr.f_gn(1, 3) == oriented(expect_F31));
    CHECK(tr.f_gn(2, 1) == oriented(expect_F12));

    // assembled F_m against the printed combinations
    //   F_2 = (3x - 2L)/(48 z^3), F_3 = x(x-4L)/(64 z^6),
    //   F_4 = (375 x^3 - 3654 L x^2 + 1512 L^2 x + 16 L^3)/(46080 z^9)
    RatFunc expect_F2 = table_entry({Rat(-2) * L, Rat(3)}, L, Rat(48), 3);
    RatFunc expect_F3 = table_entry({Rat(0), Rat(-4) * L, Rat(1)}, L, Rat(64), 6);
    RatFunc expect_F4 = table_entry({Rat(16) * L * L * L, Rat(1512) * L * L, Rat(-3654) * L, Rat(375)}, L, Rat(46080), 9);
    CHECK(tr.Fm(2) == oriented(expect_F2));
    CHECK(tr.Fm(3) == oriented(expect_F3));
    CHECK(tr.Fm(4) == oriented(expect_F4));
}

TEST_CASE("normalization F_m -> 0 at the divisor endpoint") {
    auto c = build_curve(cp1(Rat(1), Rat(0)), CoordKind::cp1_sqrt);
    ExactTR tr(c);
    for (int m = 2; m <= 4; ++m) {
        RatFunc f = tr.Fm(m);
        CHECK(f.order_at_infinity() > 0); // vanishes at z* = infinity
    }
    auto h = build_curve(hyper(Rat(0), Rat(3), Rat(4)), CoordKind::cp1_zhukovsky);
    ExactTR trh(h);
    for (int m = 2; m <= 4; ++m) {
        RatFunc f = trh.Fm(m);
        CHECK(f.eval(Rat(-1)) == Rat(0)); // vanishes at z* = -1
    }
}

TEST_CASE("free-energy recursion matches the correlator assembly") {
    for (int which = 0; which < 2; ++which) {
        SpectralCurve c = which == 0
                              ? build_curve(cp1(Rat(1), Rat(0)), CoordKind::cp1_sqrt)
                              : build_curve(hyper(Rat(0), Rat(3), Rat(4)),
                                            CoordKind::cp1_zhukovsky);
        CAPTURE(which);
        ExactTR tr(c);
        auto dF = fm_recursion(c, 5);
        CHECK(dF[0] == tr.dF0_dz());
        CHECK(dF[1] == tr.dF1_dz());
        for (int m = 2; m <= 5; ++m) {
            CAPTURE(m);
            CHECK(dF[m] == tr.dFm_dz(m));
        }
    }
}

TEST_CASE("kernel p(z) closed forms") {
    auto c = build_curve(cp1(Rat(1), Rat(0)), CoordKind::cp1_sqrt);
    auto kd = kernel(c);
    // p = -(z^2 - L)/(8 z^2)
    Rat L = c.Lambda();
    RatFunc expect(QPoly(std::vector<Rat>{L, Rat(0), Rat(-1)}), QPoly::monomial(2, Rat(8)));
    CHECK(kd.p == expect);
    REQUIRE(kd.ramification.size() == 1);

    // parity: p * dx/dz is odd for cp1_sqrt
    RatFunc podd = kd.p * c.x.derivative();
    CHECK(podd.compose(-rf_var()) == -podd);

    auto h = build_curve(hyper(Rat(0), Rat(3), Rat(4)), CoordKind::cp1_zhukovsky);
    auto kh = kernel(h);
    // p = (z^2-1)^2 ((w0+w1-2l)(1-z^2) + 2(1+z^2) s) / (64 z^2 s^2)
    Rat s = h.sqrt_disc;
    Rat c0 = h.model.w[0] + h.model.w[1] - Rat(2) * h.model.lambda[0];
    QPoly zm1(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
    QPoly zp1(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
    QPoly num = zm1 * zm1 * (QPoly(c0) * (-zm1) + QPoly(Rat(2) * s) * zp1);
    RatFunc expect_h(num, QPoly::monomial(2, Rat(64) * s * s));
    CHECK(kh.p == expect_h);
    REQUIRE(kh.ramification.size() == 2);
}

TEST_CASE("regularized Bergman kernel is finite on the diagonal") {
    // B - dx1 dx2/(x1-x2)^2 = 1/(z1+z2)^2 for both N=2 charts: verified as an
    // exact identity at random rational points
    for (int which = 0; which < 2; ++which) {
        SpectralCurve c = which == 0
                              ? build_curve(cp1(Rat(1), Rat(0)), CoordKind::cp1_sqrt)
                              : build_curve(hyper(Rat(0), Rat(3), Rat(4)),
                                            CoordKind::cp1_zhukovsky);
        std::vector<std::pair<Rat, Rat>> pts = {
            {Rat(2), Rat(3)}, {Rat(1, 2), Rat(5)}, {Rat(-3), Rat(7, 3)}, {Rat(4), Rat(-5, 2)}};
        for (auto& [z1, z2] : pts) {
            Rat x1 = c.x.eval(z1), x2 = c.x.eval(z2);
            Rat dx1 = c.x.derivative().eval(z1), dx2 = c.x.derivative().eval(z2);
            Rat B = Rat(1) / ((z1 - z2) * (z1 - z2));
            Rat proj = dx1 * dx2 / ((x1 - x2) * (x1 - x2));
            Rat reg = B - proj;
            CHECK(reg == Rat(1) / ((z1 + z2) * (z1 + z2)));
        }
    }
}

TEST_CASE("fm_recursion argument validation") {
    auto c = build_curve(cp1(Rat(1), Rat(0)), CoordKind::cp1_sqrt);
    CHECK_THROWS(fm_recursion(c, 1));
}
