#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgkz/curve.hpp"

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
} // namespace

TEST_CASE("equivariant CP1 curve in the square-root chart") {
    auto c = build_curve(cp1(Rat(1), Rat(0)), CoordKind::cp1_sqrt);
    // A = (y-w0)(y-w1) - x = y^2 - y - x
    CHECK(c.A.coeff(0, 2) == Rat(1));
    CHECK(c.A.coeff(0, 1) == Rat(-1));
    CHECK(c.A.coeff(0, 0) == Rat(0));
    CHECK(c.A.coeff(1, 0) == Rat(-1));
    CHECK(c.A.eval_ratfunc(c.x, c.y).is_zero());
    auto rams = ramification_points(c);
    REQUIRE(rams.size() == 1);
    CHECK(rams[0].exact);
    CHECK(rams[0].z_exact == Rat(0));
    CHECK(rams[0].global_involution);
}

TEST_CASE("degree-1 hypersurface curve in the Zhukovsky chart") {
    auto c = build_curve(hyper(Rat(0), Rat(3), Rat(4)), CoordKind::cp1_zhukovsky);
    // A = y^2 - (w0+w1+x) y + w0 w1 + lambda1 x
    CHECK(c.A.coeff(0, 2) == Rat(1));
    CHECK(c.A.coeff(0, 1) == Rat(-3));
    CHECK(c.A.coeff(1, 1) == Rat(-1));
    CHECK(c.A.coeff(1, 0) == Rat(4));
    CHECK(c.sqrt_disc == Rat(2));
    CHECK(c.A.eval_ratfunc(c.x, c.y).is_zero());
    CHECK_FALSE(c.zstar_at_infinity);
    CHECK(c.zstar == Rat(-1));
    auto rams = ramification_points(c);
    REQUIRE(rams.size() == 2);
    CHECK(rams[1].at_infinity);

    // non-square discriminant rejected toward the numeric backend
    CHECK_THROWS(build_curve(hyper(Rat(0), Rat(1), Rat(3)), CoordKind::cp1_zhukovsky));
}

TEST_CASE("standard chart and degenerate rejection") {
    CurveModel m;
    m.N = 3;
    m.n = 0;
    m.w = {Rat(0), Rat(1), Rat(2)};
    auto c = build_curve(m, CoordKind::standard);
    CHECK(c.y == rf_var());
    // x has a pole of order N-n at infinity
    CHECK(c.x.order_at_infinity() == -3);
    CHECK(c.A.eval_ratfunc(c.x, c.y).is_zero());

    // w = (0,0,0): x = z^3 has a double zero of dx -> rejected
    CurveModel bad = m;
    bad.w = {Rat(0), Rat(0), Rat(0)};
    CHECK_THROWS(build_curve(bad, CoordKind::standard));
}

TEST_CASE("numeric ramification with series involution") {
    CurveModel m;
    m.N = 3;
    m.n = 0;
    m.w = {Rat(0), Rat(1), Rat(2)};
    auto c = build_curve(m, CoordKind::standard);
    auto rams = ramification_points(c, 12);
    REQUIRE(rams.size() == 2); // dx/dz = 3z^2-6z+2
    for (const auto& r : rams) {
        REQUIRE_FALSE(r.global_involution);
        // sigma is an involution through the truncation order
        auto ss = r.sigma.compose(r.sigma);
        CHECK(abs(ss.coeff(0)).to_double() < 1e-35);
        for (int k = 1; k <= r.sigma.trunc(); ++k) {
            BigFloat want = k == 1 ? BigFloat(1) : BigFloat(0);
            CHECK(abs(ss.coeff(k) - BigComplex(want)).to_double() < 1e-35);
        }
        // x(sigma(t)) - x(t) = O(t^{order+1})
        int ord = r.sigma.trunc();
        TSeries<BigComplex> t = TSeries<BigComplex>::var(ord);
        auto poly_series = [&](const QPoly& p) {
            TSeries<BigComplex> acc = TSeries<BigComplex>::zero(ord);
            TSeries<BigComplex> base = TSeries<BigComplex>::constant(r.z_value, ord) + t;
            TSeries<BigComplex> pw = TSeries<BigComplex>::constant(BigComplex(1), ord);
            for (int k = 0; k <= p.degree(); ++k) {
                acc += pw * BigComplex(Rat(p.coeff(k)));
                if (k < p.degree()) pw *= base;
            }
            return acc;
        };
        auto X = poly_series(c.x.num()) * poly_series(c.x.den()).inverse();
        auto X0 = X - TSeries<BigComplex>::constant(X.coeff(0), ord);
        auto diff = X0.compose(r.sigma) - X0;
        for (int k = diff.min_exp(); k <= diff.trunc(); ++k)
            CHECK(abs(diff.coeff(k)).to_double() < 1e-30);
    }
}

TEST_CASE("critical set characterization") {
    std::string detail;
    CHECK(critical_set_check(cp1(Rat(1), Rat(0)), Rat(2), 50, &detail));
    INFO(detail);
    CurveModel m;
    m.family = Family::complete_intersection_degree_one;
    m.N = 3;
    m.n = 1;
    m.w = {Rat(0), Rat(1), Rat(2)};
    m.lambda = {Rat(5)};
    CHECK(critical_set_check(m, Rat(7), 50, &detail));
    INFO(detail);
}

TEST_CASE("branch labeling for large x") {
    CurveModel m;
    m.family = Family::complete_intersection_degree_one;
    m.N = 3;
    m.n = 1;
    m.w = {Rat(0), Rat(1), Rat(2)};
    m.lambda = {Rat(5)};
    auto c = build_curve(m, CoordKind::standard);
    CHECK(branch_labeling_check(c, Rat(1000000)));
}

TEST_CASE("curve json document") {
    auto c = build_curve(cp1(Rat(1), Rat(0)), CoordKind::cp1_sqrt);
    std::string j = curve_to_json(c);
    CHECK(j.find("cp1_sqrt") != std::string::npos);
    CHECK(j.find("\"N\": 2") != std::string::npos);
}
