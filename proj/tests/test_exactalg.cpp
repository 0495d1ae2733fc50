#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qgkz/bigfloat.hpp"
#include "qgkz/hermite.hpp"
#include "qgkz/multiseries.hpp"
#include "qgkz/series.hpp"

#include <random>

using namespace qgkz;

namespace {

std::mt19937 rng(20240817);

Rat rand_rat(int num_bound = 9, bool nonzero = false) {
    std::uniform_int_distribution<int> num(-num_bound, num_bound);
    std::uniform_int_distribution<int> den(1, 6);
    Rat r;
    do {
        r = Rat(num(rng)) / Rat(den(rng));
        r.canonicalize();
    } while (nonzero && r == 0);
    return r;
}

QPoly rand_poly(int max_deg, bool nonzero = true) {
    std::uniform_int_distribution<int> dd(0, max_deg);
    int d = dd(rng);
    std::vector<Rat> c(d + 1);
    for (auto& x : c) x = rand_rat();
    QPoly p(c);
    if (nonzero && p.is_zero()) p = QPoly(Rat(1));
    return p;
}

RatFunc rand_ratfunc(int max_deg = 6) {
    QPoly d = rand_poly(max_deg);
    while (d.is_zero()) d = rand_poly(max_deg);
    return RatFunc(rand_poly(max_deg, false), d);
}

} // namespace

TEST_CASE("rational string round trip") {
    CHECK(rat_str(Rat(1, 2)) == "1/2");
    CHECK(rat_str(Rat(-3)) == "-3");
    CHECK(rat_parse("6/4") == Rat(3, 2));
    CHECK(rat_parse("-7") == Rat(-7));
    CHECK_THROWS(rat_parse("x"));
}

TEST_CASE("residue basics") {
    RatFunc z = rf_var();
    // 1/z at 0 -> 1
    CHECK(residue_at(RatFunc(QPoly(Rat(1)), QPoly::monomial(1)), Rat(0)) == Rat(1));
    // 1/z^2 at 0 -> 0
    CHECK(residue_at(RatFunc(QPoly(Rat(1)), QPoly::monomial(2)), Rat(0)) == Rat(0));
    // 1/((z-1)(z+1)) at 1 -> 1/2
    QPoly den = QPoly(std::vector<Rat>{Rat(-1), Rat(1)}) * QPoly(std::vector<Rat>{Rat(1), Rat(1)});
    CHECK(residue_at(RatFunc(QPoly(Rat(1)), den), Rat(1)) == Rat(1, 2));
    // non-pole
    CHECK(residue_at(RatFunc(QPoly(Rat(1)), den), Rat(5)) == Rat(0));
}

TEST_CASE("laurent expansion") {
    // 1/(z^2-1) at 0, order 2: -1 - z^2
    RatFunc f(QPoly(Rat(1)), QPoly(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)}));
    auto s = laurent_at(f, Rat(0), 2);
    CHECK(s.coeff(0) == Rat(-1));
    CHECK(s.coeff(1) == Rat(0));
    CHECK(s.coeff(2) == Rat(-1));

    // f = z at infinity: leading exponent -1 in 1/z with coefficient 1
    auto si = laurent_at_infinity(RatFunc(QPoly::monomial(1)), 0);
    CHECK(si.min_exp() == -1);
    CHECK(si.coeff(-1) == Rat(1));

    // (3z^2-1)/(48 z^3) at 0 to order -1: exponents -3..-1 give -1/48, 0, 3/48
    RatFunc g(QPoly(std::vector<Rat>{Rat(-1), Rat(0), Rat(3)}), QPoly::monomial(3, Rat(48)));
    auto sg = laurent_at(g, Rat(0), -1);
    CHECK(sg.min_exp() == -3);
    CHECK(sg.coeff(-3) == Rat(-1, 48));
    CHECK(sg.coeff(-2) == Rat(0));
    CHECK(sg.coeff(-1) == Rat(1, 16));

    // order below pole order rejected
    CHECK_THROWS(laurent_at(g, Rat(0), -4));
}

TEST_CASE("hermite antiderivative examples") {
    // -1/(2z) -> logs [(-1/2, z)]
    RatFunc f(QPoly(Rat(-1)), QPoly::monomial(1, Rat(2)));
    auto a = hermite_antiderivative(f);
    CHECK(a.rational.is_zero());
    REQUIRE(a.logs.size() == 1);
    CHECK(a.logs[0].first == Rat(-1, 2));
    CHECK(a.logs[0].second == QPoly::monomial(1));

    // (1 - z^2)/(16 z^4) -> (3z^2-1)/(48z^3), no logs   (Lambda = 1)
    RatFunc g(QPoly(std::vector<Rat>{Rat(1), Rat(0), Rat(-1)}), QPoly::monomial(4, Rat(16)));
    auto b = hermite_antiderivative(g);
    CHECK(b.logs.empty());
    RatFunc expect(QPoly(std::vector<Rat>{Rat(-1), Rat(0), Rat(3)}), QPoly::monomial(3, Rat(48)));
    CHECK(b.rational == expect);

    // 1/z^2 -> -1/z
    RatFunc h(QPoly(Rat(1)), QPoly::monomial(2));
    auto c = hermite_antiderivative(h);
    CHECK(c.logs.empty());
    CHECK(c.rational == RatFunc(QPoly(Rat(-1)), QPoly::monomial(1)));
}

TEST_CASE("property: residue equals laurent coefficient -1") {
    for (int iter = 0; iter < 200; ++iter) {
        RatFunc f = rand_ratfunc();
        Rat q = rand_rat(4);
        CHECK(residue_at(f, q) == laurent_at(f, q, 0).coeff(-1));
    }
}

TEST_CASE("property: hermite round trip") {
    for (int iter = 0; iter < 200; ++iter) {
        // build representable f: derivative of a rational + rational-residue logs
        RatFunc base = rand_ratfunc(5);
        RatFunc f = base.derivative();
        std::uniform_int_distribution<int> nlog(0, 3);
        int k = nlog(rng);
        for (int i = 0; i < k; ++i) {
            Rat c = rand_rat(5), root = rand_rat(3);
            QPoly lin(std::vector<Rat>{-root, Rat(1)});
            f += RatFunc(QPoly(c), lin);
        }
        auto a = hermite_antiderivative(f);
        CHECK(a.derivative() == f);
    }
}

TEST_CASE("property: canonical equality") {
    for (int iter = 0; iter < 200; ++iter) {
        RatFunc a = rand_ratfunc();
        CHECK((a - a).is_zero());
        if (!a.is_zero()) {
            RatFunc b = rand_ratfunc();
            if (b.is_zero()) continue;
            CHECK((a / b) * (b / a) == RatFunc(Rat(1)));
        }
    }
}

TEST_CASE("property: global residues sum to zero") {
    for (int iter = 0; iter < 200; ++iter) {
        // denominator with known rational roots, numerator deg <= deg den + 5
        std::uniform_int_distribution<int> nn(1, 4);
        int k = nn(rng);
        QPoly den(Rat(1));
        std::vector<Rat> roots;
        for (int i = 0; i < k; ++i) {
            Rat r = Rat(i) + rand_rat(2); // likely distinct
            bool dup = false;
            for (auto& q : roots) dup = dup || (q == r);
            if (dup) { --i; continue; }
            roots.push_back(r);
            den *= QPoly(std::vector<Rat>{-r, Rat(1)});
        }
        QPoly num = rand_poly(den.degree() + 5, false);
        RatFunc f(num, den);
        Rat total(0);
        for (const Rat& r : roots) total += residue_at(f, r);
        total += residue_at_infinity(f);
        CHECK(total == Rat(0));
    }
}

TEST_CASE("series inverse and arithmetic") {
    // (1+z)^{-1} = 1 - z + z^2 - ...
    TSeries<Rat> s(0, {Rat(1), Rat(1), Rat(0), Rat(0)}, 3);
    auto inv = s.inverse();
    CHECK(inv.coeff(0) == Rat(1));
    CHECK(inv.coeff(1) == Rat(-1));
    CHECK(inv.coeff(2) == Rat(1));
    CHECK(inv.coeff(3) == Rat(-1));
    auto prod = s * inv;
    CHECK(prod.coeff(0) == Rat(1));
    CHECK(prod.coeff(1) == Rat(0));
}

TEST_CASE("multiseries inverse/exp/log") {
    MSeries<Rat> one_plus(2, 4);
    one_plus.add_term({0, 0}, Rat(1));
    one_plus.add_term({1, 0}, Rat(2));
    one_plus.add_term({0, 1}, Rat(-1));
    auto inv = one_plus.inverse();
    auto prod = one_plus * inv;
    CHECK(prod.constant_term() == Rat(1));
    CHECK(prod.coeff({1, 0}) == Rat(0));
    CHECK(prod.coeff({2, 1}) == Rat(0));

    auto lg = one_plus.log1();
    auto back = lg.exp0();
    CHECK(back.coeff({1, 0}) == Rat(2));
    CHECK(back.coeff({0, 1}) == Rat(-1));
    CHECK(back.coeff({2, 2}) == one_plus.coeff({2, 2}));
}

TEST_CASE("bigfloat and bigcomplex") {
    BigFloat a(Rat(1, 3));
    CHECK(abs(a * BigFloat(3) - BigFloat(1)).to_double() < 1e-45);
    BigComplex i(BigFloat(0), BigFloat(1));
    BigComplex r = sqrt(i);
    BigComplex chk = r * r - i;
    CHECK(abs(chk).to_double() < 1e-45);
    BigComplex e = exp(BigComplex(BigFloat(0), BigFloat::pi()));
    CHECK(abs(e + BigComplex(1)).to_double() < 1e-45);
}

TEST_CASE("polynomial complex roots") {
    // z^3 - 1
    QPoly p(std::vector<Rat>{Rat(-1), Rat(0), Rat(0), Rat(1)});
    auto roots = poly_roots(p);
    REQUIRE(roots.size() == 3);
    for (auto& r : roots) {
        BigComplex v = pow_int(r, 3) - BigComplex(1);
        CHECK(abs(v).to_double() < 1e-40);
    }
}
