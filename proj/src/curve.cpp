#include "qgkz/curve.hpp"

#include "qgkz/hermite.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qgkz {

MPoly2 resultant_z(std::vector<MPoly2> p1, std::vector<MPoly2> p2) {
    while (!p1.empty() && p1.back().is_zero()) p1.pop_back();
    while (!p2.empty() && p2.back().is_zero()) p2.pop_back();
    int m = (int)p1.size() - 1, n = (int)p2.size() - 1;
    if (m < 0 || n < 0) return MPoly2();
    int dim = m + n;
    if (dim == 0) return MPoly2(Rat(1));
    // Sylvester matrix
    std::vector<std::vector<MPoly2>> M(dim, std::vector<MPoly2>(dim));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) M[r][r + k] = p1[m - k];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) M[n + r][r + k] = p2[n - k];
    // Bareiss fraction-free elimination
    MPoly2 prev(Rat(1));
    int sign = 1;
    for (int k = 0; k + 1 < dim; ++k) {
        if (M[k][k].is_zero()) {
            int swap_with = -1;
            for (int i = k + 1; i < dim; ++i)
                if (!M[i][k].is_zero()) { swap_with = i; break; }
            if (swap_with < 0) return MPoly2(); // singular: resultant 0
            std::swap(M[k], M[swap_with]);
            sign = -sign;
        }
        for (int i = k + 1; i < dim; ++i) {
            for (int j = k + 1; j < dim; ++j) {
                MPoly2 numr = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                M[i][j] = numr.is_zero() ? MPoly2() : exact_div(numr, prev);
            }
            M[i][k] = MPoly2();
        }
        prev = M[k][k];
    }
    MPoly2 det = M[dim - 1][dim - 1];
    return sign < 0 ? -det : det;
}

MPoly2 gkz_curve_poly(const CurveModel& model) {
    MPoly2 acc(Rat(1));
    for (int i = 0; i < model.N; ++i) {
        MPoly2 f = MPoly2::term(0, 1, Rat(1));
        f.add(0, 0, -model.w[i]);
        acc *= f;
    }
    MPoly2 xprod = MPoly2::term(1, 0, Rat(1));
    for (int a = 0; a < model.n; ++a) {
        MPoly2 f = MPoly2::term(0, 1, Rat(1));
        f.add(0, 0, -model.lambda[a]);
        xprod *= f;
    }
    return acc - xprod;
}

namespace {

void validate_model(const CurveModel& model) {
    if (model.N < 1 || (int)model.w.size() != model.N)
        throw std::invalid_argument("curve: need N equivariant parameters");
    if (model.n < 0 || model.n >= model.N || (int)model.lambda.size() != model.n)
        throw std::invalid_argument("curve: need n < N hypersurface parameters");
    if (model.family == Family::projective_space && model.n != 0)
        throw std::invalid_argument("curve: projective space has n = 0");
}

RatFunc standard_x(const CurveModel& model) {
    QPoly num(Rat(1)), den(Rat(1));
    for (const Rat& wi : model.w) num *= QPoly(std::vector<Rat>{-wi, Rat(1)});
    for (const Rat& la : model.lambda) den *= QPoly(std::vector<Rat>{-la, Rat(1)});
    return RatFunc(num, den);
}

// cross-validate the resultant construction against the closed form
void check_resultant(const SpectralCurve& c) {
    auto in_z = [](const RatFunc& f, int which /*1=x,2=y*/) {
        std::vector<MPoly2> coeffs;
        int d = std::max(f.num().degree(), f.den().degree());
        for (int k = 0; k <= d; ++k) {
            MPoly2 ck;
            if (k <= f.den().degree())
                ck += which == 1 ? MPoly2::term(1, 0, f.den().coeff(k))
                                 : MPoly2::term(0, 1, f.den().coeff(k));
            if (k <= f.num().degree()) ck -= MPoly2(f.num().coeff(k));
            coeffs.push_back(ck);
        }
        return coeffs;
    };
    MPoly2 res = resultant_z(in_z(c.x, 1), in_z(c.y, 2));
    if (res.is_zero())
        throw std::invalid_argument("curve: resultant elimination degenerate");
    if (!res.proportional(c.A))
        throw std::invalid_argument("curve: resultant does not match closed form");
}

void check_nondegenerate(const SpectralCurve& c) {
    RatFunc dx = c.x.derivative(), dy = c.y.derivative();
    if (dx.is_zero() || dy.is_zero())
        throw std::invalid_argument("curve: constant projection");
    QPoly g = poly_gcd(dx.num(), dy.num());
    if (g.degree() > 0)
        throw std::invalid_argument("curve: dx and dy share a zero (degenerate)");
    // simple ramification in the chart: zeros of dx squarefree
    QPoly nx = dx.num();
    QPoly s = poly_gcd(nx, nx.derivative());
    if (s.degree() > 0)
        throw std::invalid_argument("curve: ramification not simple");
}

} // namespace

SpectralCurve build_curve(const CurveModel& model, CoordKind coord) {
    validate_model(model);
    SpectralCurve c;
    c.model = model;
    c.coord = coord;
    c.A = gkz_curve_poly(model);
    switch (coord) {
    case CoordKind::standard: {
        c.x = standard_x(model);
        c.y = rf_var();
        c.zstar_at_infinity = true;
        break;
    }
    case CoordKind::cp1_sqrt: {
        if (model.N != 2 || model.n != 0)
            throw std::invalid_argument("cp1_sqrt needs N=2, n=0");
        Rat L = (model.w[0] - model.w[1]) * (model.w[0] - model.w[1]) / Rat(4);
        c.x = RatFunc(QPoly(std::vector<Rat>{-L, Rat(0), Rat(1)}));
        c.y = RatFunc(QPoly(std::vector<Rat>{(model.w[0] + model.w[1]) / Rat(2), Rat(1)}));
        c.zstar_at_infinity = true;
        break;
    }
    case CoordKind::cp1_zhukovsky: {
        if (model.N != 2 || model.n != 1)
            throw std::invalid_argument("cp1_zhukovsky needs N=2, n=1");
        Rat disc = (model.lambda[0] - model.w[0]) * (model.lambda[0] - model.w[1]);
        Rat s;
        if (!rat_sqrt(disc, s))
            throw std::invalid_argument(
                "cp1_zhukovsky: (lambda1-w0)(lambda1-w1) is not a rational square; "
                "use the numeric backend");
        c.sqrt_disc = s;
        Rat c0 = model.w[0] + model.w[1] - Rat(2) * model.lambda[0];
        // x(z) = -c0 + 2 s (z^2+1)/(z^2-1)
        QPoly zm1(std::vector<Rat>{Rat(-1), Rat(0), Rat(1)});
        QPoly zp1(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
        c.x = RatFunc(QPoly(-c0) * zm1 + QPoly(Rat(2) * s) * zp1, zm1);
        // y(z) = (w0+w1+x)/2 + 2 s z/(z^2-1)
        RatFunc half_sum(QPoly((model.w[0] + model.w[1]) / Rat(2)));
        c.y = half_sum + c.x * Rat(1, 2) + RatFunc(QPoly::monomial(1, Rat(2) * s), zm1);
        c.zstar_at_infinity = false;
        c.zstar = Rat(-1);
        break;
    }
    }
    check_nondegenerate(c);
    if (!c.A.eval_ratfunc(c.x, c.y).is_zero())
        throw std::logic_error("curve: parametrization does not satisfy A(x,y)=0");
    check_resultant(c);
    return c;
}

std::vector<RamificationPoint> ramification_points(const SpectralCurve& curve,
                                                   int series_order) {
    std::vector<RamificationPoint> out;
    if (curve.coord == CoordKind::cp1_sqrt || curve.coord == CoordKind::cp1_zhukovsky) {
        RamificationPoint r0;
        r0.exact = true;
        r0.z_exact = Rat(0);
        r0.z_value = BigComplex(0);
        r0.global_involution = true;
        out.push_back(r0);
        if (curve.coord == CoordKind::cp1_zhukovsky) {
            RamificationPoint ri;
            ri.at_infinity = true;
            ri.exact = true;
            ri.global_involution = true; // sigma(z) = -z fixes infinity too
            out.push_back(ri);
        }
        return out;
    }
    // generic chart: numeric zeros of dx/dz with series involution
    RatFunc dx = curve.x.derivative();
    auto roots = poly_roots(dx.num());
    for (const BigComplex& q : roots) {
        RamificationPoint r;
        r.z_value = q;
        int ord = series_order + 2;
        TSeries<BigComplex> t = TSeries<BigComplex>::var(ord);
        auto poly_series = [&](const QPoly& p) {
            TSeries<BigComplex> acc = TSeries<BigComplex>::zero(ord);
            TSeries<BigComplex> base = TSeries<BigComplex>::constant(q, ord) + t;
            TSeries<BigComplex> pw = TSeries<BigComplex>::constant(BigComplex(1), ord);
            for (int k = 0; k <= p.degree(); ++k) {
                acc += pw * BigComplex(Rat(p.coeff(k)));
                if (k < p.degree()) pw *= base;
            }
            return acc;
        };
        TSeries<BigComplex> X = poly_series(curve.x.num()) * poly_series(curve.x.den()).inverse();
        BigFloat a2 = abs(X.coeff(2));
        BigFloat tiny = pow_int(BigFloat(2), -(long)(BigFloat::default_prec / 2));
        if (a2 < tiny)
            throw std::invalid_argument("curve: non-simple ramification point");
        r.simple = true;
        // Newton iteration for the deck transformation: X(sigma(t)) = X(t).
        // The constant and linear coefficients vanish at the exact root; kill
        // the roundoff remnants so they cannot be amplified by inversion.
        TSeries<BigComplex> X0 = X - TSeries<BigComplex>::constant(X.coeff(0), ord);
        X0.set_coeff(0, BigComplex(0));
        X0.set_coeff(1, BigComplex(0));
        TSeries<BigComplex> s = -t;
        for (int it = 0; it < 10; ++it) {
            TSeries<BigComplex> F = X0.compose(s) - X0;
            if (F.order() > series_order) break;
            TSeries<BigComplex> Xp = X0.derivative().compose(s);
            s = (s - F * Xp.inverse()).truncate(ord);
        }
        r.sigma = s.truncate(series_order);
        r.global_involution = false;
        out.push_back(r);
    }
    return out;
}

bool critical_set_check(const CurveModel& model, const Rat& x_sample, int digits,
                        std::string* detail) {
    if (x_sample == 0) throw std::invalid_argument("critical_set_check: x=0");
    Rat w1 = model.N > 1 ? model.w[1] : model.w[0];
    // phi(u) = prod_i(u + w1 - w_i) - x * prod_a(u + w1 - lambda_a)
    QPoly phi(Rat(1));
    for (int i = 0; i < model.N; ++i)
        phi *= QPoly(std::vector<Rat>{w1 - model.w[i], Rat(1)});
    QPoly xprod(Rat(1));
    for (int a = 0; a < model.n; ++a)
        xprod *= QPoly(std::vector<Rat>{w1 - model.lambda[a], Rat(1)});
    phi -= xprod * QPoly(x_sample);

    MPoly2 A = gkz_curve_poly(model);
    std::ostringstream report;
    bool ok = true;

    QPoly remaining = phi;
    for (const Rat& u : rational_roots(phi)) {
        QPoly lin(std::vector<Rat>{-u, Rat(1)});
        while ((remaining % lin).is_zero()) remaining = remaining / lin;
        if (phi.derivative().eval(u) == 0) {
            report << "degenerate critical point u=" << rat_str(u) << "; ";
            ok = false;
            continue;
        }
        Rat y = u + w1;
        if (!(A.eval(x_sample, y) == 0)) {
            report << "A(x,y) != 0 at rational critical point u=" << rat_str(u) << "; ";
            ok = false;
        }
    }
    if (remaining.degree() > 0) {
        BigFloat tol = pow_int(BigFloat(10), -(long)(digits - 10));
        for (const BigComplex& u : poly_roots(remaining)) {
            BigComplex dphi = phi.derivative().eval(u);
            if (abs(dphi) < pow_int(BigFloat(10), -(long)(digits / 2))) {
                report << "degenerate critical point (numeric); ";
                ok = false;
                continue;
            }
            BigComplex y = u + BigComplex(w1);
            BigComplex val = A.eval(BigComplex(x_sample), y);
            if (!(abs(val) < tol)) {
                report << "|A| = " << abs(val).str(5) << " exceeds tolerance; ";
                ok = false;
            }
        }
    }
    if (detail) *detail = report.str();
    return ok;
}

bool branch_labeling_check(const SpectralCurve& curve, const Rat& x_large) {
    const CurveModel& model = curve.model;
    int Nn = model.N - model.n;
    QPoly p = curve.x.num() - curve.x.den() * QPoly(x_large);
    auto roots = poly_roots(p);
    if ((int)roots.size() != model.N) return false;
    BigFloat X(x_large);
    BigFloat growth = exp(log(X) / BigFloat(Nn)); // X^{1/(N-n)}
    int big = 0, near_lambda = 0;
    for (const BigComplex& z : roots) {
        if (abs(z) > growth * BigFloat(0.5)) {
            ++big;
            continue;
        }
        for (const Rat& la : model.lambda)
            if (abs(z - BigComplex(la)) < BigFloat(0.1)) {
                ++near_lambda;
                break;
            }
    }
    return big == Nn && near_lambda == model.n;
}

std::string curve_to_json(const SpectralCurve& curve) {
    nlohmann::json j;
    switch (curve.coord) {
    case CoordKind::standard: j["coordinate"] = "standard"; break;
    case CoordKind::cp1_sqrt: j["coordinate"] = "cp1_sqrt"; break;
    case CoordKind::cp1_zhukovsky: j["coordinate"] = "cp1_zhukovsky"; break;
    }
    nlohmann::json jm;
    jm["family"] = curve.model.family == Family::projective_space
                       ? "projective_space"
                       : "complete_intersection_degree_one";
    jm["N"] = curve.model.N;
    jm["n"] = curve.model.n;
    jm["w"] = nlohmann::json::array();
    for (const Rat& wi : curve.model.w) jm["w"].push_back(rat_str(wi));
    jm["lambda"] = nlohmann::json::array();
    for (const Rat& la : curve.model.lambda) jm["lambda"].push_back(rat_str(la));
    j["model"] = jm;
    auto rf_json = [](const RatFunc& f) {
        nlohmann::json o;
        o["num"] = nlohmann::json::array();
        o["den"] = nlohmann::json::array();
        for (int k = 0; k <= f.num().degree(); ++k) o["num"].push_back(rat_str(f.num().coeff(k)));
        for (int k = 0; k <= f.den().degree(); ++k) o["den"].push_back(rat_str(f.den().coeff(k)));
        return o;
    };
    j["x"] = rf_json(curve.x);
    j["y"] = rf_json(curve.y);
    j["A"] = nlohmann::json::array();
    for (const auto& [k, v] : curve.A.terms())
        j["A"].push_back({k.first, k.second, rat_str(v)});
    if (curve.coord == CoordKind::cp1_zhukovsky) {
        j["sqrt_disc"] = rat_str(curve.sqrt_disc);
        j["sqrt_branch"] = "principal positive root; swapping it interchanges the WKB branches";
    }
    return j.dump(2);
}

} // namespace qgkz
