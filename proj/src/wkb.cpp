#include "qgkz/wkb.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace qgkz {

namespace {

// multiply a theta-polynomial (coefficients MPoly2 in (x,hbar)) by
// (theta + s0 + s1*hbar); the shift commutes with theta
std::vector<MPoly2> mul_linear(const std::vector<MPoly2>& p, const Rat& s0, const Rat& s1) {
    std::vector<MPoly2> r(p.size() + 1);
    MPoly2 shift = MPoly2::term(0, 0, s0) + MPoly2::term(0, 1, s1);
    for (size_t k = 0; k < p.size(); ++k) {
        r[k + 1] += p[k];
        r[k] += p[k] * shift;
    }
    return r;
}

} // namespace

ThetaOperator gkz_operator(const CurveModel& model) {
    std::vector<MPoly2> wprod{MPoly2(Rat(1))};
    for (int i = 0; i < model.N; ++i) wprod = mul_linear(wprod, -model.w[i], Rat(0));
    std::vector<MPoly2> lprod{MPoly2(Rat(1))};
    for (int a = 0; a < model.n; ++a)
        lprod = mul_linear(lprod, -model.lambda[a], Rat(1));
    ThetaOperator op;
    op.c.resize(std::max(wprod.size(), lprod.size()));
    MPoly2 x = MPoly2::term(1, 0, Rat(1));
    for (size_t k = 0; k < op.c.size(); ++k) {
        if (k < wprod.size()) op.c[k] += wprod[k];
        if (k < lprod.size()) op.c[k] -= x * lprod[k];
    }
    op.trim();
    return op;
}

MPoly2 semiclassical_limit(const ThetaOperator& op) {
    MPoly2 A;
    for (size_t k = 0; k < op.c.size(); ++k)
        for (auto& [key, v] : op.c[k].terms())
            if (key.second == 0) A.add(key.first, (int)k, v);
    return A;
}

bool operator_equal(const ThetaOperator& a, const ThetaOperator& b, Rat* factor,
                    std::string* mismatch) {
    ThetaOperator ta = a, tb = b;
    ta.trim();
    tb.trim();
    if (ta.c.size() != tb.c.size()) {
        if (mismatch) *mismatch = "operator orders differ";
        return false;
    }
    Rat f(0);
    for (size_t k = 0; k < ta.c.size(); ++k) {
        if (ta.c[k].is_zero() != tb.c[k].is_zero()) {
            if (mismatch) {
                std::ostringstream os;
                os << "coefficient of theta^" << k << " vanishes on one side only";
                *mismatch = os.str();
            }
            return false;
        }
        if (!ta.c[k].is_zero() && f == 0)
            f = ta.c[k].terms().begin()->second / tb.c[k].terms().begin()->second;
    }
    if (f == 0) {
        if (factor) *factor = Rat(1);
        return true; // both zero
    }
    for (size_t k = 0; k < ta.c.size(); ++k) {
        if (!(ta.c[k] == tb.c[k] * f)) {
            if (mismatch) {
                std::ostringstream os;
                os << "mismatch at theta^" << k;
                for (auto& [key, v] : ta.c[k].terms())
                    if (!(v == (tb.c[k] * f).coeff(key.first, key.second))) {
                        os << " (deg_x=" << key.first << ", deg_h=" << key.second << ")";
                        break;
                    }
                *mismatch = os.str();
            }
            return false;
        }
    }
    if (factor) *factor = f;
    return true;
}

namespace {

using HSeries = std::vector<RatFunc>; // truncated series in hbar over Q(z)

HSeries hmul(const HSeries& a, const HSeries& b, int T) {
    HSeries r(T + 1);
    for (int i = 0; i <= T; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= T; ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

} // namespace

WKBSeries wkb_expand(const ThetaOperator& op, const SpectralCurve& curve, int m_max) {
    if (m_max < 1) throw std::invalid_argument("wkb_expand: m_max >= 1");
    MPoly2 A = semiclassical_limit(op);
    if (!A.proportional(curve.A))
        throw std::invalid_argument(
            "wkb_expand: operator's classical limit differs from the curve");

    const int T = m_max;
    RatFunc theta_factor = curve.x / curve.x.derivative(); // x d/dx = (x/x') d/dz
    auto L = [&](const RatFunc& f) { return theta_factor * f.derivative(); };

    RatFunc b = A.d_second().eval_ratfunc(curve.x, curve.y);
    if (b.is_zero())
        throw std::invalid_argument("wkb_expand: degenerate curve (dA/dy = 0)");

    int N = op.order();
    std::vector<HSeries> ck(N + 1, HSeries(T + 1));
    {
        std::vector<RatFunc> xpow{RatFunc(Rat(1))};
        for (int k = 0; k <= N; ++k)
            for (auto& [key, v] : op.c[k].terms()) {
                while ((int)xpow.size() <= key.first) xpow.push_back(xpow.back() * curve.x);
                if (key.second <= T) ck[k][key.second] += xpow[key.first] * v;
            }
    }

    HSeries Y(T + 1);
    Y[0] = curve.y;

    auto apply = [&](int orders_needed) {
        HSeries E(T + 1);
        HSeries R(T + 1);
        R[0] = RatFunc(Rat(1));
        for (int k = 0; k <= N; ++k) {
            for (int j = 0; j <= orders_needed; ++j)
                if (!ck[k][j].is_zero())
                    for (int i = 0; i + j <= orders_needed; ++i)
                        E[i + j] += ck[k][j] * R[i];
            if (k == N) break;
            HSeries next = hmul(Y, R, T);
            for (int j = 1; j <= T; ++j) next[j] += L(R[j - 1]);
            R = next;
        }
        return E;
    };

    WKBSeries out;
    out.curve = curve;
    out.y_m.resize(m_max + 1);
    out.y_m[0] = curve.y;
    for (int m = 1; m <= m_max; ++m) {
        HSeries E = apply(m);
        if (!E[m - 1].is_zero())
            throw std::logic_error("wkb_expand: hierarchy inconsistent below order m");
        out.y_m[m] = -(E[m] / b);
        Y[m] = out.y_m[m];
    }
    // re-substitution: every order through m_max must vanish identically
    HSeries E = apply(m_max);
    for (int m = 0; m <= m_max; ++m)
        if (!E[m].is_zero())
            throw std::logic_error("wkb_expand: re-substitution residual");

    out.dSm_dz.resize(m_max + 1);
    out.S_m.resize(m_max + 1);
    RatFunc dlogx = curve.x.derivative() / curve.x;
    for (int m = 0; m <= m_max; ++m) {
        out.dSm_dz[m] = out.y_m[m] * dlogx;
        try {
            Antiderivative a = hermite_antiderivative(out.dSm_dz[m]);
            if (m >= 2 && !a.logs.empty())
                throw std::logic_error("wkb_expand: log part at m >= 2");
            out.S_m[m] = std::move(a);
        } catch (const std::domain_error&) {
            if (m >= 2) throw;
            out.S_m[m] = std::nullopt; // irrational log data can appear at m <= 1
        }
    }
    return out;
}

CompareReport compare_wavefunctions(const WKBSeries& wkb,
                                    const std::vector<RatFunc>& dFm_dz, int m_max) {
    CompareReport rep;
    std::ostringstream detail;
    rep.derivative_equal.resize(m_max + 1, false);
    rep.normalized.resize(m_max + 1, true);
    for (int m = 0; m <= m_max; ++m) {
        bool eq = m < (int)dFm_dz.size() && m < (int)wkb.dSm_dz.size() &&
                  wkb.dSm_dz[m] == dFm_dz[m];
        rep.derivative_equal[m] = eq;
        if (!eq) {
            rep.all_equal = false;
            detail << "dS_" << m << "/dz differs; ";
        }
        if (m >= 2 && m < (int)wkb.S_m.size() && wkb.S_m[m]) {
            const RatFunc& s = wkb.S_m[m]->rational;
            bool norm = wkb.curve.zstar_at_infinity
                            ? (s.is_zero() || s.order_at_infinity() > 0)
                            : s.eval(wkb.curve.zstar) == Rat(0);
            rep.normalized[m] = norm;
            if (!norm) {
                rep.all_equal = false;
                detail << "S_" << m << " not normalized at z*; ";
            }
        }
    }
    rep.detail = detail.str();
    return rep;
}

std::vector<RatFunc> onshell_j_series(const CurveModel& model, int pivot, int d_max) {
    if (pivot < 0 || pivot >= model.N)
        throw std::invalid_argument("onshell_j_series: pivot out of range");
    Rat wp = model.w[pivot];
    std::vector<RatFunc> c(d_max + 1);
    c[0] = RatFunc(Rat(1));
    for (int d = 1; d <= d_max; ++d) {
        RatFunc num(Rat(1)), den(Rat(1));
        for (int a = 0; a < model.n; ++a)
            num *= RatFunc(QPoly(std::vector<Rat>{wp - model.lambda[a], Rat(d)}));
        for (int i = 0; i < model.N; ++i)
            den *= RatFunc(QPoly(std::vector<Rat>{wp - model.w[i], Rat(d)}));
        c[d] = c[d - 1] * num / den;
    }
    return c;
}

bool annihilation_check(const ThetaOperator& op, const CurveModel& model, int pivot,
                        int d_max, int* fail_degree) {
    std::vector<RatFunc> c = onshell_j_series(model, pivot, d_max);
    Rat wp = model.w[pivot];
    for (int d = 0; d <= d_max; ++d) {
        RatFunc residual;
        for (size_t k = 0; k < op.c.size(); ++k) {
            for (auto& [key, v] : op.c[k].terms()) {
                int i = key.first, j = key.second;
                if (d - i < 0) continue;
                // v x^i hbar^j theta^k on c_{d-i} x^{wp/hbar + d - i}:
                // theta has eigenvalue wp + (d-i) hbar
                QPoly eig(std::vector<Rat>{wp, Rat(d - i)});
                QPoly pw(Rat(1));
                for (size_t e = 0; e < k; ++e) pw *= eig;
                residual += RatFunc(QPoly::monomial(j, v) * pw) * c[d - i];
            }
        }
        if (!residual.is_zero()) {
            if (fail_degree) *fail_degree = d;
            return false;
        }
    }
    return true;
}

std::string operator_to_json(const ThetaOperator& op) {
    nlohmann::json j;
    j["order"] = op.order();
    j["coeffs"] = nlohmann::json::array();
    for (size_t k = 0; k < op.c.size(); ++k)
        for (auto& [key, v] : op.c[k].terms())
            j["coeffs"].push_back({(int)k, key.first, key.second, rat_str(v)});
    return j.dump(2);
}

} // namespace qgkz
