#include "qgkz/toprec.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace qgkz {

bool MLaurent::symmetric() const {
    if (n_ < 2) return true;
    for (int i = 0; i + 1 < n_; ++i) {
        std::vector<int> perm(n_);
        for (int k = 0; k < n_; ++k) perm[k] = k;
        std::swap(perm[i], perm[i + 1]);
        if (!(permuted(perm).terms() == t_)) return false;
    }
    return true;
}

void MLaurent::exponent_range(int var, int& lo, int& hi) const {
    lo = 0;
    hi = 0;
    bool first = true;
    for (auto& [k, v] : t_) {
        if (first) {
            lo = hi = k[var];
            first = false;
        } else {
            lo = std::min(lo, k[var]);
            hi = std::max(hi, k[var]);
        }
    }
}

namespace {

// Series in a local parameter with MLaurent coefficients over the ambient
// spectator variables.
struct SeriesML {
    int nv = 0;       // ambient variable count
    int lo = 0;       // exponent of c[0]
    std::vector<MLaurent> c;

    static SeriesML zero(int nv, int lo, int hi) {
        SeriesML s;
        s.nv = nv;
        s.lo = lo;
        s.c.assign(std::max(0, hi - lo + 1), MLaurent(nv));
        return s;
    }
    int hi() const { return lo + (int)c.size() - 1; }
    MLaurent coeff(int e) const {
        if (e < lo || e > hi()) return MLaurent(nv);
        return c[e - lo];
    }
    void add(int e, const MLaurent& m) {
        if (e < lo || e > hi()) throw std::logic_error("SeriesML::add out of range");
        c[e - lo] += m;
    }
};

SeriesML mul(const SeriesML& a, const SeriesML& b, int hi_cap) {
    SeriesML r = SeriesML::zero(a.nv, a.lo + b.lo, hi_cap);
    for (int i = a.lo; i <= a.hi(); ++i) {
        const MLaurent& ca = a.coeff(i);
        if (ca.is_zero()) continue;
        for (int j = b.lo; j <= b.hi() && i + j <= hi_cap; ++j) {
            const MLaurent& cb = b.coeff(j);
            if (cb.is_zero()) continue;
            r.add(i + j, ca * cb);
        }
    }
    return r;
}

SeriesML from_tseries(const TSeries<Rat>& s, int nv) {
    SeriesML r = SeriesML::zero(nv, s.min_exp(), s.trunc());
    for (int k = s.min_exp(); k <= s.trunc(); ++k)
        r.add(k, MLaurent::term(nv, std::vector<int>(nv, 0), s.coeff(k)));
    return r;
}

// slot assignment for substituting a stored correlator into the bracket
struct Slot {
    bool local;     // substitute the local parameter
    int sign;       // +1: w (or 1/u at infinity), -1: -w
    int ambient;    // ambient variable index when !local
};

// substitute slots of a stored k-variable correlator; at_inf maps z -> 1/u
SeriesML substitute(const MLaurent& om, const std::vector<Slot>& slots, int nv,
                    bool at_inf, int hi_cap) {
    int lo_cap = 0;
    // conservative range discovery pass
    int lo = 1 << 28, hi = -(1 << 28);
    for (auto& [k, v] : om.terms()) {
        int e = 0;
        for (size_t i = 0; i < slots.size(); ++i)
            if (slots[i].local) e += at_inf ? -k[i] : k[i];
        lo = std::min(lo, e);
        hi = std::max(hi, e);
    }
    if (om.terms().empty()) {
        lo = 0;
        hi = -1;
    }
    (void)lo_cap;
    SeriesML r = SeriesML::zero(nv, lo, std::min(hi, hi_cap));
    for (auto& [k, v] : om.terms()) {
        int e = 0;
        int sgn = 1;
        std::vector<int> amb(nv, 0);
        for (size_t i = 0; i < slots.size(); ++i) {
            if (slots[i].local) {
                int ei = at_inf ? -k[i] : k[i];
                e += ei;
                if (slots[i].sign < 0 && (k[i] & 1)) sgn = -sgn;
            } else {
                amb[slots[i].ambient] += k[i];
            }
        }
        if (e > r.hi() || e < r.lo) {
            if (e <= hi_cap) throw std::logic_error("substitute: range miss");
            continue;
        }
        r.add(e, MLaurent::term(nv, amb, sgn < 0 ? Rat(-v) : v));
    }
    return r;
}

// B(sign*w, z_j) = 1/(sign*w - z_j)^2 expanded at w=0:
//   sum_k (k+1) sign^k w^k z_j^{-k-2}
// at infinity (w = 1/u): 1/(sign/u - z_j)^2 = sum_k (k+1) sign^k z_j^k u^{k+2}
SeriesML bergman_series(int nv, int ambient, int sign, bool at_inf, int hi_cap) {
    int lo = at_inf ? 2 : 0;
    SeriesML r = SeriesML::zero(nv, lo, hi_cap);
    for (int k = 0; lo + k <= hi_cap; ++k) {
        Rat c = Rat(k + 1);
        if (sign < 0 && (k & 1)) c = -c;
        std::vector<int> key(nv, 0);
        key[ambient] = at_inf ? k : -k - 2;
        r.add(lo + k, MLaurent::term(nv, key, c));
    }
    return r;
}

// omega_2^{(0)}(w, -w) = 1/(4 w^2); at infinity u^2/4
SeriesML bergman_diag(int nv, bool at_inf, int hi_cap) {
    SeriesML r = SeriesML::zero(nv, at_inf ? 2 : -2, hi_cap);
    r.add(at_inf ? 2 : -2, MLaurent::term(nv, std::vector<int>(nv, 0), Rat(1, 4)));
    return r;
}

} // namespace

ExactTR::ExactTR(const SpectralCurve& curve) : curve_(curve) {
    if (curve.coord != CoordKind::cp1_sqrt && curve.coord != CoordKind::cp1_zhukovsky)
        throw std::invalid_argument(
            "ExactTR needs an involution chart; use the numeric engine instead");
    ram_at_infinity_ = curve.coord == CoordKind::cp1_zhukovsky;
    RatFunc ym = curve_.y.compose(-rf_var());
    phi_ = curve_.x / ((curve_.y - ym) * Rat(2) * curve_.x.derivative());
}

const MLaurent& ExactTR::omega(int g, int n) {
    if (2 * g - 2 + n <= 0)
        throw std::invalid_argument("omega: need 2g-2+n > 0");
    auto key = std::make_pair(g, n);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    MLaurent w = recurse(g, n);
    return cache_.emplace(key, std::move(w)).first->second;
}

MLaurent ExactTR::recurse(int g, int n) {
    // build omega_{g,n}(z_0, z_1..z_{n-1}) by residues at the ramification set
    int nrest = n - 1;
    MLaurent result(n);

    // enumerate bracket factor products lazily per ramification point
    for (int at_inf = 0; at_inf <= (ram_at_infinity_ ? 1 : 0); ++at_inf) {
        // assemble the bracket as SeriesML over ambient vars 1..n-1 (indices
        // shifted: ambient index i means final variable i, slot var 0 is z_0)
        // the residue pairs kernel powers with product exponents; product
        // coefficients are needed up to exponent -2 (finite) or 0 (infinity)
        int hi_product = at_inf ? 0 : -2;

        // low exponent of a bracket factor in the local parameter
        auto piece_lo = [&](int gg, const std::vector<int>& set) -> int {
            int k = (int)set.size() + 1;
            if (gg == 0 && k == 2) return at_inf ? 2 : 0;
            const MLaurent& om = omega(gg, k);
            int lo = 0;
            bool first = true;
            for (auto& [key, v] : om.terms()) {
                int e = at_inf ? -key[0] : key[0];
                if (first) { lo = e; first = false; }
                lo = std::min(lo, e);
            }
            return lo;
        };

        auto piece = [&](int gg, const std::vector<int>& set, int sign,
                         int cap) -> SeriesML {
            // omega_{gg, |set|+1}(sign*w, z_set)
            int k = (int)set.size() + 1;
            if (gg == 0 && k == 1) return SeriesML::zero(n, 0, -1); // omega_1^0 = 0
            if (gg == 0 && k == 2)
                return bergman_series(n, set[0], sign, at_inf, cap);
            const MLaurent& om = omega(gg, k);
            std::vector<Slot> slots(k);
            slots[0] = {true, sign, 0};
            for (int i = 1; i < k; ++i) slots[i] = {false, +1, set[i - 1]};
            return substitute(om, slots, n, at_inf, cap);
        };

        SeriesML bracket = SeriesML::zero(n, 0, -1);
        bool bracket_empty = true;
        auto accumulate = [&](const SeriesML& s) {
            if (bracket_empty) {
                bracket = s;
                bracket_empty = false;
            } else {
                // merge ranges
                int lo = std::min(bracket.lo, s.lo);
                int hi = std::max(bracket.hi(), s.hi());
                SeriesML m = SeriesML::zero(n, lo, hi);
                for (int e = bracket.lo; e <= bracket.hi(); ++e) m.add(e, bracket.coeff(e));
                for (int e = s.lo; e <= s.hi(); ++e) m.add(e, s.coeff(e));
                bracket = m;
            }
        };

        TSeries<Rat> phi_probe =
            at_inf ? laurent_at_infinity(phi_, 4) : laurent_at(phi_, Rat(0), 4);
        int lo_phi = phi_probe.order();
        int hi_bracket = hi_product - lo_phi;

        // (g-1, n+1)-term: omega_{n+1}^{(g-1)}(w, -w, z_rest)
        if (g >= 1) {
            if (g == 1 && n == 1) {
                accumulate(bergman_diag(n, at_inf, hi_bracket));
            } else {
                const MLaurent& om = omega(g - 1, n + 1);
                std::vector<Slot> slots(n + 1);
                slots[0] = {true, +1, 0};
                slots[1] = {true, -1, 0};
                for (int i = 2; i <= n; ++i) slots[i] = {false, +1, i - 1};
                accumulate(substitute(om, slots, n, at_inf, hi_bracket));
            }
        }

        // stable splittings: sum over g1+g2=g, I subset of rest
        std::vector<int> rest(nrest);
        for (int i = 0; i < nrest; ++i) rest[i] = i + 1;
        int subsets = 1 << nrest;
        for (int g1 = 0; g1 <= g; ++g1) {
            int g2 = g - g1;
            for (int mask = 0; mask < subsets; ++mask) {
                std::vector<int> I, J;
                for (int i = 0; i < nrest; ++i)
                    (mask >> i & 1 ? I : J).push_back(rest[i]);
                // exclude omega_1^{(0)} factors (they vanish)
                if (g1 == 0 && I.empty()) continue;
                if (g2 == 0 && J.empty()) continue;
                // each factor expanded far enough to feed the partner's pole
                int lo1 = piece_lo(g1, I), lo2 = piece_lo(g2, J);
                SeriesML f1 = piece(g1, I, +1, hi_bracket - lo2);
                SeriesML f2 = piece(g2, J, -1, hi_bracket - lo1);
                accumulate(mul(f1, f2, hi_bracket));
            }
        }
        if (bracket_empty || hi_product - bracket.lo < lo_phi) continue;

        // C = phi * bracket, with the d(sigma w) sign folded in as (-1)
        TSeries<Rat> phi_s = at_inf
                                 ? laurent_at_infinity(phi_, hi_product - bracket.lo)
                                 : laurent_at(phi_, Rat(0), hi_product - bracket.lo);
        SeriesML C = mul(from_tseries(phi_s, n), bracket, hi_product);

        if (!at_inf) {
            // kernel: sum_{k odd >= 1} 2 z0^{-k-1} w^k ; residue picks C[-1-k]
            for (int k = 1; -1 - k >= C.lo; k += 2) {
                MLaurent coef = C.coeff(-1 - k);
                if (coef.is_zero()) continue;
                MLaurent shifted(n);
                for (auto& [kk, vv] : coef.terms()) {
                    std::vector<int> key = kk;
                    key[0] -= k + 1;
                    shifted.add(key, vv * Rat(-2)); // global (-1) * 2
                }
                result += shifted;
            }
        } else {
            // residue at infinity: kernel(-2) * global(-1) * measure(-1) = -2
            for (int k = 0; -k >= C.lo; k += 2) {
                MLaurent coef = C.coeff(-k);
                if (coef.is_zero()) continue;
                MLaurent shifted(n);
                for (auto& [kk, vv] : coef.terms()) {
                    std::vector<int> key = kk;
                    key[0] += k;
                    shifted.add(key, vv * Rat(-2));
                }
                result += shifted;
            }
        }
    }
    return result;
}

RatFunc ExactTR::dF0_dz() const {
    return curve_.y * curve_.x.derivative() / curve_.x;
}

RatFunc ExactTR::dF1_dz() const {
    RatFunc z = rf_var();
    RatFunc half_over_z(QPoly(Rat(1)), QPoly::monomial(1, Rat(2)));
    if (curve_.zstar_at_infinity) return -half_over_z;
    QPoly den(std::vector<Rat>{curve_.zstar, Rat(1)});
    return RatFunc(QPoly(Rat(1)), den) - half_over_z;
}

RatFunc ExactTR::f_gn(int g, int n) {
    const MLaurent& om = omega(g, n);
    RatFunc total;
    RatFunc z = rf_var();
    for (auto& [k, v] : om.terms()) {
        RatFunc term(v);
        for (int i = 0; i < n; ++i) {
            int e = k[i];
            if (e == -1)
                throw std::logic_error("f_gn: unexpected residue term in correlator");
            // primitive of t^e from z* to z
            Rat inv_e1 = Rat(1) / Rat(e + 1);
            RatFunc prim;
            if (curve_.zstar_at_infinity) {
                if (e >= 0)
                    throw std::logic_error("f_gn: divergent integral from infinity");
                prim = RatFunc(QPoly(inv_e1), QPoly::monomial(-(e + 1)));
            } else {
                Rat cval = rat_pow(curve_.zstar, e + 1) * inv_e1;
                if (e >= 0)
                    prim = RatFunc(QPoly::monomial(e + 1, inv_e1)) - RatFunc(cval);
                else
                    prim = RatFunc(QPoly(inv_e1), QPoly::monomial(-(e + 1))) - RatFunc(cval);
            }
            term *= prim;
        }
        total += term;
    }
    return total;
}

FreeEnergyTable ExactTR::table(int g_max, int n_max) {
    FreeEnergyTable t;
    t.zstar_at_infinity = curve_.zstar_at_infinity;
    t.zstar = curve_.zstar;
    for (int g = 0; g <= g_max; ++g)
        for (int n = 1; n <= n_max; ++n)
            if (2 * g - 2 + n > 0) t.entries[{g, n}] = f_gn(g, n);
    return t;
}

RatFunc ExactTR::dFm_dz(int m) {
    if (m == 0) return dF0_dz();
    if (m == 1) return dF1_dz();
    RatFunc acc;
    Rat fact(1);
    for (int n = 1; n <= m + 1; ++n) {
        if (n > 1) fact *= Rat(n);
        if ((m + 1 - n) % 2) continue;
        int g = (m + 1 - n) / 2;
        if (2 * g - 2 + n <= 0) continue;
        acc += f_gn(g, n).derivative() * (Rat(1) / fact);
    }
    return acc;
}

RatFunc ExactTR::Fm(int m) {
    if (m < 2) throw std::invalid_argument("Fm: closed form only for m >= 2");
    RatFunc acc;
    Rat fact(1);
    for (int n = 1; n <= m + 1; ++n) {
        if (n > 1) fact *= Rat(n);
        if ((m + 1 - n) % 2) continue;
        int g = (m + 1 - n) / 2;
        if (2 * g - 2 + n <= 0) continue;
        acc += f_gn(g, n) * (Rat(1) / fact);
    }
    return acc;
}

KernelData kernel(const SpectralCurve& curve) {
    KernelData k;
    RatFunc ym = curve.y.compose(-rf_var());
    k.p = -(curve.x / ((curve.y - ym) * Rat(2) * curve.x.derivative()));
    k.ramification = ramification_points(curve);
    return k;
}

std::vector<RatFunc> fm_recursion(const SpectralCurve& curve, int m_max) {
    if (m_max < 2) throw std::invalid_argument("fm_recursion: m_max >= 2 required");
    KernelData kd = kernel(curve);
    RatFunc p = kd.p;
    RatFunc z = rf_var();
    RatFunc c2 = p.derivative() * Rat(2);
    if (!curve.zstar_at_infinity) {
        Rat zs = curve.zstar;
        // -4 z* /(z^2 - z*^2) * p
        QPoly den(std::vector<Rat>{-zs * zs, Rat(0), Rat(1)});
        c2 += RatFunc(QPoly(Rat(-4) * zs), den) * p;
    }

    std::vector<RatFunc> dF(m_max + 1);
    ExactTR seeds(curve); // for the closed-form dF0, dF1
    dF[0] = seeds.dF0_dz();
    dF[1] = seeds.dF1_dz();
    if (m_max >= 2) {
        // m = 1 step carries F1'^2 once, not twice
        dF[2] = (dF[1].derivative() - dF[1] * dF[1]) * Rat(2) * p + c2 * dF[1];
    }
    for (int m = 2; m < m_max; ++m) {
        RatFunc bracket = dF[m].derivative();
        for (int a = 2; a <= m - 1; ++a) {
            int b = m + 1 - a;
            if (b < 2 || b > m) continue;
            bracket += dF[a] * dF[b];
        }
        dF[m + 1] = bracket * Rat(2) * p + c2 * dF[m];
    }
    return dF;
}

std::string correlator_to_json(int g, int n, const MLaurent& w) {
    nlohmann::json j;
    j["g"] = g;
    j["n"] = n;
    j["terms"] = nlohmann::json::array();
    for (auto& [k, v] : w.terms()) {
        nlohmann::json t;
        t["exponents"] = k;
        t["coeff"] = rat_str(v);
        j["terms"].push_back(t);
    }
    return j.dump(2);
}

std::string free_energy_to_json(int m, const RatFunc& dFm_dz, const Antiderivative& Fm) {
    nlohmann::json j;
    j["m"] = m;
    auto rf = [](const RatFunc& f) {
        nlohmann::json o;
        o["num"] = nlohmann::json::array();
        o["den"] = nlohmann::json::array();
        for (int k = 0; k <= f.num().degree(); ++k) o["num"].push_back(rat_str(f.num().coeff(k)));
        for (int k = 0; k <= f.den().degree(); ++k) o["den"].push_back(rat_str(f.den().coeff(k)));
        return o;
    };
    j["dFm_dz"] = rf(dFm_dz);
    j["rational"] = rf(Fm.rational);
    j["logs"] = nlohmann::json::array();
    for (auto& [c, p] : Fm.logs) {
        nlohmann::json e;
        e["coeff"] = rat_str(c);
        e["poly"] = nlohmann::json::array();
        for (int k = 0; k <= p.degree(); ++k) e["poly"].push_back(rat_str(p.coeff(k)));
        j["logs"].push_back(e);
    }
    return j.dump(2);
}

} // namespace qgkz
