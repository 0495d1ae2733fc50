#pragma once

#include "qgkz/curve.hpp"
#include "qgkz/hermite.hpp"

#include <map>
#include <string>
#include <vector>

namespace qgkz {

// Sparse Laurent polynomial in n variables over Q; exponents of any sign.
class MLaurent {
public:
    using Key = std::vector<int>;

    explicit MLaurent(int nvars = 0) : n_(nvars) {}
    static MLaurent term(int nvars, const Key& k, const Rat& c) {
        MLaurent m(nvars);
        if (!(c == 0)) m.t_[k] = c;
        return m;
    }

    int nvars() const { return n_; }
    bool is_zero() const { return t_.empty(); }
    const std::map<Key, Rat>& terms() const { return t_; }
    Rat coeff(const Key& k) const {
        auto it = t_.find(k);
        return it == t_.end() ? Rat(0) : it->second;
    }
    void add(const Key& k, const Rat& c) {
        if (c == 0) return;
        Rat& slot = t_[k];
        slot += c;
        if (slot == 0) t_.erase(k);
    }

    friend MLaurent operator+(const MLaurent& a, const MLaurent& b) {
        MLaurent r = a;
        for (auto& [k, v] : b.t_) r.add(k, v);
        return r;
    }
    friend MLaurent operator-(const MLaurent& a, const MLaurent& b) {
        MLaurent r = a;
        for (auto& [k, v] : b.t_) r.add(k, -v);
        return r;
    }
    friend MLaurent operator*(const MLaurent& a, const Rat& s) {
        MLaurent r(a.n_);
        if (s == 0) return r;
        for (auto& [k, v] : a.t_) r.t_[k] = v * s;
        return r;
    }
    friend MLaurent operator*(const MLaurent& a, const MLaurent& b) {
        MLaurent r(a.n_);
        for (auto& [ka, va] : a.t_)
            for (auto& [kb, vb] : b.t_) {
                Key k(ka);
                for (size_t i = 0; i < k.size(); ++i) k[i] += kb[i];
                r.add(k, va * vb);
            }
        return r;
    }
    MLaurent& operator+=(const MLaurent& o) { return *this = *this + o; }

    MLaurent permuted(const std::vector<int>& perm) const {
        MLaurent r(n_);
        for (auto& [k, v] : t_) {
            Key p(n_);
            for (int i = 0; i < n_; ++i) p[perm[i]] = k[i];
            r.add(p, v);
        }
        return r;
    }
    bool symmetric() const;

    // per-variable exponent bounds
    void exponent_range(int var, int& lo, int& hi) const;

    template <typename U>
    U eval(const std::vector<U>& z) const {
        U acc(0);
        for (auto& [k, v] : t_) {
            U term = U(v);
            for (int i = 0; i < n_; ++i) {
                if (k[i] >= 0)
                    for (int e = 0; e < k[i]; ++e) term = term * z[i];
                else
                    for (int e = 0; e < -k[i]; ++e) term = term / z[i];
            }
            acc = acc + term;
        }
        return acc;
    }

private:
    int n_;
    std::map<Key, Rat> t_;
};

struct FreeEnergyTable {
    // (g,n) -> principal specialization F_n^{(g)}(z,...,z), rational part only
    std::map<std::pair<int, int>, RatFunc> entries;
    bool zstar_at_infinity = true;
    Rat zstar;
};

struct KernelData {
    RatFunc p; // p(z) of the F_m recursion
    std::vector<RamificationPoint> ramification;
};

// Exact local topological recursion for the two N=2 involution charts
// (sigma(z) = -z, ramification at z=0, plus z=infinity for the Zhukovsky
// chart). Correlators are Laurent polynomials in z_1..z_n.
class ExactTR {
public:
    explicit ExactTR(const SpectralCurve& curve);

    const SpectralCurve& curve() const { return curve_; }
    // omega_n^{(g)}, requires 2g-2+n > 0
    const MLaurent& omega(int g, int n);

    // principal specialization of the n-fold divisor integral, exact
    RatFunc f_gn(int g, int n);
    FreeEnergyTable table(int g_max, int n_max);

    // dF_m/dz assembled from correlators (m >= 1; m = 1 uses the closed seed)
    RatFunc dFm_dz(int m);
    // F_m closed form via Hermite integration (m >= 2)
    RatFunc Fm(int m);

    RatFunc dF0_dz() const; // y dx/x
    RatFunc dF1_dz() const; // (1/2)(2/(z+z*) - 1/z); z*=inf drops the first term

private:
    MLaurent recurse(int g, int n);

    SpectralCurve curve_;
    bool ram_at_infinity_ = false;
    RatFunc phi_;         // x / (2 (y(z)-y(-z)) x'(z))
    std::map<std::pair<int, int>, MLaurent> cache_;
};

// p(z) = -x / (2 (y(z)-y(-z)) dx/dz) and the ramification list.
KernelData kernel(const SpectralCurve& curve);

// dF_m/dz for m = 0..m_max via the free-energy recursion; m_max >= 2.
std::vector<RatFunc> fm_recursion(const SpectralCurve& curve, int m_max);

std::string correlator_to_json(int g, int n, const MLaurent& w);
std::string free_energy_to_json(int m, const RatFunc& dFm_dz, const Antiderivative& Fm);

} // namespace qgkz
