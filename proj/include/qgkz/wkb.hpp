#pragma once

#include "qgkz/curve.hpp"
#include "qgkz/hermite.hpp"
#include "qgkz/toprec.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgkz {

// Differential operator sum_k c_k(x, hbar) theta^k with theta = hbar x d/dx,
// normal-ordered with theta on the right. MPoly2 vars: (x, hbar).
struct ThetaOperator {
    std::vector<MPoly2> c; // index = theta power
    int order() const { return (int)c.size() - 1; }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
};

// prod_i(theta - w_i) - x prod_a(theta - lambda_a + hbar)
ThetaOperator gkz_operator(const CurveModel& model);

// theta -> y, hbar -> 0; result vars (x, y)
MPoly2 semiclassical_limit(const ThetaOperator& op);

// coefficientwise equality up to one overall nonzero rational constant
bool operator_equal(const ThetaOperator& a, const ThetaOperator& b,
                    Rat* factor = nullptr, std::string* mismatch = nullptr);

struct WKBSeries {
    SpectralCurve curve;
    std::vector<RatFunc> y_m;    // m = 0..m_max, y_m = x dS_m/dx as functions of z
    std::vector<RatFunc> dSm_dz; // y_m * x'/x
    std::vector<std::optional<Antiderivative>> S_m; // logs possible for m <= 1
};

// Solve the WKB hierarchy of the operator on the parametrized curve. Requires
// semiclassical_limit(op) proportional to the curve's defining polynomial.
WKBSeries wkb_expand(const ThetaOperator& op, const SpectralCurve& curve, int m_max);

struct CompareReport {
    std::vector<bool> derivative_equal; // index m
    std::vector<bool> normalized;       // m >= 2: S_m -> 0 at the endpoint
    bool all_equal = true;
    std::string detail;
};

// Derivative-level comparison of the WKB hierarchy with dF_m/dz from the
// topological recursion, plus the z -> z* normalization for m >= 2.
CompareReport compare_wavefunctions(const WKBSeries& wkb,
                                    const std::vector<RatFunc>& dFm_dz, int m_max);

// On-shell J-function coefficients as exact rational functions of hbar
// (polynomial variable = hbar): coefficient of x^d for d = 0..d_max.
std::vector<RatFunc> onshell_j_series(const CurveModel& model, int pivot, int d_max);

// Applies op to x^{w_pivot/hbar} sum_d c_d x^d and asserts every coefficient
// vanishes identically in hbar. On failure reports the first bad degree.
bool annihilation_check(const ThetaOperator& op, const CurveModel& model, int pivot,
                        int d_max, int* fail_degree = nullptr);

std::string operator_to_json(const ThetaOperator& op);

} // namespace qgkz
