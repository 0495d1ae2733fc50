#pragma once

#include "qgkz/bigfloat.hpp"
#include "qgkz/mpoly2.hpp"
#include "qgkz/series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qgkz {

enum class Family { projective_space, complete_intersection_degree_one };
enum class CoordKind { standard, cp1_sqrt, cp1_zhukovsky };

struct CurveModel {
    Family family = Family::projective_space;
    int N = 2;
    int n = 0;
    std::vector<Rat> w;      // size N
    std::vector<Rat> lambda; // size n
};

struct RamificationPoint {
    bool at_infinity = false;
    bool exact = false;
    Rat z_exact;                        // valid when exact
    BigComplex z_value;                 // always filled for finite points
    bool simple = true;
    bool global_involution = false;     // sigma(z) = -z
    TSeries<BigComplex> sigma;          // local series when not global
};

struct SpectralCurve {
    CurveModel model;
    CoordKind coord = CoordKind::standard;
    RatFunc x, y;    // parametrization in z
    MPoly2 A;        // defining polynomial, first var = x, second var = y
    Rat sqrt_disc;   // s = sqrt((lambda1-w0)(lambda1-w1)) for cp1_zhukovsky
    bool zstar_at_infinity = true; // divisor endpoint
    Rat zstar;                     // used when not at infinity (-1 for zhukovsky)

    Rat Lambda() const { // (w0-w1)^2/4, meaningful for cp1_sqrt
        Rat d = model.w.at(0) - model.w.at(1);
        return d * d / Rat(4);
    }
};

// Closed-form GKZ curve polynomial prod_i(y-w_i) - x*prod_a(y-lambda_a).
MPoly2 gkz_curve_poly(const CurveModel& model);

// Construct the parametrized curve; throws std::invalid_argument on
// degenerate parameters (shared dx/dy zeros, non-simple ramification,
// non-square discriminant for the exact Zhukovsky chart).
SpectralCurve build_curve(const CurveModel& model, CoordKind coord);

// All zeros of dx/dz in the chart (plus z=infinity for the Zhukovsky chart);
// exact involution z -> -z for the two N=2 charts, Newton-solved series else.
std::vector<RamificationPoint> ramification_points(const SpectralCurve& curve,
                                                   int series_order = 16);

// Solves the critical-point system at x = x_sample and confirms each
// critical point lands on A(x,y) = 0 (exact for rational roots, numeric
// within 10^-(digits-10) otherwise).
bool critical_set_check(const CurveModel& model, const Rat& x_sample, int digits,
                        std::string* detail = nullptr);

// The z-solutions of x(z) = X for large X split into N-n growing branches
// and n branches near the lambda_a; verified numerically.
bool branch_labeling_check(const SpectralCurve& curve, const Rat& x_large);

std::string curve_to_json(const SpectralCurve& curve);

} // namespace qgkz
