#pragma once

#include <string>
#include <vector>

#include "pfj/ensemble.hpp"
#include "pfj/quadrature.hpp"

namespace pfj {

// Weight function omega, either tabulated per point or a named family.
struct WeightSpec {
    enum class Family { Explicit, Uniform, Gaussian };
    Family family = Family::Uniform;
    std::vector<double> values;  // Explicit
    double a = -1.0, b = 1.0;    // Uniform support

    double evaluate(double x, int point_index) const;
};

// Space whose weights are omega evaluated at explicitly given points
// (counting reference measure).
PointSpace weighted_space(std::vector<double> points, const WeightSpec& omega);

// Space from a quadrature rule with omega folded into the weights.
// rule: "gauss-legendre" (uniform omega) or "gauss-hermite" (gaussian).
PointSpace discretize(const WeightSpec& omega, const std::string& rule,
                      int nodes);

// Two interleaved copies of a base space (indices 2i and 2i+1 both carry
// base point i and weight mu_i). Interval subsets of a doubled space must
// be copy-consistent: both copies of a base point in or out together.
struct DoubledSpace {
    PointSpace base;
    PointSpace doubled;

    int first_index(int base_index) const { return 2 * base_index; }
    int second_index(int base_index) const { return 2 * base_index + 1; }
    std::vector<int> interval(const std::vector<int>& base_subset) const;
    bool copy_consistent(const std::vector<int>& doubled_subset) const;
};

DoubledSpace make_doubled(const PointSpace& base);

// Product-of-|differences| ensemble: phi_j(x) = x^{j-1}, pairing
// epsilon(x, y) = sgn(y - x) / 2 (sgn(0) = 0).
EnsembleSpec beta1_spec(const PointSpace& space, int n);

// Two-determinant ensemble on a doubled space: the first n basis rows put
// xi_j on the second copy, the last n put psi_j on the first copy, and the
// pairing couples only the two copies of each base point (discrete delta,
// scaled by 1/mu so copy pairs behave as a single base particle).
EnsembleSpec biorthogonal_spec(const Matrix& xi, const Matrix& psi,
                               const DoubledSpace& space, int n);

// Squared-Vandermonde ensemble: biorthogonal with xi = psi = monomials.
EnsembleSpec beta2_spec(const DoubledSpace& space, int n);

// Fourth-power Vandermonde ensemble: doubled space with value/derivative
// monomial pairs, phi_j = x^{j-1} on the first copy and (j-1) x^{j-2} on
// the second.
EnsembleSpec beta4_spec(const DoubledSpace& space, int n);

}  // namespace pfj
