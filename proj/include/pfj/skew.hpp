#pragma once

#include <complex>

#include <Eigen/Dense>

#include "pfj/errors.hpp"

namespace pfj {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// Absolute tolerance for antisymmetry at construction.
inline constexpr double kSkewTolerance = 1e-12;
// Reciprocal condition estimates below this count as singular.
inline constexpr double kRcondThreshold = 1e-12;
// Largest dimension the pairing-sum Pfaffian accepts ((dim-1)!! terms).
inline constexpr int kPairingSumMaxDim = 12;

// Validated antisymmetric matrix. Construction checks A = -A^T entrywise
// within an absolute tolerance, then stores the canonical form (A - A^T)/2
// with an exactly zero diagonal, so downstream algebra never sees the
// rounding-level asymmetry of assembled inputs.
class SkewMatrix {
public:
    SkewMatrix() = default;  // 0 x 0
    explicit SkewMatrix(Matrix a, double tol = kSkewTolerance);
    static SkewMatrix zero(int dim);

    int dim() const { return static_cast<int>(a_.rows()); }
    const Matrix& mat() const { return a_; }

private:
    Matrix a_;
};

// Antisymmetry tolerance for matrices assembled from internal arithmetic
// (moment matrices, kernel blocks, resolvent products). Their defect is
// rounding noise that grows with the entry magnitudes, so the acceptable
// defect scales with the largest entry instead of staying absolute as it
// does for user-supplied pairings.
double assembled_skew_tolerance(const Matrix& a);

// Pfaffian by skew-symmetric elimination with partial pivoting, O(dim^3).
// Even-dimensional input required; pf of the empty matrix is 1.
Complex pfaffian(const SkewMatrix& a);

// Definitional Pfaffian: signed sum over all perfect matchings, used as the
// reference the fast path is tested against. Rejects dim > 12.
Complex pfaffian_oracle(const SkewMatrix& a);

// Reciprocal condition estimate (L1-norm based) of a general square matrix.
double rcond_estimate(const Matrix& a);

// Inverse of a general square complex matrix; refuses inputs whose
// reciprocal condition estimate falls below kRcondThreshold.
Matrix invert(const Matrix& a);

}  // namespace pfj
