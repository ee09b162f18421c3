#pragma once

#include <vector>

#include "pfj/ensemble.hpp"

namespace pfj {

// 2x2 matrix-valued kernel A(x, y) on the space, stored as four m x m
// value tables. Antisymmetric in the kernel sense: A(y, x)^T = -A(x, y),
// equivalently the interleaved 2m x 2m value matrix is antisymmetric.
struct MatrixKernel {
    PointSpace space;
    Matrix k11, k12, k21, k22;

    Eigen::Matrix2cd block(int x, int y) const;
    // Interleaved 2m x 2m table: rows/cols (2i, 2i+1) belong to point i.
    Matrix values_matrix() const;
    static MatrixKernel from_values_matrix(PointSpace space, const Matrix& v);
    double antisymmetry_defect() const;
};

// Operator realization of a matrix kernel on the doubled space: a kernel A
// acts on C^2-valued functions by (Af)(x) = sum_y A(x,y) f(y) lambda(y),
// so the operator matrix carries the weight on its column index.
struct OperatorMatrix {
    PointSpace space;
    Matrix op;  // 2m x 2m
};

// Moment matrices of an index subset I and its complement:
//   g:      G_jk = sum_{x in I} phi_j(x) (eps phi_k)(x) lambda(x)
//   m_int:  pair moments with both integrals over I
//   m_comp: pair moments with both integrals over the complement
//   t:      mixed moments, first index over I, second over the complement
// plus the weighted pairing transforms (eps phi_k)(x) over the whole space
// and over the complement only. Satisfies g - t = m_int exactly.
struct IntervalMatrices {
    std::vector<int> interval;
    Matrix g;
    SkewMatrix m_int;
    SkewMatrix m_comp;
    Matrix t;
    Matrix eps_phi;       // m x 2n
    Matrix eps_comp_phi;  // m x 2n
};

// Correlation kernel K of the ensemble:
//   K11(x,y) = sum_jk phi_j(x) Minvt_jk phi_k(y)
//   K12(x,y) = sum_jk phi_j(x) Minvt_jk (eps phi_k)(y)
//   K21(x,y) = sum_jk (eps phi_j)(x) Minvt_jk phi_k(y)
//   K22(x,y) = -eps(x,y) + sum_jk (eps phi_j)(x) Minvt_jk (eps phi_k)(y)
// Entry computation is embarrassingly parallel; the default entry point
// uses OpenMP when available, the _serial twin is the reference kept for
// tests and benchmarks (bit-identical results by construction).
MatrixKernel correlation_kernel(const EnsembleSpec& spec, const MomentSet& mom);
MatrixKernel correlation_kernel_serial(const EnsembleSpec& spec,
                                       const MomentSet& mom);

// k-point correlation: Pfaffian of the 2k x 2k block matrix K(x_a, x_b).
Complex correlation_function(const MatrixKernel& k,
                             const std::vector<int>& pts);

IntervalMatrices interval_matrices(const EnsembleSpec& spec,
                                   const std::vector<int>& interval);

// Closed-form Janossy kernel of the interval: same shape as the
// correlation kernel, with the complement moment matrix replacing M and
// complement-restricted pairing transforms replacing (eps phi); the
// additive -eps(x, y) term keeps the full pairing kernel.
MatrixKernel janossy_kernel_direct(const EnsembleSpec& spec,
                                   const IntervalMatrices& im);
MatrixKernel janossy_kernel_direct_serial(const EnsembleSpec& spec,
                                          const IntervalMatrices& im);

// Defining route: L_I = K_I (Id + J K_I)^{-1} on the doubled space, where
// K_I zeroes all rows/columns outside I and J is the block-diagonal
// symplectic unit. Throws ResolventSingular when Id + J K_I fails the
// condition check (which happens exactly when the gap probability of I
// vanishes, e.g. I = X).
MatrixKernel janossy_kernel_resolvent(const MatrixKernel& k,
                                      const std::vector<int>& interval);

// Kernel restricted to I x I (rows/columns outside I zeroed).
MatrixKernel restrict_kernel(const MatrixKernel& k,
                             const std::vector<int>& interval);

// lambda-weighted operator matrix of the kernel restricted to I.
OperatorMatrix operator_matrix(const MatrixKernel& k,
                               const std::vector<int>& interval);

// Left-multiplies every 2x2 block by -J (J = [[0,1],[-1,0]]); applying it
// twice negates the kernel.
MatrixKernel apply_minus_j(const MatrixKernel& k);

// Operator forms calK = -J K_I and calL = -J L_I; they satisfy
// calL = calK (Id - calK)^{-1} whenever the resolvent exists.
OperatorMatrix transform_cal(const MatrixKernel& k,
                             const std::vector<int>& interval);

// Probability that the interval holds no particles:
// det(Id + J K_I)^{1/2} with the nonnegative root.
double gap_probability(const MatrixKernel& k, const std::vector<int>& interval);

// Same quantity through the alternating correlation expansion
// sum_k (-1)^k / k! sum_{I^k} rho_k prod lambda; agrees with
// gap_probability and with exhaustive enumeration on small spaces.
double gap_expansion(const MatrixKernel& k, const std::vector<int>& interval);

// Janossy density: gap_const * pf of the 2k x 2k block matrix of the
// Janossy kernel at pts (all of which must lie in the interval).
// k = 0 returns gap_const itself.
double janossy_density(const MatrixKernel& l, double gap_const,
                       const std::vector<int>& pts,
                       const std::vector<int>& interval);

}  // namespace pfj
