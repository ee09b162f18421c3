#include "pfj/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

namespace pfj {

Eigen::Matrix2cd MatrixKernel::block(int x, int y) const {
    Eigen::Matrix2cd b;
    b << k11(x, y), k12(x, y), k21(x, y), k22(x, y);
    return b;
}

Matrix MatrixKernel::values_matrix() const {
    const int m = space.size();
    Matrix v(2 * m, 2 * m);
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            v(2 * x, 2 * y) = k11(x, y);
            v(2 * x, 2 * y + 1) = k12(x, y);
            v(2 * x + 1, 2 * y) = k21(x, y);
            v(2 * x + 1, 2 * y + 1) = k22(x, y);
        }
    }
    return v;
}

MatrixKernel MatrixKernel::from_values_matrix(PointSpace space,
                                              const Matrix& v) {
    const int m = space.size();
    MatrixKernel k{std::move(space), Matrix(m, m), Matrix(m, m), Matrix(m, m),
                   Matrix(m, m)};
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            k.k11(x, y) = v(2 * x, 2 * y);
            k.k12(x, y) = v(2 * x, 2 * y + 1);
            k.k21(x, y) = v(2 * x + 1, 2 * y);
            k.k22(x, y) = v(2 * x + 1, 2 * y + 1);
        }
    }
    return k;
}

double MatrixKernel::antisymmetry_defect() const {
    const Matrix v = values_matrix();
    return (v + v.transpose()).cwiseAbs().maxCoeff();
}

namespace {

std::string fmt_rcond(double rc) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", rc);
    return buf;
}

// Shared assembly core. With p1 = C phi and p2 = C epsphi^T (C the relevant
// inverse-transpose moment matrix), every entry is a pair of short dot
// products:
//   k11(x,y) = phi(:,x) . p1(:,y)        k12(x,y) = phi(:,x) . p2(:,y)
//   k21(x,y) = epsphi(x,:) . p1(:,y)     k22(x,y) = -eps(x,y) + epsphi(x,:) . p2(:,y)
// Entries are independent, so the parallel and serial paths run the same
// per-entry arithmetic and agree bitwise.
struct AssemblyInputs {
    const Matrix& phi;     // 2n x m
    const Matrix& epsphi;  // m x 2n
    const Matrix& p1;      // 2n x m
    const Matrix& p2;      // 2n x m
    const Matrix& eps;     // m x m
};

inline void assemble_row(const AssemblyInputs& in, MatrixKernel& out, int x) {
    const int m = static_cast<int>(in.phi.cols());
    const int r = static_cast<int>(in.phi.rows());
    for (int y = 0; y < m; ++y) {
        Complex s11(0, 0), s12(0, 0), s21(0, 0), s22(0, 0);
        for (int j = 0; j < r; ++j) {
            const Complex pj = in.phi(j, x);
            const Complex ej = in.epsphi(x, j);
            s11 += pj * in.p1(j, y);
            s12 += pj * in.p2(j, y);
            s21 += ej * in.p1(j, y);
            s22 += ej * in.p2(j, y);
        }
        out.k11(x, y) = s11;
        out.k12(x, y) = s12;
        out.k21(x, y) = s21;
        out.k22(x, y) = s22 - in.eps(x, y);
    }
}

MatrixKernel assemble(const PointSpace& space, const AssemblyInputs& in,
                      bool parallel) {
    const int m = space.size();
    MatrixKernel out{space, Matrix(m, m), Matrix(m, m), Matrix(m, m),
                     Matrix(m, m)};
    if (parallel) {
#pragma omp parallel for schedule(static)
        for (int x = 0; x < m; ++x) assemble_row(in, out, x);
    } else {
        for (int x = 0; x < m; ++x) assemble_row(in, out, x);
    }
    return out;
}

Eigen::VectorXcd weight_vector(const PointSpace& space) {
    return Eigen::Map<const Eigen::VectorXd>(space.weights.data(),
                                             space.size())
        .cast<Complex>();
}

Eigen::VectorXcd indicator(const std::vector<int>& interval, int m) {
    Eigen::VectorXcd ind = Eigen::VectorXcd::Zero(m);
    for (int i : interval) ind(i) = Complex(1.0, 0.0);
    return ind;
}

MatrixKernel build_correlation(const EnsembleSpec& spec, const MomentSet& mom,
                               bool parallel) {
    const Eigen::VectorXcd lam = weight_vector(spec.space);
    const Matrix epsphi =
        spec.epsilon.mat() * lam.asDiagonal() * spec.phi.transpose();
    const Matrix p1 = mom.m_inv_t * spec.phi;
    const Matrix p2 = mom.m_inv_t * epsphi.transpose();
    return assemble(spec.space,
                    {spec.phi, epsphi, p1, p2, spec.epsilon.mat()}, parallel);
}

MatrixKernel build_janossy_direct(const EnsembleSpec& spec,
                                  const IntervalMatrices& im, bool parallel) {
    Matrix comp_inv_t;
    try {
        comp_inv_t = invert(im.m_comp.mat().transpose());
    } catch (const SingularError& e) {
        throw SingularComplementMomentError(
            "complement moment matrix fails the condition check (rcond " +
                fmt_rcond(e.rcond()) + ")",
            e.rcond());
    }
    const Matrix p1 = comp_inv_t * spec.phi;
    const Matrix p2 = comp_inv_t * im.eps_comp_phi.transpose();
    return assemble(spec.space,
                    {spec.phi, im.eps_comp_phi, p1, p2, spec.epsilon.mat()},
                    parallel);
}

}  // namespace

MatrixKernel correlation_kernel(const EnsembleSpec& spec,
                                const MomentSet& mom) {
    return build_correlation(spec, mom, true);
}

MatrixKernel correlation_kernel_serial(const EnsembleSpec& spec,
                                       const MomentSet& mom) {
    return build_correlation(spec, mom, false);
}

Complex correlation_function(const MatrixKernel& k,
                             const std::vector<int>& pts) {
    const int c = static_cast<int>(pts.size());
    if (c == 0) return Complex(1.0, 0.0);
    Matrix a(2 * c, 2 * c);
    for (int i = 0; i < c; ++i) {
        for (int j = 0; j < c; ++j) {
            a(2 * i, 2 * j) = k.k11(pts[i], pts[j]);
            a(2 * i, 2 * j + 1) = k.k12(pts[i], pts[j]);
            a(2 * i + 1, 2 * j) = k.k21(pts[i], pts[j]);
            a(2 * i + 1, 2 * j + 1) = k.k22(pts[i], pts[j]);
        }
    }
    const double tol = assembled_skew_tolerance(a);
    return pfaffian(SkewMatrix(std::move(a), tol));
}

IntervalMatrices interval_matrices(const EnsembleSpec& spec,
                                   const std::vector<int>& interval) {
    const int m = spec.space.size();
    const std::vector<int> ival = normalize_interval(interval, m);
    const Eigen::VectorXcd lam = weight_vector(spec.space);
    const Eigen::VectorXcd ind = indicator(ival, m);
    const Eigen::VectorXcd lam_in = lam.cwiseProduct(ind);
    const Eigen::VectorXcd lam_out = lam - lam_in;
    const Matrix& eps = spec.epsilon.mat();
    const Matrix phi_t = spec.phi.transpose();

    IntervalMatrices im;
    im.interval = ival;
    im.g = spec.phi * lam_in.asDiagonal() * eps * lam.asDiagonal() * phi_t;
    const Matrix m_int =
        spec.phi * lam_in.asDiagonal() * eps * lam_in.asDiagonal() * phi_t;
    im.m_int = SkewMatrix(m_int, assembled_skew_tolerance(m_int));
    const Matrix m_comp =
        spec.phi * lam_out.asDiagonal() * eps * lam_out.asDiagonal() * phi_t;
    im.m_comp = SkewMatrix(m_comp, assembled_skew_tolerance(m_comp));
    im.t = spec.phi * lam_in.asDiagonal() * eps * lam_out.asDiagonal() * phi_t;
    im.eps_phi = eps * lam.asDiagonal() * phi_t;
    im.eps_comp_phi = eps * lam_out.asDiagonal() * phi_t;
    return im;
}

MatrixKernel janossy_kernel_direct(const EnsembleSpec& spec,
                                   const IntervalMatrices& im) {
    return build_janossy_direct(spec, im, true);
}

MatrixKernel janossy_kernel_direct_serial(const EnsembleSpec& spec,
                                          const IntervalMatrices& im) {
    return build_janossy_direct(spec, im, false);
}

MatrixKernel restrict_kernel(const MatrixKernel& k,
                             const std::vector<int>& interval) {
    const int m = k.space.size();
    const std::vector<int> ival = normalize_interval(interval, m);
    const Eigen::VectorXcd ind = indicator(ival, m);
    MatrixKernel out = k;
    for (Matrix* blockp : {&out.k11, &out.k12, &out.k21, &out.k22}) {
        *blockp = ind.asDiagonal() * (*blockp) * ind.asDiagonal();
    }
    return out;
}

static Matrix doubled_weight(const PointSpace& space) {
    const int m = space.size();
    Matrix w = Matrix::Zero(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        w(2 * i, 2 * i) = space.weights[i];
        w(2 * i + 1, 2 * i + 1) = space.weights[i];
    }
    return w;
}

static Matrix symplectic_unit_blocks(int m) {
    Matrix j = Matrix::Zero(2 * m, 2 * m);
    for (int i = 0; i < m; ++i) {
        j(2 * i, 2 * i + 1) = Complex(1.0, 0.0);
        j(2 * i + 1, 2 * i) = Complex(-1.0, 0.0);
    }
    return j;
}

OperatorMatrix operator_matrix(const MatrixKernel& k,
                               const std::vector<int>& interval) {
    const MatrixKernel restricted = restrict_kernel(k, interval);
    return OperatorMatrix{k.space,
                          restricted.values_matrix() * doubled_weight(k.space)};
}

MatrixKernel janossy_kernel_resolvent(const MatrixKernel& k,
                                      const std::vector<int>& interval) {
    const int m = k.space.size();
    const Matrix opk = operator_matrix(k, interval).op;
    const Matrix s = Matrix::Identity(2 * m, 2 * m) +
                     symplectic_unit_blocks(m) * opk;
    const double rc = rcond_estimate(s);
    if (!(rc >= kRcondThreshold)) {
        throw ResolventSingularError(
            "Id + J K_I fails the condition check (rcond " + fmt_rcond(rc) +
                "); the interval's gap probability vanishes and no "
                "resolvent kernel exists",
            rc);
    }
    const Matrix opl = opk * invert(s);
    Matrix w2inv = doubled_weight(k.space);
    for (int i = 0; i < 2 * m; ++i) w2inv(i, i) = 1.0 / w2inv(i, i).real();
    // The recovered kernel is antisymmetric in exact arithmetic, but the
    // resolvent solve amplifies rounding by the condition of Id + J K_I.
    // Projecting onto the antisymmetric part never increases the distance
    // to the true kernel and keeps downstream Pfaffian assembly clean.
    const Matrix values = opl * w2inv;
    return MatrixKernel::from_values_matrix(
        k.space, 0.5 * (values - values.transpose()));
}

MatrixKernel apply_minus_j(const MatrixKernel& k) {
    // -J [[a,b],[c,d]] = [[-c,-d],[a,b]] blockwise.
    return MatrixKernel{k.space, -k.k21, -k.k22, k.k11, k.k12};
}

OperatorMatrix transform_cal(const MatrixKernel& k,
                             const std::vector<int>& interval) {
    return operator_matrix(apply_minus_j(k), interval);
}

double gap_probability(const MatrixKernel& k,
                       const std::vector<int>& interval) {
    const int m = k.space.size();
    const Matrix opk = operator_matrix(k, interval).op;
    const Matrix s = Matrix::Identity(2 * m, 2 * m) +
                     symplectic_unit_blocks(m) * opk;
    const Complex det = Eigen::PartialPivLU<Matrix>(s).determinant();
    if (det.real() < -1e-10) {
        throw NegativeDeterminantError(
            "det(Id + J K_I) = " + std::to_string(det.real()) +
            " is negative; kernel is not a valid correlation kernel");
    }
    return std::sqrt(std::max(det.real(), 0.0));
}

double gap_expansion(const MatrixKernel& k,
                     const std::vector<int>& interval) {
    const std::vector<int> ival = normalize_interval(interval, k.space.size());
    const int isz = static_cast<int>(ival.size());
    double total = 1.0;  // k = 0 term
    double factorial = 1.0;
    std::vector<int> tuple;
    for (int c = 1; c <= isz; ++c) {
        factorial *= c;
        double level = 0.0;
        tuple.assign(c, 0);
        // Odometer over I^c; tuples with repeats contribute zero Pfaffians.
        while (true) {
            std::vector<int> pts(c);
            double w = 1.0;
            for (int q = 0; q < c; ++q) {
                pts[q] = ival[tuple[q]];
                w *= k.space.weights[pts[q]];
            }
            level += correlation_function(k, pts).real() * w;
            int pos = c - 1;
            while (pos >= 0 && tuple[pos] == isz - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }
        total += ((c % 2 == 0) ? 1.0 : -1.0) * level / factorial;
    }
    return total;
}

double janossy_density(const MatrixKernel& l, double gap_const,
                       const std::vector<int>& pts,
                       const std::vector<int>& interval) {
    const std::vector<int> ival =
        normalize_interval(interval, l.space.size());
    for (int p : pts) {
        if (!std::binary_search(ival.begin(), ival.end(), p)) {
            throw PointOutsideIntervalError(
                "point " + std::to_string(p) + " lies outside the interval");
        }
    }
    if (pts.empty()) return gap_const;
    return gap_const * correlation_function(l, pts).real();
}

}  // namespace pfj
