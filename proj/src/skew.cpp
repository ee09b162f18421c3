#include "pfj/skew.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

namespace pfj {

SkewMatrix::SkewMatrix(Matrix a, double tol) {
    if (a.rows() != a.cols()) {
        throw NotSkewError("skew matrix must be square, got " +
                           std::to_string(a.rows()) + "x" +
                           std::to_string(a.cols()));
    }
    const double defect = (a + a.transpose()).cwiseAbs().maxCoeff();
    if (!(defect <= tol)) {
        throw NotSkewError("antisymmetry defect " + std::to_string(defect) +
                           " exceeds tolerance");
    }
    a_ = 0.5 * (a - a.transpose().eval());
    a_.diagonal().setZero();
}

SkewMatrix SkewMatrix::zero(int dim) {
    SkewMatrix s;
    s.a_ = Matrix::Zero(dim, dim);
    return s;
}

double assembled_skew_tolerance(const Matrix& a) {
    const double mag = a.size() > 0 ? a.cwiseAbs().maxCoeff() : 0.0;
    return kSkewTolerance * std::max(1.0, mag);
}

Complex pfaffian(const SkewMatrix& skew) {
    const int dim = skew.dim();
    if (dim % 2 != 0) {
        throw OddDimensionError("pfaffian needs even dimension, got " +
                                std::to_string(dim));
    }
    if (dim == 0) return Complex(1.0, 0.0);

    // Skew-symmetric elimination with partial pivoting: bring the matrix to
    // tridiagonal form two rows/columns at a time. Each congruence step
    // leaves the Pfaffian invariant except for a sign per row/column swap;
    // the Pfaffian of the tridiagonal form is the product of the
    // superdiagonal pair entries.
    Matrix a = skew.mat();
    Complex result(1.0, 0.0);
    for (int k = 0; k + 1 < dim; k += 2) {
        int pivot_row = k + 1;
        double pivot_mag = std::abs(a(k + 1, k));
        for (int i = k + 2; i < dim; ++i) {
            const double mag = std::abs(a(i, k));
            if (mag > pivot_mag) {
                pivot_mag = mag;
                pivot_row = i;
            }
        }
        if (pivot_mag == 0.0) return Complex(0.0, 0.0);
        if (pivot_row != k + 1) {
            a.row(k + 1).swap(a.row(pivot_row));
            a.col(k + 1).swap(a.col(pivot_row));
            result = -result;
        }
        const Complex pivot = a(k + 1, k);
        result *= a(k, k + 1);
        if (k + 2 >= dim) break;
        // Congruence zeroing row/column k beyond the pair entry: with
        // tau_i = a(i,k)/a(k+1,k), update the trailing block by the rank-2
        // correction tau_i a(j,k+1) - tau_j a(i,k+1). Column k+1 is outside
        // the written range, so the update order is immaterial.
        Eigen::VectorXcd tau(dim - k - 2);
        for (int i = k + 2; i < dim; ++i) tau(i - k - 2) = a(i, k) / pivot;
        for (int i = k + 2; i < dim; ++i) {
            for (int j = k + 2; j < dim; ++j) {
                a(i, j) += tau(i - k - 2) * a(j, k + 1) -
                           tau(j - k - 2) * a(i, k + 1);
            }
        }
    }
    return result;
}

namespace {

Complex pairing_sum(const Matrix& a, std::vector<int>& idx) {
    const std::size_t r = idx.size();
    if (r == 0) return Complex(1.0, 0.0);
    const int first = idx[0];
    Complex total(0.0, 0.0);
    double sign = 1.0;
    for (std::size_t pos = 1; pos < r; ++pos) {
        const int partner = idx[pos];
        std::vector<int> rest;
        rest.reserve(r - 2);
        for (std::size_t q = 1; q < r; ++q) {
            if (q != pos) rest.push_back(idx[q]);
        }
        total += sign * a(first, partner) * pairing_sum(a, rest);
        sign = -sign;
    }
    return total;
}

}  // namespace

Complex pfaffian_oracle(const SkewMatrix& skew) {
    const int dim = skew.dim();
    if (dim % 2 != 0) {
        throw OddDimensionError("pfaffian needs even dimension, got " +
                                std::to_string(dim));
    }
    if (dim > kPairingSumMaxDim) {
        throw TooLargeError("pairing sum limited to dimension " +
                            std::to_string(kPairingSumMaxDim) + ", got " +
                            std::to_string(dim));
    }
    std::vector<int> idx(dim);
    for (int i = 0; i < dim; ++i) idx[i] = i;
    return pairing_sum(skew.mat(), idx);
}

namespace {

double l1_norm(const Matrix& a) {
    return a.cwiseAbs().colwise().sum().maxCoeff();
}

// Reciprocal 1-norm condition number computed from an explicit inverse.
// The LU-based estimator is unreliable for exactly singular input (the
// triangular solve overflows before the estimate sees it), so for the
// small matrices handled here the exact product norm is both safer and
// cheap. A non-finite inverse maps to zero.
double rcond_from_inverse(const Matrix& a, const Matrix& inv) {
    const double na = l1_norm(a);
    if (!(na > 0.0) || !std::isfinite(na)) return 0.0;
    if (!inv.allFinite()) return 0.0;
    const double ni = l1_norm(inv);
    if (!(ni > 0.0) || !std::isfinite(ni)) return 0.0;
    return 1.0 / (na * ni);
}

}  // namespace

double rcond_estimate(const Matrix& a) {
    if (a.size() == 0 || a.rows() != a.cols() || a.norm() == 0.0) return 0.0;
    Eigen::PartialPivLU<Matrix> lu(a);
    return rcond_from_inverse(a, lu.inverse());
}

Matrix invert(const Matrix& a) {
    if (a.rows() != a.cols()) {
        throw SingularError("invert needs a square matrix", 0.0);
    }
    if (a.size() == 0) return a;
    if (a.norm() == 0.0) {
        throw SingularError("matrix is zero", 0.0);
    }
    Eigen::PartialPivLU<Matrix> lu(a);
    const Matrix inv = lu.inverse();
    const double rc = rcond_from_inverse(a, inv);
    if (rc < kRcondThreshold) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", rc);
        throw SingularError(
            "reciprocal condition " + std::string(buf) + " below threshold",
            rc);
    }
    return inv;
}

}  // namespace pfj
