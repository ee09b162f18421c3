#pragma once

#include <string>
#include <vector>

#include "pfj/point_space.hpp"
#include "pfj/skew.hpp"

namespace pfj {

// A finite point-process ensemble with 2n particles on a discrete space:
// density of a configuration (x_1, ..., x_2n) proportional to
// det(phi_j(x_k)) * pf(epsilon(x_j, x_k)).
struct EnsembleSpec {
    PointSpace space;
    int n = 0;           // half the particle count
    Matrix phi;          // 2n x m, row j = values of the j-th basis function
    SkewMatrix epsilon;  // m x m pairing kernel on the space

    int particle_count() const { return 2 * n; }
    // Throws on structural errors; returns human-readable warnings
    // (rank-deficient basis, more particles than points).
    std::vector<std::string> validate() const;
};

// Normalizing data: the 2n x 2n pair-moment matrix
//   M_jk = sum_{x,y} phi_j(x) epsilon(x,y) phi_k(y) lambda(x) lambda(y),
// its inverse transpose, and the partition value Z = (2n)! pf(M).
struct MomentSet {
    SkewMatrix m;
    Matrix m_inv_t;
    Complex z;
};

MomentSet moment_matrix(const EnsembleSpec& spec);

// 2n x 2n matrix with column k = basis values at config[k].
Matrix basis_at(const EnsembleSpec& spec, const std::vector<int>& config);

// Pairing values restricted to the configuration's points.
SkewMatrix epsilon_at(const EnsembleSpec& spec, const std::vector<int>& config);

// det(basis_at) * pf(epsilon_at) / Z for an ordered configuration of
// 2n point indices (repeats allowed; they give zero).
Complex density_value(const EnsembleSpec& spec, const MomentSet& mom,
                      const std::vector<int>& config);
double density(const EnsembleSpec& spec, const MomentSet& mom,
               const std::vector<int>& config);

}  // namespace pfj
