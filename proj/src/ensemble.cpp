#include "pfj/ensemble.hpp"

#include <algorithm>
#include <cmath>

namespace pfj {

void PointSpace::validate() const {
    if (points.size() != weights.size()) {
        throw ConfigError("point/weight count mismatch: " +
                          std::to_string(points.size()) + " vs " +
                          std::to_string(weights.size()));
    }
    if (points.empty()) throw ConfigError("space has no points");
    for (double w : weights) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            throw ConfigError("weights must be finite and positive");
        }
    }
}

std::vector<int> normalize_interval(const std::vector<int>& interval, int m) {
    std::vector<int> out = interval;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (int i : out) {
        if (i < 0 || i >= m) {
            throw ConfigError("interval index " + std::to_string(i) +
                              " outside space of size " + std::to_string(m));
        }
    }
    return out;
}

std::vector<int> complement_of(const std::vector<int>& interval, int m) {
    std::vector<bool> in(m, false);
    for (int i : interval) in[i] = true;
    std::vector<int> out;
    out.reserve(m - interval.size());
    for (int i = 0; i < m; ++i) {
        if (!in[i]) out.push_back(i);
    }
    return out;
}

std::vector<std::string> EnsembleSpec::validate() const {
    space.validate();
    const int m = space.size();
    if (n < 1) throw ConfigError("particle-pair count n must be >= 1");
    if (phi.rows() != 2 * n || phi.cols() != m) {
        throw ConfigError("basis table must be 2n x m");
    }
    if (epsilon.dim() != m) {
        throw ConfigError("pairing kernel must be m x m");
    }
    std::vector<std::string> warnings;
    if (2 * n > m) {
        warnings.push_back("more particles than points; densities vanish");
    }
    Eigen::ColPivHouseholderQR<Matrix> qr(phi.transpose());
    if (qr.rank() < 2 * n) {
        warnings.push_back("basis rows are numerically rank deficient");
    }
    return warnings;
}

static double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

MomentSet moment_matrix(const EnsembleSpec& spec) {
    const Eigen::VectorXcd lam =
        Eigen::Map<const Eigen::VectorXd>(spec.space.weights.data(),
                                          spec.space.size())
            .cast<Complex>();
    const Matrix weighted =
        lam.asDiagonal() * spec.epsilon.mat() * lam.asDiagonal();
    const Matrix m = spec.phi * weighted * spec.phi.transpose();
    MomentSet mom{SkewMatrix(m, assembled_skew_tolerance(m)), Matrix(),
                  Complex()};
    mom.z = factorial(2 * spec.n) * pfaffian(mom.m);
    mom.m_inv_t = invert(mom.m.mat().transpose());
    return mom;
}

Matrix basis_at(const EnsembleSpec& spec, const std::vector<int>& config) {
    Matrix b(2 * spec.n, config.size());
    for (std::size_t c = 0; c < config.size(); ++c) {
        b.col(c) = spec.phi.col(config[c]);
    }
    return b;
}

SkewMatrix epsilon_at(const EnsembleSpec& spec,
                      const std::vector<int>& config) {
    const std::size_t k = config.size();
    Matrix e(k, k);
    for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) {
            e(a, b) = spec.epsilon.mat()(config[a], config[b]);
        }
    }
    return SkewMatrix(std::move(e));
}

Complex density_value(const EnsembleSpec& spec, const MomentSet& mom,
                      const std::vector<int>& config) {
    if (static_cast<int>(config.size()) != 2 * spec.n) {
        throw ConfigError("configuration must list exactly 2n points");
    }
    const Complex det = basis_at(spec, config).determinant();
    const Complex pf = pfaffian(epsilon_at(spec, config));
    return det * pf / mom.z;
}

double density(const EnsembleSpec& spec, const MomentSet& mom,
               const std::vector<int>& config) {
    return density_value(spec, mom, config).real();
}

}  // namespace pfj
