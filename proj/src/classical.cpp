#include "pfj/classical.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "pfj/errors.hpp"

namespace pfj {

double WeightSpec::evaluate(double x, int point_index) const {
    switch (family) {
        case Family::Explicit:
            if (point_index < 0 ||
                point_index >= static_cast<int>(values.size())) {
                throw ConfigError("weight table does not cover point index " +
                                  std::to_string(point_index));
            }
            return values[point_index];
        case Family::Uniform:
            return (x >= a && x <= b) ? 1.0 : 0.0;
        case Family::Gaussian:
            return std::exp(-x * x);
    }
    throw ConfigError("unknown weight family");
}

PointSpace weighted_space(std::vector<double> points, const WeightSpec& omega) {
    PointSpace space;
    space.points = std::move(points);
    space.weights.resize(space.points.size());
    for (int i = 0; i < space.size(); ++i) {
        space.weights[i] = omega.evaluate(space.points[i], i);
    }
    space.validate();
    return space;
}

PointSpace discretize(const WeightSpec& omega, const std::string& rule,
                      int nodes) {
    QuadratureRule q;
    if (rule == "gauss-legendre") {
        if (omega.family != WeightSpec::Family::Uniform) {
            throw UnknownRuleError(
                "gauss-legendre discretization expects the uniform weight");
        }
        q = gauss_legendre(nodes, omega.a, omega.b);
    } else if (rule == "gauss-hermite") {
        if (omega.family != WeightSpec::Family::Gaussian) {
            throw UnknownRuleError(
                "gauss-hermite discretization expects the gaussian weight");
        }
        q = gauss_hermite(nodes);
    } else {
        throw UnknownRuleError("unknown quadrature rule '" + rule + "'");
    }
    PointSpace space{std::move(q.nodes), std::move(q.weights)};
    space.validate();
    return space;
}

std::vector<int> DoubledSpace::interval(
    const std::vector<int>& base_subset) const {
    const std::vector<int> norm = normalize_interval(base_subset, base.size());
    std::vector<int> out;
    out.reserve(2 * norm.size());
    for (int i : norm) {
        out.push_back(first_index(i));
        out.push_back(second_index(i));
    }
    return out;
}

bool DoubledSpace::copy_consistent(
    const std::vector<int>& doubled_subset) const {
    std::vector<bool> in(doubled.size(), false);
    for (int i : doubled_subset) {
        if (i < 0 || i >= doubled.size()) return false;
        in[i] = true;
    }
    for (int b = 0; b < base.size(); ++b) {
        if (in[first_index(b)] != in[second_index(b)]) return false;
    }
    return true;
}

DoubledSpace make_doubled(const PointSpace& base) {
    DoubledSpace d;
    d.base = base;
    d.doubled.points.reserve(2 * base.size());
    d.doubled.weights.reserve(2 * base.size());
    for (int i = 0; i < base.size(); ++i) {
        d.doubled.points.push_back(base.points[i]);
        d.doubled.points.push_back(base.points[i]);
        d.doubled.weights.push_back(base.weights[i]);
        d.doubled.weights.push_back(base.weights[i]);
    }
    return d;
}

EnsembleSpec beta1_spec(const PointSpace& space, int n) {
    space.validate();
    const int m = space.size();
    EnsembleSpec spec;
    spec.space = space;
    spec.n = n;
    spec.phi.resize(2 * n, m);
    for (int j = 0; j < 2 * n; ++j) {
        for (int x = 0; x < m; ++x) {
            spec.phi(j, x) = std::pow(space.points[x], j);
        }
    }
    Matrix eps = Matrix::Zero(m, m);
    for (int x = 0; x < m; ++x) {
        for (int y = 0; y < m; ++y) {
            const double d = space.points[y] - space.points[x];
            eps(x, y) = Complex(0.5 * ((d > 0) - (d < 0)));
        }
    }
    spec.epsilon = SkewMatrix(std::move(eps));
    return spec;
}

// Copy-pair pairing: epsilon(first_i, second_i) = 1/mu_i so that the
// mu_i^2 weight factor of a copy pair collapses to the base weight.
static SkewMatrix pair_pairing(const DoubledSpace& space) {
    const int mb = space.base.size();
    Matrix eps = Matrix::Zero(2 * mb, 2 * mb);
    for (int i = 0; i < mb; ++i) {
        const double inv = 1.0 / space.base.weights[i];
        eps(space.first_index(i), space.second_index(i)) = Complex(inv);
        eps(space.second_index(i), space.first_index(i)) = Complex(-inv);
    }
    return SkewMatrix(std::move(eps));
}

EnsembleSpec biorthogonal_spec(const Matrix& xi, const Matrix& psi,
                               const DoubledSpace& space, int n) {
    space.base.validate();
    const int mb = space.base.size();
    if (xi.rows() != n || psi.rows() != n || xi.cols() != mb ||
        psi.cols() != mb) {
        throw ConfigError("xi and psi must be n x (base size) value tables");
    }
    EnsembleSpec spec;
    spec.space = space.doubled;
    spec.n = n;
    spec.phi = Matrix::Zero(2 * n, 2 * mb);
    for (int j = 0; j < n; ++j) {
        for (int x = 0; x < mb; ++x) {
            spec.phi(j, space.second_index(x)) = xi(j, x);
            spec.phi(n + j, space.first_index(x)) = psi(j, x);
        }
    }
    spec.epsilon = pair_pairing(space);
    return spec;
}

EnsembleSpec beta2_spec(const DoubledSpace& space, int n) {
    const int mb = space.base.size();
    Matrix mono(n, mb);
    for (int j = 0; j < n; ++j) {
        for (int x = 0; x < mb; ++x) {
            mono(j, x) = std::pow(space.base.points[x], j);
        }
    }
    return biorthogonal_spec(mono, mono, space, n);
}

EnsembleSpec beta4_spec(const DoubledSpace& space, int n) {
    space.base.validate();
    const int mb = space.base.size();
    EnsembleSpec spec;
    spec.space = space.doubled;
    spec.n = n;
    spec.phi = Matrix::Zero(2 * n, 2 * mb);
    for (int j = 0; j < 2 * n; ++j) {
        for (int x = 0; x < mb; ++x) {
            const double p = space.base.points[x];
            spec.phi(j, space.first_index(x)) = std::pow(p, j);
            spec.phi(j, space.second_index(x)) =
                (j == 0) ? Complex(0.0) : Complex(j * std::pow(p, j - 1));
        }
    }
    spec.epsilon = pair_pairing(space);
    return spec;
}

}  // namespace pfj
