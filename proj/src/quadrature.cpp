#include "pfj/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

#include "pfj/errors.hpp"

namespace pfj {

namespace {

// Legendre P_n(x) and its derivative via the three-term recurrence.
void legendre_eval(int n, double x, double& p, double& dp) {
    double pm1 = 0.0, pk = 1.0;
    for (int k = 0; k < n; ++k) {
        const double pm2 = pm1;
        pm1 = pk;
        pk = ((2.0 * k + 1.0) * x * pm1 - k * pm2) / (k + 1.0);
    }
    p = pk;
    dp = n * (x * pk - pm1) / (x * x - 1.0);
}

}  // namespace

QuadratureRule gauss_legendre(int n, double a, double b) {
    if (n < 1) throw ConfigError("quadrature order must be positive");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double pi = std::acos(-1.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-angle initial guess, then Newton on P_n.
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double p = 0.0, dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            legendre_eval(n, x, p, dp);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        legendre_eval(n, x, p, dp);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    // Affine map [-1, 1] -> [a, b].
    const double mid = 0.5 * (a + b), len = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = mid + len * rule.nodes[i];
        rule.weights[i] *= len;
    }
    return rule;
}

QuadratureRule gauss_hermite(int n) {
    if (n < 1) throw ConfigError("quadrature order must be positive");
    // Golub-Welsch: nodes are the eigenvalues of the symmetric tridiagonal
    // Jacobi matrix of the orthonormal recurrence for weight exp(-x^2)
    // (zero diagonal, off-diagonal sqrt(k/2)); each weight is the total
    // mass sqrt(pi) times the squared first component of the corresponding
    // unit eigenvector. The eigensolver returns the nodes already sorted.
    Eigen::MatrixXd jacobi = Eigen::MatrixXd::Zero(n, n);
    for (int k = 1; k < n; ++k) {
        const double off = std::sqrt(0.5 * k);
        jacobi(k - 1, k) = off;
        jacobi(k, k - 1) = off;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jacobi);
    const double mass = std::sqrt(std::acos(-1.0));
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        rule.weights[i] = mass * v0 * v0;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

}  // namespace pfj
