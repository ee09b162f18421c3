#pragma once

#include <string>
#include <vector>

#include "pfj/point_space.hpp"

namespace pfj {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

// Gauss-Legendre nodes/weights for unit weight on [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

// Gauss-Hermite nodes/weights for weight exp(-x^2) on the real line
// (the weight is folded into the returned weights).
QuadratureRule gauss_hermite(int n);

}  // namespace pfj
