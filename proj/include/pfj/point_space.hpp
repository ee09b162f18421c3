#pragma once

#include <vector>

#include "pfj/errors.hpp"

namespace pfj {

// Finite discrete state space: real point coordinates plus a strictly
// positive weight per point (the measure of that atom).
struct PointSpace {
    std::vector<double> points;
    std::vector<double> weights;

    int size() const { return static_cast<int>(points.size()); }
    void validate() const;
};

// Sorted, deduplicated, range-checked copy of a set of point indices.
std::vector<int> normalize_interval(const std::vector<int>& interval, int m);

// Indices of the complement of `interval` in {0, ..., m-1}.
std::vector<int> complement_of(const std::vector<int>& interval, int m);

}  // namespace pfj
