#pragma once

#include <functional>
#include <vector>

#include "pfj/ensemble.hpp"

namespace pfj::oracle {

// Hard cap on exhaustive enumeration, checked before any loop starts.
struct EnumerationBudget {
    long long max_terms = 10'000'000;
};

// Sum of term(t) over all tuples t in {0..m-1}^r, in lexicographic order
// with compensated accumulation. The default entry point partitions on the
// first tuple position across OpenMP threads; per-chunk sums and the final
// merge keep a fixed order, so results are bit-identical to the serial twin
// regardless of thread count.
Complex sum_over_tuples(int m, int r, const EnumerationBudget& budget,
                        const std::function<Complex(const std::vector<int>&)>& term);
Complex sum_over_tuples_serial(int m, int r, const EnumerationBudget& budget,
                               const std::function<Complex(const std::vector<int>&)>& term);

// Everything below is definitional: density sums with determinants and
// pairing-sum Pfaffians only, no correlation-kernel machinery, so these
// serve as independent ground truth for the kernel routes.

// Z = sum over all ordered 2n-configurations of det * pf * prod lambda.
Complex brute_partition(const EnsembleSpec& spec,
                        const EnumerationBudget& budget = {});

// k-point correlation: (2n)!/(2n-k)! sum over the remaining particles.
double brute_correlation(const EnsembleSpec& spec, const std::vector<int>& pts,
                         const EnumerationBudget& budget = {});

// Janossy density: exactly the given particles inside the interval, the
// remaining 2n-k summed over its complement.
double brute_janossy(const EnsembleSpec& spec, const std::vector<int>& interval,
                     const std::vector<int>& pts,
                     const EnumerationBudget& budget = {});

// Probability of an empty interval, summed over complement configurations.
// Cross-checks itself against the alternating expansion over enumerated
// correlation sums and throws if the two disagree beyond 1e-9.
double brute_gap(const EnsembleSpec& spec, const std::vector<int>& interval,
                 const EnumerationBudget& budget = {});

// Max entrywise deviation between the directly computed resolvent
// M(Id - M)^{-1} of the block matrix [[A,B,C],[0,0,0],[-Id,-Id,0]] and its
// closed form [[Q-Id, Q(B-C), QC],[0,0,0],[-Q, -Id-Q(B-C), -QC]] with
// Q = (Id - A + C)^{-1}.
double verify_block_resolvent(const Matrix& a, const Matrix& b,
                              const Matrix& c);

}  // namespace pfj::oracle
