#include "pfj/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "pfj/errors.hpp"

namespace pfj::oracle {

namespace {

// Neumaier variant of compensated summation: robust when terms exceed the
// running sum in magnitude.
struct Compensated {
    double s = 0.0, c = 0.0;
    void add(double v) {
        const double t = s + v;
        if (std::abs(s) >= std::abs(v)) {
            c += (s - t) + v;
        } else {
            c += (v - t) + s;
        }
        s = t;
    }
    double total() const { return s + c; }
};

struct CompensatedComplex {
    Compensated re, im;
    void add(Complex v) {
        re.add(v.real());
        im.add(v.imag());
    }
    Complex total() const { return {re.total(), im.total()}; }
};

void check_budget(int m, int r, const EnumerationBudget& budget,
                  const char* what) {
    const double terms = std::pow(static_cast<double>(m), r);
    if (terms > static_cast<double>(budget.max_terms)) {
        throw BudgetExceededError(std::string(what) + " needs " +
                                  std::to_string(terms) +
                                  " terms, over the budget of " +
                                  std::to_string(budget.max_terms));
    }
}

// Lexicographic sum over {0..m-1}^{r-1} suffixes with a fixed first entry.
Complex chunk_sum(int m, int r, int first,
                  const std::function<Complex(const std::vector<int>&)>& term) {
    CompensatedComplex acc;
    std::vector<int> tuple(r, 0);
    tuple[0] = first;
    while (true) {
        acc.add(term(tuple));
        int pos = r - 1;
        while (pos >= 1 && tuple[pos] == m - 1) tuple[pos--] = 0;
        if (pos < 1) break;
        ++tuple[pos];
    }
    return acc.total();
}

Complex tuple_sum(int m, int r, const EnumerationBudget& budget,
                  const std::function<Complex(const std::vector<int>&)>& term,
                  bool parallel) {
    check_budget(m, r, budget, "tuple enumeration");
    if (r == 0) return term(std::vector<int>{});
    if (m == 0) return Complex(0.0, 0.0);
    // Both paths chunk on the first coordinate and merge the per-chunk
    // totals in index order, so thread count never changes the result.
    std::vector<Complex> totals(m);
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int first = 0; first < m; ++first) {
            totals[first] = chunk_sum(m, r, first, term);
        }
    } else {
        for (int first = 0; first < m; ++first) {
            totals[first] = chunk_sum(m, r, first, term);
        }
    }
    CompensatedComplex acc;
    for (const Complex& t : totals) acc.add(t);
    return acc.total();
}

double factorial_ratio(int hi, int lo) {
    // hi! / lo!
    double out = 1.0;
    for (int i = lo + 1; i <= hi; ++i) out *= i;
    return out;
}

// Unnormalized density of an ordered 2n-configuration, built only from a
// determinant and the pairing-sum Pfaffian.
Complex raw_density(const EnsembleSpec& spec, const std::vector<int>& config) {
    const Matrix basis = basis_at(spec, config);
    const Complex det = Eigen::PartialPivLU<Matrix>(basis).determinant();
    return det * pfaffian_oracle(epsilon_at(spec, config));
}

}  // namespace

Complex sum_over_tuples(
    int m, int r, const EnumerationBudget& budget,
    const std::function<Complex(const std::vector<int>&)>& term) {
    return tuple_sum(m, r, budget, term, true);
}

Complex sum_over_tuples_serial(
    int m, int r, const EnumerationBudget& budget,
    const std::function<Complex(const std::vector<int>&)>& term) {
    return tuple_sum(m, r, budget, term, false);
}

Complex brute_partition(const EnsembleSpec& spec,
                        const EnumerationBudget& budget) {
    const int m = spec.space.size();
    const int count = 2 * spec.n;
    return sum_over_tuples(m, count, budget,
                           [&](const std::vector<int>& config) {
                               double lam = 1.0;
                               for (int i : config) {
                                   lam *= spec.space.weights[i];
                               }
                               return raw_density(spec, config) * lam;
                           });
}

double brute_correlation(const EnsembleSpec& spec, const std::vector<int>& pts,
                         const EnumerationBudget& budget) {
    const int m = spec.space.size();
    const int count = 2 * spec.n;
    const int k = static_cast<int>(pts.size());
    if (k > count) return 0.0;
    const Complex z = brute_partition(spec, budget);
    const Complex rest =
        sum_over_tuples(m, count - k, budget,
                        [&](const std::vector<int>& tail) {
                            std::vector<int> config = pts;
                            double lam = 1.0;
                            for (int i : tail) {
                                config.push_back(i);
                                lam *= spec.space.weights[i];
                            }
                            return raw_density(spec, config) * lam;
                        });
    return (factorial_ratio(count, count - k) * rest / z).real();
}

double brute_janossy(const EnsembleSpec& spec, const std::vector<int>& interval,
                     const std::vector<int>& pts,
                     const EnumerationBudget& budget) {
    const int m = spec.space.size();
    const int count = 2 * spec.n;
    const int k = static_cast<int>(pts.size());
    const std::vector<int> ival = normalize_interval(interval, m);
    for (int p : pts) {
        if (!std::binary_search(ival.begin(), ival.end(), p)) {
            throw PointOutsideIntervalError(
                "point " + std::to_string(p) + " lies outside the interval");
        }
    }
    if (k > count) return 0.0;
    const std::vector<int> comp = complement_of(ival, m);
    const Complex z = brute_partition(spec, budget);
    const int mc = static_cast<int>(comp.size());
    const Complex rest =
        sum_over_tuples(mc, count - k, budget,
                        [&](const std::vector<int>& tail) {
                            std::vector<int> config = pts;
                            double lam = 1.0;
                            for (int i : tail) {
                                config.push_back(comp[i]);
                                lam *= spec.space.weights[comp[i]];
                            }
                            return raw_density(spec, config) * lam;
                        });
    return (factorial_ratio(count, count - k) * rest / z).real();
}

double brute_gap(const EnsembleSpec& spec, const std::vector<int>& interval,
                 const EnumerationBudget& budget) {
    const int m = spec.space.size();
    const int count = 2 * spec.n;
    const std::vector<int> ival = normalize_interval(interval, m);
    const double direct = brute_janossy(spec, ival, {}, budget);

    // Independent route: alternating sum over correlation functions of
    // tuples drawn from the interval (partition function hoisted). Terms
    // with k above the particle count vanish, so capping the expansion at
    // the interval size loses nothing.
    const Complex z = brute_partition(spec, budget);
    const int isz = static_cast<int>(ival.size());
    Compensated acc;
    acc.add(1.0);
    double factorial = 1.0;
    for (int k = 1; k <= isz; ++k) {
        factorial *= k;
        const double ratio =
            (k > count) ? 0.0 : factorial_ratio(count, count - k);
        if (ratio == 0.0) continue;
        const Complex level = sum_over_tuples_serial(
            isz, k, budget, [&](const std::vector<int>& tuple) {
                std::vector<int> pts(tuple.size());
                double lam = 1.0;
                for (int q = 0; q < k; ++q) {
                    pts[q] = ival[tuple[q]];
                    lam *= spec.space.weights[pts[q]];
                }
                const Complex rest = sum_over_tuples_serial(
                    m, count - k, budget,
                    [&](const std::vector<int>& tail) {
                        std::vector<int> config = pts;
                        double tail_lam = 1.0;
                        for (int i : tail) {
                            config.push_back(i);
                            tail_lam *= spec.space.weights[i];
                        }
                        return raw_density(spec, config) * tail_lam;
                    });
                return ratio * rest / z * lam;
            });
        acc.add(((k % 2 == 0) ? 1.0 : -1.0) * level.real() / factorial);
    }
    const double expanded = acc.total();
    if (std::abs(direct - expanded) > 1e-9) {
        throw Error("gap cross-check failed: direct " + std::to_string(direct) +
                    " vs expansion " + std::to_string(expanded));
    }
    return direct;
}

double verify_block_resolvent(const Matrix& a, const Matrix& b,
                              const Matrix& c) {
    const int n = static_cast<int>(a.rows());
    Matrix big = Matrix::Zero(3 * n, 3 * n);
    big.block(0, 0, n, n) = a;
    big.block(0, n, n, n) = b;
    big.block(0, 2 * n, n, n) = c;
    big.block(2 * n, 0, n, n) = -Matrix::Identity(n, n);
    big.block(2 * n, n, n, n) = -Matrix::Identity(n, n);

    const Matrix direct =
        big * invert(Matrix::Identity(3 * n, 3 * n) - big);

    const Matrix q = invert(Matrix::Identity(n, n) - a + c);
    Matrix closed = Matrix::Zero(3 * n, 3 * n);
    closed.block(0, 0, n, n) = q - Matrix::Identity(n, n);
    closed.block(0, n, n, n) = q * (b - c);
    closed.block(0, 2 * n, n, n) = q * c;
    closed.block(2 * n, 0, n, n) = -q;
    closed.block(2 * n, n, n, n) = -Matrix::Identity(n, n) - q * (b - c);
    closed.block(2 * n, 2 * n, n, n) = -q * c;

    return (direct - closed).cwiseAbs().maxCoeff();
}

}  // namespace pfj::oracle
