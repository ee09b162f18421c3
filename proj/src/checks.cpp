#include "pfj/checks.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "pfj/kernels.hpp"
#include "pfj/oracle.hpp"

namespace pfj::cli {

namespace {

// Raw-bit mapping keeps the stream independent of distribution internals.
double uniform01(std::mt19937_64& g) { return (g() >> 11) * 0x1.0p-53; }
double uniform_pm1(std::mt19937_64& g) { return 2.0 * uniform01(g) - 1.0; }

Matrix random_matrix(std::mt19937_64& g, int rows, int cols) {
    Matrix a(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            a(i, j) = Complex(uniform_pm1(g), uniform_pm1(g));
        }
    }
    return a;
}

SkewMatrix random_skew(std::mt19937_64& g, int dim) {
    const Matrix a = random_matrix(g, dim, dim);
    return SkewMatrix(((a - a.transpose()) / 2.0).eval());
}

std::vector<int> sample_subset(std::mt19937_64& g, int m, int size) {
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < size; ++i) {
        const int j = i + static_cast<int>(g() % (m - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(size);
    std::sort(idx.begin(), idx.end());
    return idx;
}

double rel_dev(Complex got, Complex want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
}

CheckResult check_pfaffian_properties(std::mt19937_64& g, double tol_scale) {
    // Normalized: each property family has its own tolerance, the recorded
    // deviation is max(measured / tolerance) and must stay at or under 1.
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const int dim = 2 * (1 + trial % 5);  // 2, 4, 6, 8, 10
        const SkewMatrix a = random_skew(g, dim);
        const Complex pf = pfaffian(a);
        const Complex pf_oracle = pfaffian_oracle(a);
        worst = std::max(worst, rel_dev(pf, pf_oracle) / 1e-12);

        const Complex det =
            Eigen::PartialPivLU<Matrix>(a.mat()).determinant();
        worst = std::max(worst, rel_dev(pf * pf, det) / 1e-9);

        const Matrix b = random_matrix(g, dim, dim);
        const SkewMatrix congruent =
            SkewMatrix((b * a.mat() * b.transpose()).eval());
        const Complex det_b =
            Eigen::PartialPivLU<Matrix>(b).determinant();
        worst = std::max(worst,
                         rel_dev(pfaffian(congruent), det_b * pf) / 1e-8);
    }
    CheckResult r{"pfaffian-properties", worst, tol_scale, false,
                  "max measured deviation over its per-property tolerance "
                  "(identity vs pairing sum 1e-12, square vs det 1e-9, "
                  "congruence 1e-8), 200 seeded matrices"};
    r.pass = worst <= r.tolerance;
    return r;
}

CheckResult check_normalization(const RunConfig& rc, double tol_scale) {
    const auto& spec = rc.spec;
    const int m = spec.space.size();
    const int count = 2 * spec.n;
    CheckResult r{"density-normalization", 0.0, 1e-9 * tol_scale, true, ""};
    oracle::EnumerationBudget budget;
    if (std::pow(static_cast<double>(m), count) >
        static_cast<double>(budget.max_terms)) {
        r.note = "skipped: exhaustive sum exceeds the enumeration budget";
        return r;
    }
    const MomentSet mom = moment_matrix(spec);
    const Complex total = oracle::sum_over_tuples(
        m, count, budget, [&](const std::vector<int>& config) {
            double lam = 1.0;
            for (int i : config) lam *= spec.space.weights[i];
            return density_value(spec, mom, config) * lam;
        });
    const Complex z_brute = oracle::brute_partition(spec, budget);
    const double dev =
        std::max(std::abs(total - Complex(1.0)), rel_dev(mom.z, z_brute));
    r.deviation = dev;
    r.pass = dev <= r.tolerance;
    r.note = "weighted density sum vs 1, partition function vs enumeration";
    return r;
}

CheckResult check_correlation(const RunConfig& rc, const MatrixKernel& k,
                              std::mt19937_64& g, double tol_scale) {
    const auto& spec = rc.spec;
    const int m = spec.space.size();
    CheckResult r{"correlation-vs-brute", 0.0, 1e-8 * tol_scale, true, ""};
    oracle::EnumerationBudget budget;
    if (std::pow(static_cast<double>(m), 2 * spec.n) >
        static_cast<double>(budget.max_terms)) {
        r.note = "skipped: brute-force reference exceeds the enumeration "
                 "budget";
        return r;
    }
    double dev = 0.0;
    int compared = 0;
    for (int x = 0; x < m; ++x) {
        const double kernel_val = correlation_function(k, {x}).real();
        dev = std::max(std::abs(kernel_val -
                                oracle::brute_correlation(spec, {x}, budget)),
                       dev);
        ++compared;
    }
    std::vector<std::pair<int, int>> pairs;
    if (m <= 6) {
        for (int x = 0; x < m; ++x) {
            for (int y = 0; y < m; ++y) {
                if (x != y) pairs.emplace_back(x, y);
            }
        }
    } else {
        for (int t = 0; t < 10; ++t) {
            const std::vector<int> s = sample_subset(g, m, 2);
            pairs.emplace_back(s[0], s[1]);
        }
    }
    for (const auto& [x, y] : pairs) {
        const double kernel_val = correlation_function(k, {x, y}).real();
        dev = std::max(
            std::abs(kernel_val -
                     oracle::brute_correlation(spec, {x, y}, budget)),
            dev);
        ++compared;
    }
    r.deviation = dev;
    r.pass = dev <= r.tolerance;
    r.note = "one- and two-point functions at " + std::to_string(compared) +
             " arguments";
    return r;
}

CheckResult check_interval_kernels(const RunConfig& rc, const MatrixKernel& k,
                                   std::mt19937_64& g, double tol_scale) {
    const auto& spec = rc.spec;
    const int m = spec.space.size();
    std::vector<std::vector<int>> intervals;
    if (m <= 8) {
        for (int mask = 1; mask < (1 << m); ++mask) {
            std::vector<int> ival;
            for (int i = 0; i < m; ++i) {
                if (mask & (1 << i)) ival.push_back(i);
            }
            if (static_cast<int>(ival.size()) <= 3) {
                intervals.push_back(std::move(ival));
            }
        }
    } else {
        for (int t = 0; t < 40; ++t) {
            const int size = 1 + static_cast<int>(g() % 3);
            intervals.push_back(sample_subset(g, m, size));
        }
    }
    double dev = 0.0;
    int compared = 0, skipped = 0;
    for (const auto& ival : intervals) {
        MatrixKernel direct{}, resolvent{};
        try {
            direct = janossy_kernel_direct(spec, interval_matrices(spec, ival));
            resolvent = janossy_kernel_resolvent(k, ival);
        } catch (const SingularError&) {
            ++skipped;
            continue;
        }
        for (int x : ival) {
            for (int y : ival) {
                const Eigen::Matrix2cd diff =
                    direct.block(x, y) - resolvent.block(x, y);
                dev = std::max(dev, diff.cwiseAbs().maxCoeff());
            }
        }
        ++compared;
    }
    CheckResult r{"interval-kernel-agreement", dev, 1e-8 * tol_scale, false,
                  "closed form vs resolvent on " + std::to_string(compared) +
                      " intervals, " + std::to_string(skipped) +
                      " skipped as singular"};
    r.pass = dev <= r.tolerance;
    return r;
}

CheckResult check_gap(const RunConfig& rc, const MatrixKernel& k,
                      std::mt19937_64& g, double tol_scale) {
    const auto& spec = rc.spec;
    const int m = spec.space.size();
    std::vector<std::vector<int>> intervals;
    if (!rc.interval.empty()) intervals.push_back(rc.interval);
    while (intervals.size() < 3) {
        intervals.push_back(
            sample_subset(g, m, 1 + static_cast<int>(g() % 2)));
    }
    oracle::EnumerationBudget budget;
    const bool brute_ok =
        std::pow(static_cast<double>(m), 2 * spec.n) <=
        static_cast<double>(budget.max_terms);
    double dev = 0.0;
    for (const auto& ival : intervals) {
        const double determinant_route = gap_probability(k, ival);
        const double expansion_route = gap_expansion(k, ival);
        dev = std::max(dev, std::abs(determinant_route - expansion_route));
        if (brute_ok) {
            const double brute = oracle::brute_gap(spec, ival, budget);
            dev = std::max(dev, std::abs(determinant_route - brute));
        }
    }
    CheckResult r{"gap-consistency", dev, 1e-9 * tol_scale, false,
                  brute_ok ? "determinant, expansion, and enumeration routes"
                           : "determinant vs expansion routes (enumeration "
                             "over budget)"};
    r.pass = dev <= r.tolerance;
    return r;
}

CheckResult check_block_resolvent(std::mt19937_64& g, double tol_scale) {
    double dev = 0.0;
    const int n = 4;
    for (int trial = 0; trial < 100; ++trial) {
        // Scale so the full block matrix stays a strict contraction.
        const double scale = 0.08 + 0.04 * uniform01(g);
        const Matrix a = scale * random_matrix(g, n, n);
        const Matrix b = scale * random_matrix(g, n, n);
        const Matrix c = scale * random_matrix(g, n, n);
        dev = std::max(dev, oracle::verify_block_resolvent(a, b, c));
    }
    CheckResult r{"block-resolvent-identity", dev, 1e-10 * tol_scale, false,
                  "closed form of the restriction resolvent on 100 seeded "
                  "triples"};
    r.pass = dev <= r.tolerance;
    return r;
}

}  // namespace

nlohmann::json CheckReport::to_json() const {
    nlohmann::json out;
    out["seed"] = seed;
    out["tol_scale"] = tol_scale;
    out["passed"] = passed;
    out["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
        out["checks"].push_back({{"name", c.name},
                                 {"deviation", c.deviation},
                                 {"tolerance", c.tolerance},
                                 {"pass", c.pass},
                                 {"note", c.note}});
    }
    return out;
}

CheckReport run_checks(const RunConfig& rc, std::uint64_t seed,
                       double tol_scale) {
    CheckReport report;
    report.seed = seed;
    report.tol_scale = tol_scale;
    std::mt19937_64 g(seed);

    report.checks.push_back(check_pfaffian_properties(g, tol_scale));
    report.checks.push_back(check_normalization(rc, tol_scale));

    const MomentSet mom = moment_matrix(rc.spec);
    const MatrixKernel k = correlation_kernel(rc.spec, mom);
    report.checks.push_back(check_correlation(rc, k, g, tol_scale));
    report.checks.push_back(check_interval_kernels(rc, k, g, tol_scale));
    report.checks.push_back(check_gap(rc, k, g, tol_scale));
    report.checks.push_back(check_block_resolvent(g, tol_scale));

    report.passed = true;
    for (const auto& c : report.checks) report.passed = report.passed && c.pass;
    return report;
}

}  // namespace pfj::cli
