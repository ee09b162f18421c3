#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "pfj/classical.hpp"
#include "pfj/oracle.hpp"

using pfj::Complex;
using pfj::EnsembleSpec;
using pfj::PointSpace;
namespace oracle = pfj::oracle;

namespace {

std::vector<double> linspace(double a, double b, int m) {
    std::vector<double> out(m);
    for (int i = 0; i < m; ++i) out[i] = a + (b - a) * i / (m - 1);
    return out;
}

EnsembleSpec six_point_instance() {
    return pfj::beta1_spec(
        PointSpace{linspace(-1.0, 1.0, 6), std::vector<double>(6, 1.0)}, 2);
}

Complex indexed_term(const std::vector<int>& tuple) {
    // Deterministic, order-sensitive pseudo-data.
    double re = 1.0, im = 0.0;
    for (size_t i = 0; i < tuple.size(); ++i) {
        re += std::sin(1.7 * tuple[i] + 0.3 * i);
        im += std::cos(0.9 * tuple[i] - 0.2 * i);
    }
    return {re, im};
}

}  // namespace

TEST_CASE("tuple enumeration visits every tuple once") {
    const oracle::EnumerationBudget budget;
    const Complex count = oracle::sum_over_tuples(
        5, 3, budget, [](const std::vector<int>&) { return Complex(1.0); });
    CHECK(count.real() == doctest::Approx(125.0));
    const Complex empty = oracle::sum_over_tuples(
        5, 0, budget,
        [](const std::vector<int>& t) { return Complex(7.0 + t.size()); });
    CHECK(empty.real() == doctest::Approx(7.0));
    const Complex none = oracle::sum_over_tuples(
        0, 2, budget, [](const std::vector<int>&) { return Complex(1.0); });
    CHECK(none == Complex(0.0, 0.0));
}

TEST_CASE("parallel and serial enumeration agree bitwise") {
    const oracle::EnumerationBudget budget;
    const Complex parallel = oracle::sum_over_tuples(7, 5, budget, indexed_term);
    const Complex serial =
        oracle::sum_over_tuples_serial(7, 5, budget, indexed_term);
    CHECK(parallel.real() == serial.real());
    CHECK(parallel.imag() == serial.imag());
}

TEST_CASE("enumeration refuses to start over budget") {
    oracle::EnumerationBudget tight;
    tight.max_terms = 1000;
    CHECK_THROWS_AS(
        oracle::sum_over_tuples(11, 3, tight,
                                [](const std::vector<int>&) {
                                    return Complex(1.0);
                                }),
        pfj::BudgetExceededError);
    CHECK_THROWS_AS(oracle::brute_partition(six_point_instance(), tight),
                    pfj::BudgetExceededError);
}

TEST_CASE("partition of the two-point pair instance is one") {
    const EnsembleSpec spec =
        pfj::beta1_spec(PointSpace{{0.0, 1.0}, {1.0, 1.0}}, 1);
    CHECK(oracle::brute_partition(spec).real() == doctest::Approx(1.0));
}

TEST_CASE("enumerated partition matches the moment route") {
    const EnsembleSpec spec = six_point_instance();
    const Complex brute = oracle::brute_partition(spec);
    CHECK(brute.real() == doctest::Approx(37.158912).epsilon(1e-9));
    const pfj::MomentSet mom = pfj::moment_matrix(spec);
    CHECK(std::abs(mom.z - brute) <= 1e-10 * std::abs(brute));
}

TEST_CASE("one-point correlations integrate to the particle count") {
    const EnsembleSpec spec = six_point_instance();
    double total = 0.0;
    for (int x = 0; x < spec.space.size(); ++x) {
        total += oracle::brute_correlation(spec, {x}) * spec.space.weights[x];
    }
    CHECK(total == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(oracle::brute_correlation(spec, {0, 1, 2, 3, 4}) ==
          doctest::Approx(0.0));
}

TEST_CASE("exact-count densities sum to one over the interval") {
    const EnsembleSpec spec = six_point_instance();
    const std::vector<int> ival = {1, 2, 4};
    const int isz = static_cast<int>(ival.size());
    double total = oracle::brute_janossy(spec, ival, {});
    double factorial = 1.0;
    for (int k = 1; k <= 2 * spec.n; ++k) {
        factorial *= k;
        std::vector<int> tuple(k, 0);
        double level = 0.0;
        while (true) {
            std::vector<int> pts(k);
            double lam = 1.0;
            for (int q = 0; q < k; ++q) {
                pts[q] = ival[tuple[q]];
                lam *= spec.space.weights[pts[q]];
            }
            level += oracle::brute_janossy(spec, ival, pts) * lam;
            int pos = k - 1;
            while (pos >= 0 && tuple[pos] == isz - 1) tuple[pos--] = 0;
            if (pos < 0) break;
            ++tuple[pos];
        }
        total += level / factorial;
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("janossy enumeration rejects outside points") {
    const EnsembleSpec spec = six_point_instance();
    CHECK_THROWS_AS(oracle::brute_janossy(spec, {1, 2}, {0}),
                    pfj::PointOutsideIntervalError);
}

TEST_CASE("full-interval densities reduce to scaled configuration weights") {
    // With the whole space as the interval, the exact-count density at a
    // full configuration is (2n)! times the configuration density.
    const EnsembleSpec spec =
        pfj::beta1_spec(PointSpace{{0.0, 1.0}, {1.0, 1.0}}, 1);
    CHECK(oracle::brute_janossy(spec, {0, 1}, {0, 1}) ==
          doctest::Approx(1.0));
    CHECK(oracle::brute_janossy(spec, {0, 1}, {1}) == doctest::Approx(0.0));
    // Gap of the full space vanishes: the particles must land somewhere.
    CHECK(oracle::brute_gap(spec, {0, 1}) == doctest::Approx(0.0));
}

TEST_CASE("gap enumeration passes its internal cross-check") {
    const EnsembleSpec spec = six_point_instance();
    const double gap = oracle::brute_gap(spec, {2, 3});
    CHECK(gap == doctest::Approx(0.15873015873015864).epsilon(1e-9));
    CHECK(oracle::brute_gap(spec, {}) == doctest::Approx(1.0));
}

TEST_CASE("block-resolvent closed form matches direct inversion") {
    std::mt19937_64 g(31);
    const auto rnd = [&]() {
        return 2.0 * ((g() >> 11) * 0x1.0p-53) - 1.0;
    };
    for (int trial = 0; trial < 25; ++trial) {
        pfj::Matrix a(4, 4), b(4, 4), c(4, 4);
        for (int i = 0; i < 4; ++i) {
            for (int j = 0; j < 4; ++j) {
                a(i, j) = Complex(rnd(), rnd()) * 0.08;
                b(i, j) = Complex(rnd(), rnd()) * 0.08;
                c(i, j) = Complex(rnd(), rnd()) * 0.08;
            }
        }
        CHECK(oracle::verify_block_resolvent(a, b, c) < 1e-12);
    }
}
