#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>
#include <cmath>
#include <random>
#include <vector>

#include "gnpdense/analysis.hpp"
#include "gnpdense/graph.hpp"
#include "gnpdense/oracle.hpp"
#include "gnpdense/rng.hpp"

using namespace gnpdense;

namespace {

// enumeration oracle: count of i-bit patterns with popcount >= t
std::uint64_t enumerate_tail(unsigned i, unsigned t) {
    std::uint64_t count = 0;
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << i); ++pattern)
        if (std::popcount(pattern) >= t) ++count;
    return count;
}

// independent quadrature oracle: Romberg on a fixed grid
double romberg_integral(double (*f)(double), double a, double b, int levels) {
    std::vector<std::vector<double>> r(levels, std::vector<double>(levels, 0.0));
    double h = b - a;
    r[0][0] = 0.5 * h * (f(a) + f(b));
    for (int i = 1; i < levels; ++i) {
        h *= 0.5;
        double sum = 0.0;
        const std::uint64_t points = std::uint64_t{1} << (i - 1);
        for (std::uint64_t j = 1; j <= points; ++j)
            sum += f(a + (2.0 * j - 1.0) * h);
        r[i][0] = 0.5 * r[i - 1][0] + h * sum;
        double factor = 4.0;
        for (int k = 1; k <= i; ++k) {
            r[i][k] = (factor * r[i][k - 1] - r[i - 1][k - 1]) / (factor - 1.0);
            factor *= 4.0;
        }
    }
    return r[levels - 1][levels - 1];
}

double bound_integrand(double x) { return (1.0 + x) * inverse_entropy(1.0 - 1.0 / (1.0 + x)); }

// exact Pascal-walk numerator for 64 < i <= 70 (sums still fit in u128)
unsigned __int128 pascal_tail_numerator(unsigned i, unsigned t) {
    std::vector<unsigned __int128> row(i + 1, 0);
    row[0] = 1;
    for (unsigned r = 1; r <= i; ++r)
        for (unsigned c = r; c > 0; --c) row[c] += row[c - 1];
    unsigned __int128 sum = 0;
    for (unsigned j = t; j <= i; ++j) sum += row[j];
    return sum;
}

}  // namespace

TEST_CASE("entropy: pinned values and domain") {
    CHECK(entropy(0.0) == 0.0);
    CHECK(entropy(1.0) == 0.0);
    CHECK(entropy(0.5) == 1.0);
    // closed form: H(1/4) = 2 - (3/4) log2 3
    CHECK(entropy(0.25) == doctest::Approx(2.0 - 0.75 * std::log2(3.0)).epsilon(1e-14));
    CHECK_THROWS_AS(entropy(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(entropy(1.01), std::invalid_argument);
    CHECK_THROWS_AS(entropy(std::nan("")), std::invalid_argument);
}

TEST_CASE("entropy: symmetry and monotonicity") {
    for (int i = 1; i < 50; ++i) {
        const double d = i / 100.0;
        CHECK(entropy(d) == doctest::Approx(entropy(1.0 - d)).epsilon(1e-13));
        CHECK(entropy(d) < entropy(d + 0.005));  // strictly increasing on [0, 1/2]
    }
}

TEST_CASE("inverse_entropy: endpoints, domain, round trip") {
    CHECK(inverse_entropy(0.0) == 0.0);
    CHECK(inverse_entropy(1.0) == 0.5);
    CHECK_THROWS_AS(inverse_entropy(-0.1), std::invalid_argument);
    CHECK_THROWS_AS(inverse_entropy(1.1), std::invalid_argument);

    CHECK(inverse_entropy(0.5) == doctest::Approx(0.11002786443836).epsilon(1e-9));

    std::mt19937_64 eng(20260810);
    for (int rep = 0; rep < 10000; ++rep) {
        const double d = 0.5 * unit_draw(eng);
        CHECK(std::abs(inverse_entropy(entropy(d)) - d) <= 1e-9);
    }
}

TEST_CASE("binomial_tail: exact values") {
    CHECK(binomial_tail(0, 0) == 1.0);
    CHECK(binomial_tail(10, 0) == 1.0);
    CHECK(binomial_tail(100, 0) == 1.0);
    CHECK(binomial_tail(2, 1) == 0.75);  // 3 of the 4 outcomes
    CHECK(binomial_tail(20, 15) == 21700.0 / 1048576.0);
    CHECK(binomial_tail(20, 20) == std::exp2(-20.0));
    CHECK_THROWS_AS(binomial_tail(5, 6), std::invalid_argument);
}

TEST_CASE("binomial_tail equals exhaustive enumeration up to i = 14") {
    // the acceptance suite extends this to i = 20
    for (unsigned i = 0; i <= 14; ++i)
        for (unsigned t = 0; t <= i; ++t)
            CHECK(binomial_tail_numerator(i, t) == enumerate_tail(i, t));
}

TEST_CASE("binomial_tail: exact and big-integer routes agree across the seams") {
    for (unsigned i : {60u, 63u, 64u}) {
        for (unsigned t : {i / 2, 3 * i / 4, i - 1}) {
            const double exact = std::log2(static_cast<double>(
                                     static_cast<long double>(binomial_tail_numerator(i, t)))) -
                                 i;
            CHECK(log2_binomial_tail(i, t) == doctest::Approx(exact).epsilon(1e-12));
        }
    }
    for (unsigned i : {65u, 68u, 70u}) {
        for (unsigned t : {i / 2, 3 * i / 4, i - 2}) {
            const double exact = std::log2(static_cast<double>(
                                     static_cast<long double>(pascal_tail_numerator(i, t)))) -
                                 i;
            CHECK(log2_binomial_tail(i, t) == doctest::Approx(exact).epsilon(1e-10));
        }
    }
    // Pascal identity tail(i+1,t) = (tail(i,t-1) + tail(i,t))/2 across the
    // big-integer / log-domain seam at i = 400
    for (std::uint64_t t : {210ull, 260ull, 320ull, 380ull}) {
        const double lhs = std::exp2(log2_binomial_tail(401, t));
        const double rhs = 0.5 * (std::exp2(log2_binomial_tail(400, t - 1)) +
                                  std::exp2(log2_binomial_tail(400, t)));
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
    }
}

TEST_CASE("binomial_tail: entropy sandwich") {
    // lower bound on the integer-d*i lattice (where the standard bound applies), upper
    // bound for arbitrary d <= 1/2
    std::mt19937_64 eng(7);
    for (int rep = 0; rep < 200; ++rep) {
        const std::uint64_t i = 2 + static_cast<std::uint64_t>(bounded_draw(eng, 299));
        const std::uint64_t a = bounded_draw(eng, i / 2 + 1);
        const double d = static_cast<double>(a) / static_cast<double>(i);
        const double log_tail = log2_binomial_tail(i, dense_edge_threshold(i, d));
        const double exponent = (entropy(d) - 1.0) * static_cast<double>(i);
        const double slack = std::log2(static_cast<double>(i) + 1.0);
        CHECK(log_tail >= exponent - slack - 1e-9);
        CHECK(log_tail <= exponent + slack + 1e-9);

        const double frac = 0.5 * unit_draw(eng);
        const double log_tail_frac = log2_binomial_tail(i, dense_edge_threshold(i, frac));
        CHECK(log_tail_frac <= (entropy(frac) - 1.0) * static_cast<double>(i) + slack + 1e-9);
    }
}

TEST_CASE("dense_edge_threshold: rounding semantics") {
    CHECK(dense_edge_threshold(10, 0.1) == 9);
    CHECK(dense_edge_threshold(15, 0.2) == 12);
    CHECK(dense_edge_threshold(153, 0.049) == 146);
    CHECK(dense_edge_threshold(7, 0.0) == 7);
    CHECK(dense_edge_threshold(7, 1.0) == 0);
    CHECK(dense_edge_threshold(20, 0.003) == 20);  // ceil(19.94)
    CHECK_THROWS_AS(dense_edge_threshold(10, -0.1), std::invalid_argument);
}

TEST_CASE("schedule_scale_m and delta_schedule") {
    CHECK(schedule_scale_m(1 << 14, 28) == doctest::Approx(110.862096586).epsilon(1e-9));
    CHECK_THROWS_AS(delta_schedule(4, 4), std::invalid_argument);  // m <= 1
    CHECK_THROWS_AS(delta_schedule(2, 2), std::invalid_argument);  // log2 n too small

    for (std::uint32_t n : {1u << 12, 1u << 14, 1u << 16}) {
        for (std::uint32_t k : {16u, 24u, 28u, 40u}) {
            const auto ds = delta_schedule(n, k);
            const double lm = std::log2(schedule_scale_m(n, k));
            REQUIRE(ds.size() == k);
            for (std::uint32_t i = 0; i < k; ++i) {
                CHECK(ds[i] >= 0.0);
                CHECK(ds[i] <= 0.5);
                if (i > 0) CHECK(ds[i] >= ds[i - 1]);  // nondecreasing
                if (static_cast<double>(i) <= lm) {
                    CHECK(ds[i] == 0.0);  // free prefix
                } else {
                    // defining relation, checked through the forward map
                    CHECK(entropy(ds[i]) ==
                          doctest::Approx(1.0 - lm / static_cast<double>(i)).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("lemma1_success_bound") {
    CHECK(lemma1_success_bound(1 << 12, 24, 0, 0.3) == 1.0);
    // d = 1/2 with many candidates: tail >= 1/2 each, bound ~ 1
    CHECK(lemma1_success_bound(1000, 10, 9, 0.5) == doctest::Approx(1.0).epsilon(1e-12));
    // frozen from the independent oracle: delta_20 = H^{-1}(1 - log2(m)/20),
    // tail(20,16) = 6196/2^20, 1 - (1 - tail)^170 = 0.634870730137485
    const auto ds = delta_schedule(1 << 12, 24);
    CHECK(lemma1_success_bound(1 << 12, 24, 20, ds[20]) ==
          doctest::Approx(0.634870730137485).epsilon(1e-9));
    CHECK_THROWS_AS(lemma1_success_bound(100, 10, 10, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(lemma1_success_bound(100, 10, 3, 0.7), std::invalid_argument);
}

TEST_CASE("predicted_edges_lower_bound") {
    // all-zero schedule: k = 5 <= log2 m at n = 2^20 gives exactly C(5,2)
    CHECK(predicted_edges_lower_bound(1 << 20, 5) == 10.0);
    CHECK(predicted_edges_lower_bound(1 << 20, 2) == 1.0);

    // identity with C(k,2) - sum_{i} i * delta_i
    for (std::uint32_t k : {24u, 28u, 33u}) {
        const std::uint32_t n = 1 << 14;
        const auto ds = delta_schedule(n, k);
        double alt = static_cast<double>(k) * (k - 1) / 2.0;
        for (std::uint32_t i = 0; i < k; ++i) alt -= static_cast<double>(i) * ds[i];
        CHECK(predicted_edges_lower_bound(n, k) == doctest::Approx(alt).epsilon(1e-12));
    }

    // frozen oracle values (mpmath, 40 digits)
    CHECK(predicted_edges_lower_bound(1 << 14, 28) ==
          doctest::Approx(322.8932232798926).epsilon(1e-9));
    const double ratio = predicted_edges_lower_bound(1 << 20, 40) / 780.0;
    CHECK(ratio == doctest::Approx(0.8846678445).epsilon(1e-6));
    CHECK(ratio >= 0.88);
    CHECK(ratio <= 0.89);
}

TEST_CASE("density_integral: values, convergence, oracle agreement") {
    CHECK(density_integral(0.0, 1e-8) == 0.0);
    CHECK_THROWS_AS(density_integral(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(density_integral(-1.0, 1e-8), std::invalid_argument);

    // frozen quadrature oracle values (mpmath.quad, 40 digits)
    CHECK(density_integral(1.0, 1e-8) == doctest::Approx(0.0977215762224568).epsilon(2e-8));
    CHECK(density_integral(0.25, 1e-8) == doctest::Approx(0.00437834705596).epsilon(1e-7));
    CHECK(density_integral(0.5, 1e-8) == doctest::Approx(0.02057149613133).epsilon(1e-7));
    CHECK(density_integral(2.0, 1e-8) == doctest::Approx(0.46486391896278).epsilon(1e-7));

    // independent Romberg oracle evaluated in-test
    const double romberg = romberg_integral(bound_integrand, 0.0, 1.0, 14);
    CHECK(std::abs(density_integral(1.0, 1e-8) - romberg) <= 1e-6);

    // halving the tolerance moves the result by less than the previous tol
    double prev = density_integral(1.0, 1e-4);
    for (double tol = 5e-5; tol >= 1e-8; tol /= 2.0) {
        const double cur = density_integral(1.0, tol);
        CHECK(std::abs(cur - prev) < 2.0 * tol);
        prev = cur;
    }

    // nondecreasing in alpha
    double last = 0.0;
    for (double alpha : {0.1, 0.5, 1.0, 1.5, 2.0, 3.0}) {
        const double v = density_integral(alpha, 1e-8);
        CHECK(v >= last);
        last = v;
    }
}

TEST_CASE("predicted_density: regimes and route agreement") {
    // clique regime: k <= log2 m
    const auto clique = predicted_density(1 << 20, 10);
    CHECK(clique.discrete == 1.0);
    CHECK(clique.integral_form == 1.0);

    const auto p14 = predicted_density(1 << 14, 28);
    CHECK(p14.discrete == doctest::Approx(0.854214876402).epsilon(1e-8));
    CHECK(p14.integral_form == doctest::Approx(0.861917911274).epsilon(1e-6));

    const auto p16 = predicted_density(1 << 16, 32);
    CHECK(std::abs(p16.discrete - p16.integral_form) < 0.01);
    CHECK(p16.discrete == doctest::Approx(0.867176516).epsilon(1e-6));
}

TEST_CASE("clique_number_estimate") {
    CHECK(clique_number_estimate(1024) == 13);
    CHECK(clique_number_estimate(16) == 3);
    CHECK(clique_number_estimate(256) == 9);
    CHECK(clique_number_estimate(128) == 8);
    CHECK_THROWS_AS(clique_number_estimate(3), std::invalid_argument);
}

TEST_CASE("expected_dense_subgraph_count: closed forms") {
    // k=2, delta=0: a pair is dense iff its edge is present
    CHECK(expected_dense_subgraph_count(18, 2, 0.0) ==
          doctest::Approx(std::log2(153.0 / 2.0)).epsilon(1e-12));
    // k=3, delta=0: all three edges
    CHECK(expected_dense_subgraph_count(18, 3, 0.0) ==
          doctest::Approx(std::log2(816.0 / 8.0)).epsilon(1e-12));
    // exact rational: C(18,5) * 11 / 2^10 = 92.0390625
    CHECK(expected_dense_subgraph_count(18, 5, 0.1) ==
          doctest::Approx(std::log2(92.0390625)).epsilon(1e-12));
    // exact rational: C(24,6) * 576 / 2^15 = 2365.9453125
    CHECK(expected_dense_subgraph_count(24, 6, 0.2) ==
          doctest::Approx(std::log2(2365.9453125)).epsilon(1e-12));
    CHECK_THROWS_AS(expected_dense_subgraph_count(18, 1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(expected_dense_subgraph_count(18, 5, 0.7), std::invalid_argument);
}

TEST_CASE("expected count matches the exact counting oracle in the mean" *
          doctest::timeout(300)) {
    // quick Monte Carlo cross-check; the acceptance suite runs the pinned one
    const std::uint32_t n = 24, k = 6;
    const double delta = 0.2;
    const double predicted = std::exp2(expected_dense_subgraph_count(n, k, delta));
    const int trials = 400;
    double sum = 0.0, sumsq = 0.0;
    for (int t = 0; t < trials; ++t) {
        const Graph g = Graph::generate(n, 0.5, splitmix64_at(424242, t));
        const double c = static_cast<double>(count_dense_subgraphs(g, k, delta));
        sum += c;
        sumsq += c * c;
    }
    const double mean = sum / trials;
    const double sd = std::sqrt((sumsq - trials * mean * mean) / (trials - 1));
    const double se = sd / std::sqrt(static_cast<double>(trials));
    CHECK(std::abs(mean - predicted) <= 4.0 * se);
}

TEST_CASE("size_threshold and gap_ratio") {
    // delta = 0: 2 log2 n + 2 log2 e + 1
    const auto z = size_threshold(0.0, 1024);
    CHECK(z.size == doctest::Approx(20.0 + 2.0 * std::log2(std::exp(1.0)) + 1.0).epsilon(1e-12));
    CHECK(z.coefficient == 2.0);

    const auto t = size_threshold(0.049, 24);
    CHECK(t.coefficient == doctest::Approx(2.78603429276).epsilon(1e-9));
    CHECK(t.coefficient >= 2.77);
    CHECK(t.coefficient <= 2.80);
    CHECK(t.size == doctest::Approx(17.7932606159).epsilon(1e-8));

    CHECK(gap_ratio(0.049) == doctest::Approx(1.39301714638).epsilon(1e-9));
    CHECK(gap_ratio(0.049) >= 1.385);
    CHECK(gap_ratio(0.049) <= 1.40);

    CHECK_THROWS_AS(size_threshold(0.5, 100), std::invalid_argument);
    CHECK_THROWS_AS(size_threshold(-0.1, 100), std::invalid_argument);
}

TEST_CASE("expectation vanishes at the size threshold") {
    for (std::uint32_t e = 10; e <= 20; e += 2) {
        const std::uint64_t n = std::uint64_t{1} << e;
        for (double delta : {0.0, 0.02, 0.049, 0.1}) {
            const std::uint32_t k =
                static_cast<std::uint32_t>(std::ceil(size_threshold(delta, n).size));
            const double log2_expect =
                expected_dense_subgraph_count(static_cast<std::uint32_t>(n), k, delta);
            CHECK(log2_expect <= 0.0);
        }
    }
}

TEST_CASE("bound report carries consistent fields") {
    const BoundReport r = make_bound_report(1 << 14, 28, 0.049);
    CHECK(r.predicted_density_discrete ==
          doctest::Approx(r.predicted_edges / 378.0).epsilon(1e-12));
    CHECK(r.delta_schedule.size() == 28);
    CHECK(r.gap_ratio == doctest::Approx(r.threshold_coefficient / 2.0).epsilon(1e-15));
    const std::string json = bound_report_json(r);
    CHECK(json.find("\"predicted_edges\":") != std::string::npos);
    const std::string text = bound_report_text(r);
    CHECK(text.find("predicted_edges") != std::string::npos);
}

TEST_CASE("format_double uses 12 significant digits") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(1.0 / 3.0) == "0.333333333333");
    CHECK(format_double(322.8932232798926) == "322.89322328");
}
