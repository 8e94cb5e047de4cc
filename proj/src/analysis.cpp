#include "gnpdense/analysis.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace gnpdense {

namespace {

constexpr double kBisectTol = 1e-12;

// log2 of an mpz as exponent + mantissa, exact to double rounding
double mpz_log2(const mpz_t z) {
    long exp = 0;
    const double d = mpz_get_d_2exp(&exp, z);
    return std::log2(d) + static_cast<double>(exp);
}

double log2_binomial_coeff(double n, double kk) {
    // lgamma route for the log-domain paths
    return (std::lgamma(n + 1) - std::lgamma(kk + 1) - std::lgamma(n - kk + 1)) / std::numbers::ln2;
}

}  // namespace

double entropy(double d) {
    if (!(d >= 0.0 && d <= 1.0)) throw std::invalid_argument("entropy: d must be in [0,1]");
    if (d == 0.0 || d == 1.0) return 0.0;
    return -d * std::log2(d) - (1.0 - d) * std::log2(1.0 - d);
}

double inverse_entropy(double y) {
    if (!(y >= 0.0 && y <= 1.0)) throw std::invalid_argument("inverse_entropy: y must be in [0,1]");
    if (y == 0.0) return 0.0;
    if (y == 1.0) return 0.5;
    double lo = 0.0, hi = 0.5;
    while (hi - lo > kBisectTol) {
        const double mid = 0.5 * (lo + hi);
        if (entropy(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

unsigned __int128 binomial_tail_numerator(unsigned i, unsigned t) {
    if (i > 64) throw std::invalid_argument("binomial_tail_numerator: i must be <= 64");
    if (t > i) throw std::invalid_argument("binomial_tail_numerator: t must be <= i");
    unsigned __int128 sum = 0;
    unsigned __int128 c = 1;  // C(i, i) walking down to C(i, t)
    for (unsigned j = i; j + 1 > t; --j) {
        sum += c;
        if (j > 0) c = c * j / (i - j + 1);
    }
    return sum;
}

double log2_binomial_tail(std::uint64_t i, std::uint64_t t) {
    if (t > i) throw std::invalid_argument("binomial_tail: t must be <= i");
    if (t == 0) return 0.0;
    if (i <= 64) {
        const auto num = binomial_tail_numerator(static_cast<unsigned>(i), static_cast<unsigned>(t));
        if (num == 0) return -std::numeric_limits<double>::infinity();
        return std::log2(static_cast<double>(static_cast<long double>(num))) -
               static_cast<double>(i);
    }
    if (i <= 400) {
        // exact integer sum of C(i, j) for j = t..i
        mpz_t sum, term;
        mpz_init(sum);
        mpz_init(term);
        for (std::uint64_t j = t; j <= i; ++j) {
            mpz_bin_uiui(term, static_cast<unsigned long>(i), static_cast<unsigned long>(j));
            mpz_add(sum, sum, term);
        }
        const double out = mpz_log2(sum) - static_cast<double>(i);
        mpz_clear(sum);
        mpz_clear(term);
        return out;
    }
    if (i - t + 1 > 10'000'000)
        throw std::invalid_argument("binomial_tail: tail too long for log-domain summation");
    // log-sum-exp over the terms, anchored at the largest one
    const double di = static_cast<double>(i);
    double max_log = -std::numeric_limits<double>::infinity();
    std::vector<double> logs;
    logs.reserve(i - t + 1);
    for (std::uint64_t j = t; j <= i; ++j) {
        const double l = log2_binomial_coeff(di, static_cast<double>(j));
        logs.push_back(l);
        max_log = std::max(max_log, l);
    }
    double acc = 0.0;
    for (double l : logs) acc += std::exp2(l - max_log);
    return max_log + std::log2(acc) - di;
}

double binomial_tail(std::uint64_t i, std::uint64_t t) {
    if (t > i) throw std::invalid_argument("binomial_tail: t must be <= i");
    if (i <= 64) {
        const auto num = binomial_tail_numerator(static_cast<unsigned>(i), static_cast<unsigned>(t));
        return static_cast<double>(static_cast<long double>(num) * std::exp2l(-static_cast<long double>(i)));
    }
    return std::exp2(log2_binomial_tail(i, t));
}

double schedule_scale_m(std::uint32_t n, std::uint32_t k) {
    if (k == 0 || k > n) throw std::invalid_argument("schedule: need 1 <= k <= n");
    if (n < 3) throw std::invalid_argument("schedule: n too small (log2 n must exceed 1)");
    const double m = static_cast<double>(n) / (2.0 * k * std::log(std::log2(static_cast<double>(n))));
    if (!(m > 1.0)) throw std::invalid_argument("schedule: n too small, scale m <= 1");
    return m;
}

std::vector<double> delta_schedule(std::uint32_t n, std::uint32_t k) {
    const double lm = std::log2(schedule_scale_m(n, k));
    std::vector<double> deltas(k, 0.0);
    for (std::uint32_t i = 1; i < k; ++i) {
        const double y = 1.0 - lm / static_cast<double>(i);
        if (y > 0.0) deltas[i] = inverse_entropy(y);
    }
    return deltas;
}

std::uint64_t dense_edge_threshold(std::uint64_t pairs, double delta) {
    if (!(delta >= 0.0 && delta <= 1.0))
        throw std::invalid_argument("dense_edge_threshold: delta must be in [0,1]");
    long double required = (1.0L - static_cast<long double>(delta)) * pairs;
    // decimal deltas land a hair off integer targets; snap before the ceiling
    const long double nearest = std::round(required);
    if (std::abs(required - nearest) <= 1e-9L * static_cast<long double>(pairs))
        required = nearest;
    const long double up = std::ceil(required);
    return up <= 0.0L ? 0 : static_cast<std::uint64_t>(up);
}

double lemma1_success_bound(std::uint32_t n, std::uint32_t k, std::uint32_t i, double d) {
    if (k == 0 || k > n) throw std::invalid_argument("lemma1_success_bound: need 1 <= k <= n");
    if (i >= k) throw std::invalid_argument("lemma1_success_bound: need i < k");
    if (!(d >= 0.0 && d <= 0.5))
        throw std::invalid_argument("lemma1_success_bound: d must be in [0, 1/2]");
    if (i == 0) return 1.0;
    const std::uint64_t t = dense_edge_threshold(i, d);
    const double tail = binomial_tail(i, t);
    const double candidates = static_cast<double>(n / k);
    // 1 - (1 - tail)^candidates, stable for tiny tails
    return -std::expm1(candidates * std::log1p(-tail));
}

double predicted_edges_lower_bound(std::uint32_t n, std::uint32_t k) {
    const auto deltas = delta_schedule(n, k);
    double sum = 0.0;
    for (std::uint32_t i = 0; i < k; ++i) sum += (1.0 - deltas[i]) * static_cast<double>(i);
    return sum;
}

namespace {

double schedule_integrand(double x) {
    return (1.0 + x) * inverse_entropy(1.0 - 1.0 / (1.0 + x));
}

double simpson(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

constexpr int kMaxDepth = 60;
constexpr int kMinDepth = 10;  // the Richardson estimate is optimistic near 0

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = schedule_integrand(lm), frm = schedule_integrand(rm);
    const double left = simpson(fa, flm, fm, a, m);
    const double right = simpson(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    const bool deep_enough = depth <= kMaxDepth - kMinDepth;
    if (depth <= 0 || (deep_enough && std::abs(delta) <= 15.0 * tol))
        return left + right + delta / 15.0;
    return adaptive_simpson(a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

}  // namespace

double density_integral(double alpha, double tol) {
    if (!(alpha >= 0.0)) throw std::invalid_argument("density_integral: alpha must be >= 0");
    if (!(tol > 0.0)) throw std::invalid_argument("density_integral: tol must be > 0");
    if (alpha == 0.0) return 0.0;
    const double fa = 0.0;  // H^{-1}(0) = 0
    const double fm = schedule_integrand(alpha / 2.0);
    const double fb = schedule_integrand(alpha);
    const double whole = simpson(fa, fm, fb, 0.0, alpha);
    return adaptive_simpson(0.0, alpha, fa, fm, fb, whole, tol, kMaxDepth);
}

DensityPrediction predicted_density(std::uint32_t n, std::uint32_t k) {
    const double lm = std::log2(schedule_scale_m(n, k));
    const double pairs = static_cast<double>(k) * (k - 1) / 2.0;
    if (k < 2 || static_cast<double>(k) <= lm) return {1.0, 1.0};
    const double discrete = predicted_edges_lower_bound(n, k) / pairs;
    const double alpha = static_cast<double>(k - 1) / lm - 1.0;
    const double integral_form =
        alpha <= 0.0 ? 1.0 : 1.0 - lm * lm / pairs * density_integral(alpha, 1e-8);
    return {discrete, integral_form};
}

std::uint32_t clique_number_estimate(std::uint64_t n) {
    if (n < 4) throw std::invalid_argument("clique_number_estimate: n must be >= 4");
    const double ln = std::log2(static_cast<double>(n));
    const double v = 2.0 * ln - 2.0 * std::log2(ln) - 1.0;
    return static_cast<std::uint32_t>(std::ceil(v));
}

double expected_dense_subgraph_count(std::uint32_t n, std::uint32_t k, double delta) {
    if (k < 2 || k > n) throw std::invalid_argument("expected_dense_subgraph_count: need 2 <= k <= n");
    if (!(delta >= 0.0 && delta <= 0.5))
        throw std::invalid_argument("expected_dense_subgraph_count: delta must be in [0, 1/2]");
    const std::uint64_t pairs = std::uint64_t{k} * (k - 1) / 2;
    const std::uint64_t t = dense_edge_threshold(pairs, delta);

    if (pairs <= 400) {
        // exact: log2( C(n,k) * sum_{j=t}^{pairs} C(pairs, j) ) - pairs
        mpz_t choose, sum, term;
        mpz_init(choose);
        mpz_init(sum);
        mpz_init(term);
        mpz_bin_uiui(choose, n, k);
        for (std::uint64_t j = t; j <= pairs; ++j) {
            mpz_bin_uiui(term, static_cast<unsigned long>(pairs), static_cast<unsigned long>(j));
            mpz_add(sum, sum, term);
        }
        mpz_mul(sum, sum, choose);
        const double out = mpz_log2(sum) - static_cast<double>(pairs);
        mpz_clear(choose);
        mpz_clear(sum);
        mpz_clear(term);
        return out;
    }
    mpz_t choose;
    mpz_init(choose);
    mpz_bin_uiui(choose, n, k);
    const double log2_choose = mpz_log2(choose);
    mpz_clear(choose);
    return log2_choose + log2_binomial_tail(pairs, t);
}

SizeThreshold size_threshold(double delta, std::uint64_t n) {
    if (!(delta >= 0.0 && delta < 0.5))
        throw std::invalid_argument("size_threshold: delta must be in [0, 1/2) (threshold degenerates)");
    if (n < 2) throw std::invalid_argument("size_threshold: n must be >= 2");
    const double coeff = 2.0 / (1.0 - entropy(delta));
    const double size =
        (2.0 * std::log2(static_cast<double>(n)) + 2.0 * std::log2(std::exp(1.0))) /
            (1.0 - entropy(delta)) +
        1.0;
    return {size, coeff};
}

double gap_ratio(double delta) { return size_threshold(delta, 2).coefficient / 2.0; }

BoundReport make_bound_report(std::uint32_t n, std::uint32_t k, double delta, double tol) {
    BoundReport r;
    r.n = n;
    r.k = k;
    r.delta = delta;
    r.m = schedule_scale_m(n, k);
    r.delta_schedule = delta_schedule(n, k);
    r.predicted_edges = predicted_edges_lower_bound(n, k);
    const double lm = std::log2(r.m);
    r.alpha = k >= 1 ? static_cast<double>(k - 1) / lm - 1.0 : 0.0;
    r.integral_value = r.alpha > 0.0 ? density_integral(r.alpha, tol) : 0.0;
    const auto pred = predicted_density(n, k);
    r.predicted_density_discrete = pred.discrete;
    r.predicted_density_integral = pred.integral_form;
    const auto st = size_threshold(delta, n);
    r.size_threshold = st.size;
    r.threshold_coefficient = st.coefficient;
    r.gap_ratio = st.coefficient / 2.0;
    r.expected_count_log2 = k >= 2 ? expected_dense_subgraph_count(n, k, delta) : 0.0;
    return r;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::string bound_report_json(const BoundReport& r) {
    std::ostringstream out;
    out << "{\"n\":" << r.n << ",\"k\":" << r.k << ",\"delta\":" << format_double(r.delta)
        << ",\"m\":" << format_double(r.m) << ",\"delta_schedule\":[";
    for (std::size_t i = 0; i < r.delta_schedule.size(); ++i) {
        if (i) out << ',';
        out << format_double(r.delta_schedule[i]);
    }
    out << "],\"predicted_edges\":" << format_double(r.predicted_edges)
        << ",\"predicted_density_discrete\":" << format_double(r.predicted_density_discrete)
        << ",\"predicted_density_integral\":" << format_double(r.predicted_density_integral)
        << ",\"alpha\":" << format_double(r.alpha)
        << ",\"integral_value\":" << format_double(r.integral_value)
        << ",\"size_threshold\":" << format_double(r.size_threshold)
        << ",\"threshold_coefficient\":" << format_double(r.threshold_coefficient)
        << ",\"gap_ratio\":" << format_double(r.gap_ratio)
        << ",\"expected_count_log2\":" << format_double(r.expected_count_log2) << '}';
    return out.str();
}

std::string bound_report_text(const BoundReport& r) {
    std::ostringstream out;
    auto line = [&](const char* name, const std::string& value) {
        out << name;
        for (std::size_t i = std::string(name).size(); i < 28; ++i) out << ' ';
        out << value << '\n';
    };
    line("n", std::to_string(r.n));
    line("k", std::to_string(r.k));
    line("delta", format_double(r.delta));
    line("m", format_double(r.m));
    std::ostringstream sched;
    for (std::size_t i = 0; i < r.delta_schedule.size(); ++i) {
        if (i) sched << ' ';
        sched << format_double(r.delta_schedule[i]);
    }
    line("delta_schedule", sched.str());
    line("predicted_edges", format_double(r.predicted_edges));
    line("predicted_density_discrete", format_double(r.predicted_density_discrete));
    line("predicted_density_integral", format_double(r.predicted_density_integral));
    line("alpha", format_double(r.alpha));
    line("integral_value", format_double(r.integral_value));
    line("size_threshold", format_double(r.size_threshold));
    line("threshold_coefficient", format_double(r.threshold_coefficient));
    line("gap_ratio", format_double(r.gap_ratio));
    line("expected_count_log2", format_double(r.expected_count_log2));
    return out.str();
}

}  // namespace gnpdense
