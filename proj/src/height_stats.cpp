#include "moran/height_stats.hpp"

#include "parallel.hpp"

#include <cmath>
#include <stdexcept>

namespace moran {

namespace {

void require_positive_length(std::size_t n) {
    if (n == 0) throw std::invalid_argument("walk length n must be at least 1");
}

// Dominant singularity of the unbounded series; used as the rescaling
// point of the float recurrence so that coefficients stay O(1).
double float_scale(const ModelParams& params) {
    const double p = params.p_double();
    const double q = params.q_double();
    return (-p + std::sqrt(p * (p + 4.0 * q))) / (2.0 * p * q);
}

// [z^n] of the bounded series times scale^n, from its four denominator and two
// numerator terms directly; building the dense rational polynomial costs
// O(H) allocations per call.
double bounded_coeff_float(const ModelParams& params, std::size_t H, std::size_t n, double scale) {
    const double log_p = log_abs(params.p());
    const double log_q = log_abs(params.q());
    const double log_p_h1 = static_cast<double>(H + 1) * log_p;
    const std::vector<LogTerm> num{{0, 1, 0.0}, {H + 1, -1, log_p_h1}};
    const std::vector<LogTerm> den{{0, 1, 0.0}, {1, -1, log_p}, {2, -1, log_p + log_q}, {H + 2, 1, log_q + log_p_h1}};
    return series_coeffs_float(num, den, n, scale)[n];
}

}  // namespace

EvalMode default_mode(std::size_t n) {
    return n <= kExactModeLimit ? EvalMode::Exact : EvalMode::Float;
}

Rational height_cdf(const ModelParams& params, std::size_t n, std::size_t H) {
    require_positive_length(n);
    Rational total = gf_coeff(unbounded_gf(params), n);
    return gf_coeff(bounded_gf(params, H), n) / total;
}

double height_cdf_float(const ModelParams& params, std::size_t n, std::size_t H) {
    require_positive_length(n);
    const double scale = float_scale(params);
    return bounded_coeff_float(params, H, n, scale) / gf_coeff_float(unbounded_gf(params), n, scale);
}

std::vector<Rational> height_cdf_table(const ModelParams& params, std::size_t n) {
    require_positive_length(n);
    const Rational total = gf_coeff(unbounded_gf(params), n);
    std::vector<Rational> cdf(n + 1);
    detail::parallel_for(n + 1, [&](std::size_t H) {
        cdf[H] = gf_coeff(bounded_gf(params, H), n) / total;
    });
    return cdf;
}

std::vector<double> height_cdf_table_float(const ModelParams& params, std::size_t n) {
    require_positive_length(n);
    const double scale = float_scale(params);
    const double total = gf_coeff_float(unbounded_gf(params), n, scale);
    std::vector<double> cdf(n + 1);
    detail::parallel_for(n + 1, [&](std::size_t H) {
        cdf[H] = bounded_coeff_float(params, H, n, scale) / total;
    });
    return cdf;
}

std::vector<Rational> HeightDistribution::cdf() const {
    std::vector<Rational> out(pmf.size());
    Rational acc(0);
    for (std::size_t h = 0; h < pmf.size(); ++h) {
        acc += pmf[h];
        out[h] = acc;
    }
    return out;
}

Rational HeightDistribution::mean() const {
    Rational m(0);
    for (std::size_t h = 1; h < pmf.size(); ++h) m += Rational(static_cast<unsigned long>(h)) * pmf[h];
    return m;
}

Rational HeightDistribution::variance() const {
    Rational second(0);
    for (std::size_t h = 1; h < pmf.size(); ++h) {
        Rational hr(static_cast<unsigned long>(h));
        second += hr * hr * pmf[h];
    }
    Rational m = mean();
    return second - m * m;
}

double HeightDistributionFloat::mean() const {
    double m = 0.0;
    for (std::size_t H = 0; H < n; ++H) m += 1.0 - cdf[H];
    return m;
}

double HeightDistributionFloat::variance() const {
    // E[H^2] = sum_{H>=0} (2H+1) P(H_n > H)
    double second = 0.0;
    for (std::size_t H = 0; H < n; ++H) second += (2.0 * static_cast<double>(H) + 1.0) * (1.0 - cdf[H]);
    double m = mean();
    return second - m * m;
}

HeightDistribution height_pmf(const ModelParams& params, std::size_t n) {
    auto cdf = height_cdf_table(params, n);
    std::vector<Rational> pmf(n + 1);
    pmf[0] = cdf[0];
    for (std::size_t h = 1; h <= n; ++h) pmf[h] = cdf[h] - cdf[h - 1];
    return {params, n, std::move(pmf)};
}

HeightDistributionFloat height_pmf_float(const ModelParams& params, std::size_t n) {
    auto cdf = height_cdf_table_float(params, n);
    std::vector<double> pmf(n + 1);
    pmf[0] = cdf[0];
    for (std::size_t h = 1; h <= n; ++h) pmf[h] = cdf[h] - cdf[h - 1];
    return {params, n, std::move(pmf), std::move(cdf)};
}

Polynomial height_pgf_polynomial(const ModelParams& params, std::size_t n) {
    return Polynomial(height_pmf(params, n).pmf);
}

Rational height_pgf(const HeightDistribution& dist, const Rational& u) {
    return Polynomial(dist.pmf).evaluate(u);
}

double height_pgf(const HeightDistributionFloat& dist, double u) {
    double acc = 0.0;
    for (auto it = dist.pmf.rbegin(); it != dist.pmf.rend(); ++it) acc = acc * u + *it;
    return acc;
}

Rational height_pgf(const ModelParams& params, std::size_t n, const Rational& u) {
    return height_pgf(height_pmf(params, n), u);
}

Rational height_mean(const ModelParams& params, std::size_t n) {
    auto cdf = height_cdf_table(params, n);
    Rational m(0);
    for (std::size_t H = 0; H < n; ++H) m += 1 - cdf[H];
    return m;
}

Rational height_variance(const ModelParams& params, std::size_t n) {
    return height_pmf(params, n).variance();
}

double height_mean_float(const ModelParams& params, std::size_t n) {
    return height_pmf_float(params, n).mean();
}

double height_variance_float(const ModelParams& params, std::size_t n) {
    return height_pmf_float(params, n).variance();
}

}  // namespace moran
