#pragma once

#include "moran/moran_gf.hpp"
#include "moran/rational.hpp"
#include "moran/rational_gf.hpp"

#include <cstddef>
#include <vector>

namespace moran {

// Height H_n of an n-step walk in the restricted class, under the law
//
//     P(H_n <= H) = [z^n] F_{<=H}(z) / [z^n] F(z)
//
// with F the unbounded and F_{<=H} the bounded generating function.

enum class EvalMode { Exact, Float };

/// Largest n evaluated exactly by default.
inline constexpr std::size_t kExactModeLimit = 2000;

/// Exact for n <= kExactModeLimit, floating point above.
EvalMode default_mode(std::size_t n);

struct HeightDistribution {
    ModelParams params;
    std::size_t n;
    std::vector<Rational> pmf;  // pmf[h] = P(H_n = h), h = 0..n

    std::vector<Rational> cdf() const;
    Rational mean() const;      // sum h·pmf[h]
    Rational variance() const;  // sum h^2·pmf[h] - mean^2
};

struct HeightDistributionFloat {
    ModelParams params;
    std::size_t n;
    std::vector<double> pmf;
    std::vector<double> cdf;  // cdf[H] computed directly, not as prefix sums

    double mean() const;      // sum of tails 1 - cdf[H], H < n
    double variance() const;
};

/// P(H_n <= H). Throws std::invalid_argument for n == 0.
Rational height_cdf(const ModelParams& params, std::size_t n, std::size_t H);
double height_cdf_float(const ModelParams& params, std::size_t n, std::size_t H);

/// [P(H_n <= 0), ..., P(H_n <= n)]; the H values are evaluated in parallel.
std::vector<Rational> height_cdf_table(const ModelParams& params, std::size_t n);
std::vector<double> height_cdf_table_float(const ModelParams& params, std::size_t n);

HeightDistribution height_pmf(const ModelParams& params, std::size_t n);
HeightDistributionFloat height_pmf_float(const ModelParams& params, std::size_t n);

/// The PGF E[u^{H_n}] as a polynomial in u (coefficient h is pmf[h]).
Polynomial height_pgf_polynomial(const ModelParams& params, std::size_t n);

Rational height_pgf(const HeightDistribution& dist, const Rational& u);
double height_pgf(const HeightDistributionFloat& dist, double u);
Rational height_pgf(const ModelParams& params, std::size_t n, const Rational& u);

/// E[H_n] through the tail sum sum_{H=0}^{n-1} P(H_n > H).
Rational height_mean(const ModelParams& params, std::size_t n);
Rational height_variance(const ModelParams& params, std::size_t n);

double height_mean_float(const ModelParams& params, std::size_t n);
double height_variance_float(const ModelParams& params, std::size_t n);

}  // namespace moran
