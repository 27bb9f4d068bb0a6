#include "moran/oracle.hpp"

#include "moran/errors.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace moran {

namespace {

// Weights scaled by d^t after t steps, where p = a/d: an up-step multiplies
// by a and a reset by d - a, so every state weight is an integer.
struct IntegerSteps {
    mpz_class up;
    mpz_class reset;
    mpz_class denom;

    explicit IntegerSteps(const ModelParams& params)
        : up(params.p().get_num()), reset(params.p().get_den() - params.p().get_num()), denom(params.p().get_den()) {}
};

mpz_class dp_scaled_weight(const IntegerSteps& steps, std::size_t n, std::size_t H, WalkModel model) {
    const std::size_t top = std::min(H, n);
    std::vector<mpz_class> cur(top + 1);
    std::vector<mpz_class> next(top + 1);
    cur[0] = 1;
    for (std::size_t t = 0; t < n; ++t) {
        for (auto& x : next) x = 0;
        const std::size_t reach = std::min(t, top);
        for (std::size_t h = 0; h <= reach; ++h) {
            if (cur[h] == 0) continue;
            if (h + 1 <= top) mpz_addmul(next[h + 1].get_mpz_t(), steps.up.get_mpz_t(), cur[h].get_mpz_t());
            if (h > 0 || model == WalkModel::Standard) {
                mpz_addmul(next[0].get_mpz_t(), steps.reset.get_mpz_t(), cur[h].get_mpz_t());
            }
        }
        std::swap(cur, next);
    }
    mpz_class total = 0;
    for (const auto& x : cur) total += x;
    return total;
}

Rational unscale(const IntegerSteps& steps, const mpz_class& w, std::size_t n) {
    mpz_class d;
    mpz_pow_ui(d.get_mpz_t(), steps.denom.get_mpz_t(), n);
    Rational r(w, d);
    r.canonicalize();
    return r;
}

}  // namespace

Rational dp_bounded_weight(const ModelParams& params, std::size_t n, std::size_t H, WalkModel model) {
    IntegerSteps steps(params);
    return unscale(steps, dp_scaled_weight(steps, n, H, model), n);
}

Rational dp_total_weight(const ModelParams& params, std::size_t n, WalkModel model) {
    return dp_bounded_weight(params, n, n, model);
}

Rational dp_cdf(const ModelParams& params, std::size_t n, std::size_t H, WalkModel model) {
    IntegerSteps steps(params);
    mpz_class bounded = dp_scaled_weight(steps, n, H, model);
    mpz_class total = dp_scaled_weight(steps, n, n, model);
    Rational r(bounded, total);
    r.canonicalize();
    return r;
}

double dp_tail_float(const ModelParams& params, std::size_t n, std::size_t H, WalkModel model) {
    if (H >= n) return 0.0;
    const double p = params.p_double();
    const double q = params.q_double();
    const bool reset_at_zero = model == WalkModel::Standard;

    std::vector<double> below(H + 1, 0.0), below_next(H + 1);
    std::vector<double> above(n + 1, 0.0), above_next(n + 1);
    below[0] = 1.0;
    for (std::size_t t = 0; t < n; ++t) {
        std::fill(below_next.begin(), below_next.end(), 0.0);
        std::fill(above_next.begin(), above_next.end(), 0.0);
        for (std::size_t h = 0; h <= std::min(t, H); ++h) {
            const double w = below[h];
            if (w == 0.0) continue;
            if (h + 1 <= H) {
                below_next[h + 1] += p * w;
            } else {
                above_next[h + 1] += p * w;
            }
            if (h > 0 || reset_at_zero) below_next[0] += q * w;
        }
        for (std::size_t h = 0; h <= t; ++h) {
            const double w = above[h];
            if (w == 0.0) continue;
            above_next[h + 1] += p * w;
            if (h > 0 || reset_at_zero) above_next[0] += q * w;
        }
        const double total = std::accumulate(below_next.begin(), below_next.end(), 0.0) +
                             std::accumulate(above_next.begin(), above_next.end(), 0.0);
        for (auto& x : below_next) x /= total;
        for (auto& x : above_next) x /= total;
        std::swap(below, below_next);
        std::swap(above, above_next);
    }
    const double b = std::accumulate(below.begin(), below.end(), 0.0);
    const double a = std::accumulate(above.begin(), above.end(), 0.0);
    return a / (a + b);
}

std::vector<DpValue> dp_cdf_table(const ModelParams& params, std::size_t n, WalkModel model,
                                  std::size_t exact_limit) {
    std::vector<DpValue> table(n + 1);
    if (n <= exact_limit) {
        IntegerSteps steps(params);
        const mpz_class total = dp_scaled_weight(steps, n, n, model);
        detail::parallel_for(n + 1, [&](std::size_t H) {
            Rational r(dp_scaled_weight(steps, n, H, model), total);
            r.canonicalize();
            table[H] = {to_double(r), r};
        });
        return table;
    }
    bool negligible = false;
    for (std::size_t H = 0; H <= n; ++H) {
        if (negligible) {
            table[H] = {1.0, std::nullopt};
            continue;
        }
        const double tail = dp_tail_float(params, n, H, model);
        table[H] = {1.0 - tail, std::nullopt};
        negligible = tail < 1e-18;
    }
    return table;
}

double dp_mean(const ModelParams& params, std::size_t n, WalkModel model, std::size_t exact_limit) {
    auto table = dp_cdf_table(params, n, model, exact_limit);
    if (table.front().exact) {
        Rational m(0);
        for (std::size_t H = 0; H < n; ++H) m += 1 - *table[H].exact;
        return to_double(m);
    }
    double m = 0.0;
    for (std::size_t H = 0; H < n; ++H) m += 1.0 - table[H].value;
    return m;
}

std::vector<Rational> enumerate_walks(const ModelParams& params, std::size_t n, WalkModel model) {
    if (n > 20) throw std::invalid_argument("enumerate_walks supports n <= 20, got " + std::to_string(n));
    std::vector<Rational> p_pow(n + 1), q_pow(n + 1);
    p_pow[0] = q_pow[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        p_pow[k] = p_pow[k - 1] * params.p();
        q_pow[k] = q_pow[k - 1] * params.q();
    }
    std::vector<Rational> hist(n + 1);
    const std::uint32_t words = 1u << n;
    for (std::uint32_t word = 0; word < words; ++word) {
        std::size_t h = 0;
        std::size_t max_h = 0;
        std::size_t ups = 0;
        bool valid = true;
        for (std::size_t step = 0; step < n; ++step) {
            if ((word >> step) & 1u) {
                ++h;
                ++ups;
                max_h = std::max(max_h, h);
            } else {
                if (h == 0 && model == WalkModel::Restricted) {
                    valid = false;
                    break;
                }
                h = 0;
            }
        }
        if (valid) hist[max_h] += p_pow[ups] * q_pow[n - ups];
    }
    return hist;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

// up_prob[r]: probability of an up-step from height >= 1 with r steps left,
// conditioned on the walk never resetting at height 0. With W0(r), W1(r) the
// continuation weights from height 0 and from height >= 1, the ratio
// rho_r = W0(r)/W1(r) obeys rho_r = p/(p + q·rho_{r-1}), rho_0 = 1, and equals
// that probability.
std::vector<double> conditioned_up_probabilities(const ModelParams& params, std::size_t n) {
    const double p = params.p_double();
    const double q = params.q_double();
    std::vector<double> rho(n + 1);
    rho[0] = 1.0;
    for (std::size_t r = 1; r <= n; ++r) rho[r] = p / (p + q * rho[r - 1]);
    return rho;
}

struct ChunkResult {
    std::vector<std::uint64_t> histogram;
    std::uint64_t rejections = 0;
};

}  // namespace

SimulationResult simulate(const ModelParams& params, std::size_t n, std::size_t trials, std::uint64_t seed,
                          WalkModel model, const SimulationOptions& options) {
    if (trials == 0) throw std::invalid_argument("trials must be at least 1");
    if (options.chunk_size == 0) throw std::invalid_argument("chunk_size must be at least 1");

    const double p = params.p_double();
    const bool conditioned = model == WalkModel::Restricted && options.sampler == RestrictedSampler::Conditioned;
    const bool rejection = model == WalkModel::Restricted && options.sampler == RestrictedSampler::Rejection;
    const std::vector<double> up_prob = conditioned ? conditioned_up_probabilities(params, n) : std::vector<double>{};

    const std::size_t chunks = (trials + options.chunk_size - 1) / options.chunk_size;
    std::vector<ChunkResult> results(chunks);

    detail::parallel_for(chunks, [&](std::size_t c) {
        const std::size_t begin = c * options.chunk_size;
        const std::size_t count = std::min(options.chunk_size, trials - begin);
        std::mt19937_64 gen(derive_seed(seed, c));
        ChunkResult& out = results[c];
        out.histogram.assign(n + 1, 0);

        for (std::size_t i = 0; i < count; ++i) {
            std::size_t max_h = 0;
            for (;;) {
                std::size_t h = 0;
                max_h = 0;
                bool valid = true;
                for (std::size_t t = 0; t < n; ++t) {
                    bool up;
                    if (conditioned) {
                        up = h == 0 || uniform01(gen) < up_prob[n - t];
                    } else {
                        up = uniform01(gen) < p;
                    }
                    if (up) {
                        ++h;
                        max_h = std::max(max_h, h);
                    } else {
                        if (h == 0 && rejection) {
                            valid = false;
                            break;
                        }
                        h = 0;
                    }
                }
                if (valid) break;
                if (++out.rejections > options.max_rejections) {
                    throw RegimeViolation("rejection sampling exceeded " + std::to_string(options.max_rejections) +
                                          " rejected walks; use the conditioned sampler");
                }
            }
            ++out.histogram[max_h];
        }
    });

    SimulationResult result{model, params, n, trials, seed, std::vector<std::uint64_t>(n + 1, 0), 0.0, 0.0, 0};
    for (const auto& chunk : results) {
        for (std::size_t h = 0; h <= n; ++h) result.histogram[h] += chunk.histogram[h];
        result.rejections += chunk.rejections;
    }
    if (result.rejections > options.max_rejections) {
        throw RegimeViolation("rejection sampling exceeded " + std::to_string(options.max_rejections) +
                              " rejected walks; use the conditioned sampler");
    }

    long double s1 = 0.0L;
    long double s2 = 0.0L;
    for (std::size_t h = 0; h <= n; ++h) {
        const long double c = static_cast<long double>(result.histogram[h]);
        const long double hl = static_cast<long double>(h);
        s1 += c * hl;
        s2 += c * hl * hl;
    }
    const long double t = static_cast<long double>(trials);
    result.mean = static_cast<double>(s1 / t);
    result.variance = trials > 1 ? static_cast<double>((s2 - s1 * s1 / t) / (t - 1.0L)) : 0.0;
    return result;
}

}  // namespace moran
