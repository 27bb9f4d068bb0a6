#pragma once

#include "moran/moran_gf.hpp"
#include "moran/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace moran {

/// Restricted: a reset may not be taken at height 0; the class enumerated by
///             the sojourn decomposition.
/// Standard:   at height 0 a reset keeps the walker at 0 (probability q).
enum class WalkModel { Restricted, Standard };

/// Total weight of n-step walks of the model whose heights stay <= H, by
/// dynamic programming over the height states. Exact.
Rational dp_bounded_weight(const ModelParams& params, std::size_t n, std::size_t H, WalkModel model);

/// dp_bounded_weight with no height bound. Standard returns exactly 1.
Rational dp_total_weight(const ModelParams& params, std::size_t n, WalkModel model);

/// P(H_n <= H) normalized over the model's walks: bounded / total weight.
Rational dp_cdf(const ModelParams& params, std::size_t n, std::size_t H, WalkModel model);

/// P(H_n > H) in floating point. Walks that have exceeded H are carried in a
/// separate state vector, so small tails are not lost to cancellation, and
/// all weights are renormalized every step.
double dp_tail_float(const ModelParams& params, std::size_t n, std::size_t H, WalkModel model);

struct DpValue {
    double value;
    std::optional<Rational> exact;  // present iff evaluated exactly
};

/// Exact evaluation for n <= exact_limit, floating point above.
inline constexpr std::size_t kDpExactLimit = 500;

/// P(H_n <= H) for H = 0..n. Float entries stop being evaluated once the
/// tail drops below 1e-18 (they are 1 to double precision from there on).
std::vector<DpValue> dp_cdf_table(const ModelParams& params, std::size_t n, WalkModel model,
                                  std::size_t exact_limit = kDpExactLimit);

/// sum_H P(H_n > H) from the DP table.
double dp_mean(const ModelParams& params, std::size_t n, WalkModel model,
               std::size_t exact_limit = kDpExactLimit);

/// Exhaustive walk over all 2^n step words. Entry h is the total weight of
/// model-valid words of height h. Throws std::invalid_argument for n > 20.
std::vector<Rational> enumerate_walks(const ModelParams& params, std::size_t n, WalkModel model);

/// How restricted walks are sampled.
///  Rejection:   run the unconstrained step process, discard walks that try
///               to reset at height 0. Acceptance rate is [z^n]F, which decays
///               geometrically in n.
///  Conditioned: sample the same conditional law step by step, with up-step
///               probabilities derived from the remaining-length weights.
enum class RestrictedSampler { Rejection, Conditioned };

struct SimulationOptions {
    RestrictedSampler sampler = RestrictedSampler::Conditioned;
    /// Trials per chunk. Part of the determinism contract: chunk i uses a
    /// sub-seed derived from (seed, i) only.
    std::size_t chunk_size = 8192;
    /// Rejection sampling gives up beyond this many rejected walks.
    std::uint64_t max_rejections = 1'000'000'000;
};

struct SimulationResult {
    WalkModel model;
    ModelParams params;
    std::size_t n;
    std::size_t trials;
    std::uint64_t seed;
    std::vector<std::uint64_t> histogram;  // counts by height 0..n
    double mean;
    double variance;        // unbiased sample variance; 0 for one trial
    std::uint64_t rejections;
};

SimulationResult simulate(const ModelParams& params, std::size_t n, std::size_t trials, std::uint64_t seed,
                          WalkModel model, const SimulationOptions& options = {});

/// SplitMix64 finalizer applied to seed + (index+1)·golden gamma.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace moran
