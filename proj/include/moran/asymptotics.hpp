#pragma once

#include "moran/errors.hpp"
#include "moran/moran_gf.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <numbers>

namespace moran {

/// 100 significant decimal digits; used where bootstrap corrections fall
/// below double resolution.
using HighPrecision = boost::multiprecision::cpp_bin_float_100;

/// Which constants the tail approximation uses.
///  PaperConstants:     c·(pε)^{H+1} replaced by the closed form p^{(H+2)/2}/2.
///  CorrectedConstants: c = q/sqrt(p(p+4q)) and pε taken from the true root.
enum class TailVariant { PaperConstants, CorrectedConstants };

template <typename Real>
struct BootstrapEstimate {
    std::size_t H;
    Real epsilon_first;    // smallest zero of 1 - pz - pqz^2
    Real epsilon_refined;  // one bootstrap step toward the bounded root
    Real numeric_root;     // smallest positive zero of the bounded denominator
    Real residual;         // den(numeric_root)
};

/// Smallest positive zero of 1 - pz - pqz^2, (-p + sqrt(p(p+4q)))/(2pq) = 1/lambda_+.
template <typename Real = double>
Real epsilon_first(const ModelParams& params);

/// ε + q/(p·sqrt(p(p+4q)))·(pε)^{H+2}
template <typename Real = double>
Real epsilon_refined(const ModelParams& params, std::size_t H);

/// Smallest positive zero of 1 - pz - pqz^2 + q p^{H+1} z^{H+2}: bisection on a
/// bracket inside [1, 4ε], then Newton polish. Throws RegimeViolation when no
/// sign change exists there or the residual exceeds 1e-12.
template <typename Real = double>
Real den_root_numeric(const ModelParams& params, std::size_t H);

template <typename Real = double>
BootstrapEstimate<Real> bootstrap_estimate(const ModelParams& params, std::size_t H);

/// First Binet term lambda_+^{n+1}/sqrt(p(p+4q)).
double coeff_asymptotic_unbounded(const ModelParams& params, std::size_t n);

/// The same term written through the root: ε^{-(n+1)}/(p(1 + 2εq)).
double coeff_asymptotic_unbounded_root_form(const ModelParams& params, std::size_t n);

/// ε^{-(n+1)}/(p(1+2εq)) · (1 - c(pε)^{H+1})^n, c = q/sqrt(p(p+4q)).
double coeff_asymptotic_bounded(const ModelParams& params, std::size_t n, std::size_t H);

/// Approximation of P(H_n > H): 1 - (1 - a)^n, with a chosen by variant.
double tail_approx(const ModelParams& params, std::size_t n, std::size_t H, TailVariant variant);

/// 1 - exp(-n·p^{1+H/2}/2)
double tail_exponential(const ModelParams& params, std::size_t n, std::size_t H);

/// sum_{H>=0} of tail_exponential (PaperConstants) or tail_approx (corrected), cut at
/// the first H past ceil(4 log n / log(1/p)) whose term is below 1e-15.
double mean_height_sum(const ModelParams& params, std::size_t n, TailVariant variant);

struct MellinParams {
    double N;
    double omega;
    static constexpr double euler_gamma = std::numbers::egamma_v<double>;
};

/// PaperConstants:     N = pn/2, omega = sqrt(p).
/// CorrectedConstants: N = n·c,  omega = pε, the exact exponential form of
///                     the corrected tail sum.
MellinParams mellin_params(const ModelParams& params, std::size_t n, TailVariant variant);

/// sum_{H>=1} (1 - exp(-N·omega^H)), stopped once a term drops below 1e-16.
double mellin_direct_sum(const MellinParams& mp);

/// Residue at s = 0: -log N/log omega - 1/2 - gamma/log omega.
double mellin_main_term(const MellinParams& mp);

}  // namespace moran
