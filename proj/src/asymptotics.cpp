#include "moran/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <type_traits>
#include <utility>
#include <vector>

namespace moran {

namespace {

template <typename Real>
Real to_real(const Rational& r) {
    if constexpr (std::is_same_v<Real, double>) {
        return to_double(r);
    } else {
        return Real(r.get_num().get_str()) / Real(r.get_den().get_str());
    }
}

template <typename Real>
Real ipow(Real base, std::size_t e) {
    Real result(1);
    while (e > 0) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return result;
}

template <typename Real>
Real abs_of(const Real& x) {
    return x < 0 ? Real(-x) : x;
}

template <typename Real>
Real newton_step_tolerance() {
    if constexpr (std::is_same_v<Real, double>) {
        return 1e-13;
    } else {
        return std::numeric_limits<Real>::epsilon() * 64;
    }
}

// Nonzero terms of the bounded denominator, converted once.
template <typename Real>
class BoundedDenominator {
public:
    BoundedDenominator(const ModelParams& params, std::size_t H) {
        const RationalGF gf = bounded_gf(params, H);
        const auto& coeffs = gf.den().coeffs();
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            if (coeffs[k] != 0) terms_.emplace_back(k, to_real<Real>(coeffs[k]));
        }
    }

    Real operator()(const Real& z) const {
        Real acc(0);
        for (const auto& [k, c] : terms_) acc += c * ipow(z, k);
        return acc;
    }

    Real derivative(const Real& z) const {
        Real acc(0);
        for (const auto& [k, c] : terms_) {
            if (k == 0) continue;
            acc += c * Real(static_cast<unsigned long>(k)) * ipow(z, k - 1);
        }
        return acc;
    }

private:
    std::vector<std::pair<std::size_t, Real>> terms_;
};

double correction_constant(const ModelParams& params) {
    const BinetData b = binet_roots(params);
    return params.q_double() / b.sqrt_disc;
}

}  // namespace

template <typename Real>
Real epsilon_first(const ModelParams& params) {
    using std::sqrt;
    const Real p = to_real<Real>(params.p());
    const Real q = to_real<Real>(params.q());
    return (-p + sqrt(p * (p + 4 * q))) / (2 * p * q);
}

template <typename Real>
Real epsilon_refined(const ModelParams& params, std::size_t H) {
    using std::sqrt;
    const Real p = to_real<Real>(params.p());
    const Real q = to_real<Real>(params.q());
    const Real eps = epsilon_first<Real>(params);
    const Real sqrt_disc = sqrt(p * (p + 4 * q));
    return eps + q / (p * sqrt_disc) * ipow(Real(p * eps), H + 2);
}

template <typename Real>
Real den_root_numeric(const ModelParams& params, std::size_t H) {
    const BoundedDenominator<Real> den(params, H);
    const Real eps = epsilon_first<Real>(params);

    // den > 0 on (0, ε], and den(1) = q(q + p^{H+1}) > 0.
    Real lo(1);
    Real hi = 2 * eps;
    if (!(den(lo) > 0)) throw RegimeViolation("bounded denominator is not positive at z = 1");
    if (!(den(hi) < 0)) {
        // Two positive zeros may both sit below 2ε; find the first sign change.
        constexpr int kGrid = 1024;
        const Real upper = 4 * eps;
        const Real step = (upper - lo) / kGrid;
        bool found = false;
        Real prev = lo;
        for (int i = 1; i <= kGrid; ++i) {
            Real x = lo + step * i;
            if (!(den(x) > 0)) {
                lo = prev;
                hi = x;
                found = true;
                break;
            }
            prev = x;
        }
        if (!found) {
            throw RegimeViolation("no sign change of the bounded denominator in [1, 4*epsilon] for H = " +
                                  std::to_string(H));
        }
    }

    while (hi - lo > Real(1e-12) * hi) {
        Real mid = (lo + hi) / 2;
        if (den(mid) > 0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    const Real tol = newton_step_tolerance<Real>();
    Real x = (lo + hi) / 2;
    for (int iter = 0; iter < 100; ++iter) {
        const Real fx = den(x);
        if (fx == 0) break;
        if (fx > 0) {
            lo = x;
        } else {
            hi = x;
        }
        const Real step = fx / den.derivative(x);
        Real next = x - step;
        if (!(next > lo && next < hi)) next = (lo + hi) / 2;
        const Real moved = abs_of(Real(next - x));
        x = next;
        if (moved <= tol * x) break;
    }

    if (abs_of(den(x)) > Real(1e-12)) {
        throw RegimeViolation("root polish did not reach the residual tolerance for H = " + std::to_string(H));
    }
    return x;
}

template <typename Real>
BootstrapEstimate<Real> bootstrap_estimate(const ModelParams& params, std::size_t H) {
    const BoundedDenominator<Real> den(params, H);
    BootstrapEstimate<Real> est{H, epsilon_first<Real>(params), epsilon_refined<Real>(params, H),
                                den_root_numeric<Real>(params, H), Real(0)};
    est.residual = den(est.numeric_root);
    return est;
}

template double epsilon_first<double>(const ModelParams&);
template double epsilon_refined<double>(const ModelParams&, std::size_t);
template double den_root_numeric<double>(const ModelParams&, std::size_t);
template BootstrapEstimate<double> bootstrap_estimate<double>(const ModelParams&, std::size_t);
template HighPrecision epsilon_first<HighPrecision>(const ModelParams&);
template HighPrecision epsilon_refined<HighPrecision>(const ModelParams&, std::size_t);
template HighPrecision den_root_numeric<HighPrecision>(const ModelParams&, std::size_t);
template BootstrapEstimate<HighPrecision> bootstrap_estimate<HighPrecision>(const ModelParams&, std::size_t);

double coeff_asymptotic_unbounded(const ModelParams& params, std::size_t n) {
    const BinetData b = binet_roots(params);
    return std::pow(b.lambda_plus, static_cast<double>(n + 1)) / b.sqrt_disc;
}

double coeff_asymptotic_unbounded_root_form(const ModelParams& params, std::size_t n) {
    const double p = params.p_double();
    const double q = params.q_double();
    const double eps = epsilon_first(params);
    return std::pow(eps, -static_cast<double>(n + 1)) / (p * (1.0 + 2.0 * eps * q));
}

double coeff_asymptotic_bounded(const ModelParams& params, std::size_t n, std::size_t H) {
    const double p = params.p_double();
    const double q = params.q_double();
    const double eps = epsilon_first(params);
    const double a = correction_constant(params) * std::pow(p * eps, static_cast<double>(H + 1));
    const double base = 1.0 - a;
    if (!(base > 0.0)) {
        throw RegimeViolation("1 - c(p*eps)^(H+1) <= 0: H = " + std::to_string(H) +
                              " is too small for the bounded asymptotic");
    }
    return std::pow(eps, -static_cast<double>(n + 1)) / (p * (1.0 + 2.0 * eps * q)) *
           std::exp(static_cast<double>(n) * std::log1p(-a));
}

double tail_approx(const ModelParams& params, std::size_t n, std::size_t H, TailVariant variant) {
    const double p = params.p_double();
    double a = 0.0;
    switch (variant) {
        case TailVariant::PaperConstants:
            a = std::pow(p, (static_cast<double>(H) + 2.0) / 2.0) / 2.0;
            break;
        case TailVariant::CorrectedConstants:
            a = correction_constant(params) * std::pow(p * epsilon_first(params), static_cast<double>(H + 1));
            break;
    }
    if (!(a >= 0.0 && a < 1.0)) {
        throw RegimeViolation("tail base 1 - a is outside (0, 1] for H = " + std::to_string(H));
    }
    return -std::expm1(static_cast<double>(n) * std::log1p(-a));
}

double tail_exponential(const ModelParams& params, std::size_t n, std::size_t H) {
    const double p = params.p_double();
    return -std::expm1(-static_cast<double>(n) * std::pow(p, 1.0 + static_cast<double>(H) / 2.0) / 2.0);
}

double mean_height_sum(const ModelParams& params, std::size_t n, TailVariant variant) {
    if (n == 0) throw std::invalid_argument("walk length n must be at least 1");
    const double p = params.p_double();
    const auto floor_h =
        static_cast<std::size_t>(std::ceil(4.0 * std::log(static_cast<double>(n)) / std::log(1.0 / p)));
    double sum = 0.0;
    for (std::size_t H = 0;; ++H) {
        const double term = variant == TailVariant::PaperConstants ? tail_exponential(params, n, H)
                                                                   : tail_approx(params, n, H, variant);
        sum += term;
        if (H >= floor_h && term < 1e-15) break;
    }
    return sum;
}

MellinParams mellin_params(const ModelParams& params, std::size_t n, TailVariant variant) {
    const double p = params.p_double();
    const double nd = static_cast<double>(n);
    switch (variant) {
        case TailVariant::PaperConstants:
            return {p * nd / 2.0, std::sqrt(p)};
        case TailVariant::CorrectedConstants:
            return {nd * correction_constant(params), p * epsilon_first(params)};
    }
    throw std::logic_error("unknown tail variant");
}

namespace {

void check(const MellinParams& mp) {
    if (!(mp.N > 0.0)) throw std::invalid_argument("Mellin parameter N must be positive");
    if (!(mp.omega > 0.0 && mp.omega < 1.0)) throw std::invalid_argument("Mellin parameter omega must lie in (0, 1)");
}

}  // namespace

double mellin_direct_sum(const MellinParams& mp) {
    check(mp);
    double sum = 0.0;
    for (int H = 1;; ++H) {
        const double x = mp.N * std::pow(mp.omega, H);
        if (x > 40.0) {
            // 1 - exp(-x) differs from 1 by less than 1e-17
            sum += 1.0;
            continue;
        }
        const double term = -std::expm1(-x);
        sum += term;
        if (term < 1e-16) break;
    }
    return sum;
}

double mellin_main_term(const MellinParams& mp) {
    check(mp);
    const double log_omega = std::log(mp.omega);
    return -std::log(mp.N) / log_omega - 0.5 - MellinParams::euler_gamma / log_omega;
}

}  // namespace moran
