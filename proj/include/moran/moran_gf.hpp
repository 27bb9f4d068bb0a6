#pragma once

#include "moran/rational.hpp"
#include "moran/rational_gf.hpp"

#include <cstddef>

namespace moran {

/// Up-step probability p and reset probability q = 1 - p, both exact.
class ModelParams {
public:
    /// Throws std::invalid_argument unless 0 < p < 1.
    explicit ModelParams(Rational p);

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    double p_double() const { return to_double(p_); }
    double q_double() const { return to_double(q_); }

private:
    Rational p_;
    Rational q_;
};

/// Characteristic roots of lambda^2 - p·lambda - pq = 0, the bases of the
/// closed form for [z^n] 1/(1 - pz - pqz^2).
struct BinetData {
    double lambda_plus;
    double lambda_minus;
    double sqrt_disc;  // sqrt(p(p + 4q))
};

/// One sojourn: a run of k >= 1 up-steps closed by a reset, pqz^2/(1 - pz).
RationalGF sojourn_gf(const ModelParams& params);

/// Walks made of sojourns followed by a final run of up-steps,
/// 1/(1 - pz - pqz^2). No reset is ever taken from height 0.
RationalGF unbounded_gf(const ModelParams& params);

/// Same walk class restricted to heights <= H:
/// (1 - p^{H+1}z^{H+1}) / (1 - pz - pqz^2 + q p^{H+1} z^{H+2}).
RationalGF bounded_gf(const ModelParams& params, std::size_t H);

BinetData binet_roots(const ModelParams& params);

/// (lambda_+^{n+1} - lambda_-^{n+1}) / sqrt(p(p+4q))
double binet_coeff(const ModelParams& params, std::size_t n);

}  // namespace moran
