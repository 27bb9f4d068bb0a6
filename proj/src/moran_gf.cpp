#include "moran/moran_gf.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace moran {

ModelParams::ModelParams(Rational p) : p_(std::move(p)), q_(1 - p_) {
    if (!(p_ > 0 && p_ < 1)) {
        throw std::invalid_argument("p must lie strictly between 0 and 1, got " + to_string(p_));
    }
}

RationalGF sojourn_gf(const ModelParams& params) {
    const Rational& p = params.p();
    const Rational& q = params.q();
    return gf_from_fraction(Polynomial::monomial(p * q, 2), Polynomial{1, -p});
}

RationalGF unbounded_gf(const ModelParams& params) {
    const Rational& p = params.p();
    const Rational& q = params.q();
    return gf_from_fraction(Polynomial{1}, Polynomial{1, -p, -p * q});
}

RationalGF bounded_gf(const ModelParams& params, std::size_t H) {
    const Rational& p = params.p();
    const Rational& q = params.q();
    const Rational p_h1 = pow(p, H + 1);
    // filled in place: the generic polynomial operators would make several
    // passes over H + 3 mostly-zero coefficients
    std::vector<Rational> num(H + 2);
    num[0] = 1;
    num[H + 1] = -p_h1;
    std::vector<Rational> den(H + 3);
    den[0] = 1;
    den[1] = -p;
    den[2] = -p * q;
    den[H + 2] += q * p_h1;  // H = 0 lands on the z^2 term
    return gf_from_fraction(Polynomial(std::move(num)), Polynomial(std::move(den)));
}

BinetData binet_roots(const ModelParams& params) {
    const double p = params.p_double();
    const double q = params.q_double();
    const double sqrt_disc = std::sqrt(p * (p + 4.0 * q));
    return {(p + sqrt_disc) / 2.0, (p - sqrt_disc) / 2.0, sqrt_disc};
}

double binet_coeff(const ModelParams& params, std::size_t n) {
    const BinetData b = binet_roots(params);
    const double e = static_cast<double>(n + 1);
    return (std::pow(b.lambda_plus, e) - std::pow(b.lambda_minus, e)) / b.sqrt_disc;
}

}  // namespace moran
