#pragma once

#include "moran/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <type_traits>
#include <vector>

namespace moran {

/// Dense univariate polynomial in z with exact rational coefficients.
/// Index k holds the coefficient of z^k. Trailing zeros are always stripped,
/// so the zero polynomial has an empty coefficient list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    Polynomial(std::initializer_list<Rational> coeffs);

    /// c·z^k
    static Polynomial monomial(const Rational& c, std::size_t k);

    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of z^k; zero beyond the degree.
    Rational operator[](std::size_t k) const;

    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    bool is_zero() const { return coeffs_.empty(); }

    /// Horner evaluation in any numeric type constructible from double.
    template <typename T>
    T evaluate(const T& z) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void strip();
    std::vector<Rational> coeffs_;
};

/// Exact convolution product.
Polynomial poly_mul(const Polynomial& a, const Polynomial& b);

/// num/den as a formal power series, normalized so that den(0) == 1.
/// No common-factor cancellation is ever attempted.
class RationalGF {
public:
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    friend RationalGF gf_from_fraction(const Polynomial& num, const Polynomial& den);

private:
    RationalGF(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {}
    Polynomial num_;
    Polynomial den_;
};

/// Throws std::invalid_argument when den(0) == 0.
RationalGF gf_from_fraction(const Polynomial& num, const Polynomial& den);

/// [z^n] of the series, via a_n = num_n - sum_{k>=1} den_k a_{n-k}.
Rational gf_coeff(const RationalGF& gf, std::size_t n);

/// [a_0, ..., a_N] in one sweep of the recurrence.
std::vector<Rational> gf_coeffs_upto(const RationalGF& gf, std::size_t N);

/// Floating-point run of the same recurrence. Returns a_n·scale^n, n = 0..N.
/// Choosing scale near the dominant singularity keeps every entry O(1) for
/// long series where the raw coefficients would under- or overflow.
std::vector<double> gf_coeffs_upto_float(const RationalGF& gf, std::size_t N, double scale = 1.0);

/// Nonzero coefficient c·z^k given as sign(c) and log|c|, so that factors
/// like p^{H+1} can be stated without ever forming them.
struct LogTerm {
    std::size_t k;
    int sign;
    double log_abs;
};

/// The floating-point recurrence on sparse terms; den must hold z^0 with
/// coefficient 1 (log_abs 0, sign +1). Returns a_n·scale^n, n = 0..N.
std::vector<double> series_coeffs_float(const std::vector<LogTerm>& num, const std::vector<LogTerm>& den,
                                        std::size_t N, double scale = 1.0);

/// a_n·scale^n in floating point.
double gf_coeff_float(const RationalGF& gf, std::size_t n, double scale = 1.0);

template <typename T>
T Polynomial::evaluate(const T& z) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        T c;
        if constexpr (std::is_same_v<T, Rational>) {
            c = *it;
        } else if constexpr (std::is_same_v<T, double>) {
            c = to_double(*it);
        } else {
            c = T(it->get_num().get_str()) / T(it->get_den().get_str());
        }
        acc = acc * z + c;
    }
    return acc;
}

}  // namespace moran
