#include "moran/rational.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace moran {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class parse_integer(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) {
        throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
    }
    mpz_class v(std::string(s), 10);
    return negative ? mpz_class(-v) : v;
}

mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

Rational parse_decimal(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_part = s.substr(e + 1);
        s = s.substr(0, e);
        mpz_class ev = parse_integer(exp_part);
        if (!ev.fits_slong_p() || abs(ev) > 100000) {
            throw std::invalid_argument("exponent out of range in '" + std::string(text) + "'");
        }
        exponent = ev.get_si();
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
        throw std::invalid_argument("not a number: '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
    long scale = static_cast<long>(frac_part.size()) - exponent;
    Rational r;
    if (scale >= 0) {
        r = Rational(mantissa, pow10(static_cast<unsigned long>(scale)));
    } else {
        r = Rational(mantissa * pow10(static_cast<unsigned long>(-scale)));
    }
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

}  // namespace

Rational make_rational(long num, long den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = parse_integer(text.substr(0, slash));
        std::string_view den_text = text.substr(slash + 1);
        if (!den_text.empty() && den_text.front() == '+') den_text.remove_prefix(1);
        if (!all_digits(den_text)) {
            throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
        }
        mpz_class den(std::string(den_text), 10);
        if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    return parse_decimal(text);
}

std::string to_string(const Rational& r) { return r.get_str(10); }

// Truncates toward zero (mpq_get_d semantics).
double to_double(const Rational& r) { return r.get_d(); }

double log_abs(const Rational& r) {
    if (r == 0) throw std::domain_error("log of zero");
    long num_exp = 0;
    long den_exp = 0;
    double num_m = mpz_get_d_2exp(&num_exp, r.get_num_mpz_t());
    double den_m = mpz_get_d_2exp(&den_exp, r.get_den_mpz_t());
    return std::log(std::fabs(num_m)) - std::log(den_m) +
           static_cast<double>(num_exp - den_exp) * std::numbers::ln2;
}

Rational pow(const Rational& base, unsigned long exp) {
    Rational result(1);
    mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exp);
    mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exp);
    result.canonicalize();
    return result;
}

}  // namespace moran
