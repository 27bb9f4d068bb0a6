#include "moran/rational_gf.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace moran {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { strip(); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Polynomial(std::move(v));
}

Rational Polynomial::operator[](std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

std::optional<std::size_t> Polynomial::degree() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

void Polynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] + b[k];
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a[k] - b[k];
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    std::vector<Rational> out(a.coeffs_);
    for (auto& x : out) x *= c;
    return Polynomial(std::move(out));
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b) { return a * b; }

RationalGF gf_from_fraction(const Polynomial& num, const Polynomial& den) {
    if (den[0] == 0) {
        throw std::invalid_argument("denominator has zero constant term; no power series at 0");
    }
    if (den[0] == 1) return RationalGF(num, den);
    Rational inv = 1 / den[0];
    return RationalGF(inv * num, inv * den);
}

namespace {

struct Term {
    std::size_t k;
    mpz_class c;
};

// Integer form of the recurrence. With b_n = s·t^n·a_n, where t is chosen so
// that every den_k·t^k and num_k·t^k (k >= 1) is integral and s clears the
// numerator denominators, b_n = s·num_n·t^n - sum den_k·t^k·b_{n-k} stays in
// Z. Only nonzero denominator terms are visited.
class ScaledRecurrence {
public:
    explicit ScaledRecurrence(const RationalGF& gf) {
        t_ = 1;
        auto absorb = [this](const Rational& c, std::size_t k) {
            if (c == 0 || k == 0) return;
            const mpz_class& d = c.get_den();
            mpz_class root;
            bool exact = mpz_root(root.get_mpz_t(), d.get_mpz_t(), k) != 0;
            mpz_lcm(t_.get_mpz_t(), t_.get_mpz_t(), exact ? root.get_mpz_t() : d.get_mpz_t());
        };
        const auto& den = gf.den().coeffs();
        const auto& num = gf.num().coeffs();
        for (std::size_t k = 1; k < den.size(); ++k) absorb(den[k], k);
        for (std::size_t k = 1; k < num.size(); ++k) absorb(num[k], k);

        s_ = 1;
        for (const auto& c : num) {
            if (c != 0) mpz_lcm(s_.get_mpz_t(), s_.get_mpz_t(), c.get_den_mpz_t());
        }

        mpz_class tk = 1;
        for (std::size_t k = 0; k < std::max(den.size(), num.size()); ++k) {
            if (k >= 1 && k < den.size() && den[k] != 0) {
                Rational v = den[k] * Rational(tk);
                den_terms_.push_back({k, v.get_num()});
            }
            if (k < num.size() && num[k] != 0) {
                Rational v = num[k] * Rational(tk * s_);
                num_terms_.push_back({k, v.get_num()});
            }
            tk *= t_;
        }
    }

    std::vector<mpz_class> run(std::size_t N) const {
        std::vector<mpz_class> b(N + 1);
        std::size_t next_num = 0;
        for (std::size_t n = 0; n <= N; ++n) {
            mpz_class& acc = b[n];
            if (next_num < num_terms_.size() && num_terms_[next_num].k == n) {
                acc = num_terms_[next_num].c;
                ++next_num;
            }
            for (const auto& term : den_terms_) {
                if (term.k > n) break;
                mpz_submul(acc.get_mpz_t(), term.c.get_mpz_t(), b[n - term.k].get_mpz_t());
            }
        }
        return b;
    }

    Rational unscale(const mpz_class& b, std::size_t n) const {
        mpz_class scale;
        mpz_pow_ui(scale.get_mpz_t(), t_.get_mpz_t(), n);
        scale *= s_;
        Rational r(b, scale);
        r.canonicalize();
        return r;
    }

private:
    mpz_class t_;
    mpz_class s_;
    std::vector<Term> den_terms_;
    std::vector<Term> num_terms_;
};

}  // namespace

Rational gf_coeff(const RationalGF& gf, std::size_t n) {
    ScaledRecurrence rec(gf);
    auto b = rec.run(n);
    return rec.unscale(b[n], n);
}

std::vector<Rational> gf_coeffs_upto(const RationalGF& gf, std::size_t N) {
    ScaledRecurrence rec(gf);
    auto b = rec.run(N);
    std::vector<Rational> out;
    out.reserve(N + 1);
    for (std::size_t n = 0; n <= N; ++n) out.push_back(rec.unscale(b[n], n));
    return out;
}

namespace {

std::vector<LogTerm> log_terms(const Polynomial& poly) {
    std::vector<LogTerm> out;
    const auto& c = poly.coeffs();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] != 0) out.push_back({k, sgn(c[k]), log_abs(c[k])});
    }
    return out;
}

}  // namespace

std::vector<double> series_coeffs_float(const std::vector<LogTerm>& num, const std::vector<LogTerm>& den,
                                        std::size_t N, double scale) {
    if (!(scale > 0.0)) throw std::invalid_argument("scale must be positive");
    auto lead = std::find_if(den.begin(), den.end(), [](const LogTerm& t) { return t.k == 0; });
    if (lead == den.end() || lead->sign == 0) throw std::invalid_argument("denominator has zero constant term");
    const double log_scale = std::log(scale);
    // c·scale^k/den_0, formed in log space so that p^{H+1} cannot underflow
    // before the scale compensates
    auto scaled = [&](const LogTerm& t) {
        const double mag = std::exp(t.log_abs - lead->log_abs + static_cast<double>(t.k) * log_scale);
        return t.sign * lead->sign < 0 ? -mag : mag;
    };
    std::vector<std::pair<std::size_t, double>> d;
    for (const auto& t : den) {
        if (t.k > 0 && t.sign != 0) d.emplace_back(t.k, scaled(t));
    }
    std::sort(d.begin(), d.end());
    std::vector<double> b(N + 1, 0.0);
    for (const auto& t : num) {
        if (t.k <= N && t.sign != 0) b[t.k] += scaled(t);
    }
    for (std::size_t n = 0; n <= N; ++n) {
        double acc = b[n];
        for (const auto& [k, c] : d) {
            if (k > n) break;
            acc -= c * b[n - k];
        }
        b[n] = acc;
    }
    return b;
}

std::vector<double> gf_coeffs_upto_float(const RationalGF& gf, std::size_t N, double scale) {
    return series_coeffs_float(log_terms(gf.num()), log_terms(gf.den()), N, scale);
}

double gf_coeff_float(const RationalGF& gf, std::size_t n, double scale) {
    return gf_coeffs_upto_float(gf, n, scale)[n];
}

}  // namespace moran
