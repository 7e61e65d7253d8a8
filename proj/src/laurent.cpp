#include "qreal/laurent.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "qreal/errors.hpp"

namespace qreal {

LaurentPolynomial::LaurentPolynomial(long constant) : LaurentPolynomial(Rational(constant)) {}

LaurentPolynomial::LaurentPolynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

LaurentPolynomial::LaurentPolynomial(int valuation, std::vector<Rational> coeffs)
    : valuation_(valuation), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPolynomial LaurentPolynomial::monomial(const Rational& coeff, int exponent) {
    return LaurentPolynomial(exponent, {coeff});
}

LaurentPolynomial LaurentPolynomial::from_ints(std::initializer_list<long> ascending) {
    std::vector<Rational> coeffs;
    coeffs.reserve(ascending.size());
    for (long c : ascending) coeffs.emplace_back(c);
    return LaurentPolynomial(0, std::move(coeffs));
}

void LaurentPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) valuation_ = 0;
}

Rational LaurentPolynomial::coefficient(int exponent) const {
    if (exponent < valuation_ || exponent > degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exponent - valuation_)];
}

bool LaurentPolynomial::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

bool LaurentPolynomial::is_palindromic() const {
    return std::equal(coeffs_.begin(), coeffs_.end(), coeffs_.rbegin());
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
    LaurentPolynomial out = *this;
    if (!out.is_zero()) out.valuation_ += k;
    return out;
}

LaurentPolynomial LaurentPolynomial::scaled(const Rational& factor) const {
    if (factor == 0) return {};
    LaurentPolynomial out = *this;
    for (auto& c : out.coeffs_) c *= factor;
    return out;
}

LaurentPolynomial LaurentPolynomial::inverted_variable() const {
    if (is_zero()) return {};
    std::vector<Rational> rev(coeffs_.rbegin(), coeffs_.rend());
    return LaurentPolynomial(-degree(), std::move(rev));
}

LaurentPolynomial LaurentPolynomial::derivative() const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out.push_back(coeffs_[i] * (valuation_ + static_cast<int>(i)));
    }
    return LaurentPolynomial(valuation_ - 1, std::move(out));
}

LaurentPolynomial LaurentPolynomial::taylor_shift(const Rational& a) const {
    if (is_zero()) return {};
    if (valuation_ < 0) throw InvalidInput("taylor_shift needs an ordinary polynomial");
    // Dense ascending coefficients from exponent 0, then synthetic Horner passes.
    std::vector<Rational> dense(static_cast<std::size_t>(degree() + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) dense[valuation_ + i] = coeffs_[i];
    const std::size_t n = dense.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = n - 1; j > i; --j) dense[j - 1] += a * dense[j];
    }
    return LaurentPolynomial(0, std::move(dense));
}

LaurentPolynomial LaurentPolynomial::reversed() const {
    if (is_zero()) return {};
    if (valuation_ < 0) throw InvalidInput("reversed needs an ordinary polynomial");
    std::vector<Rational> dense(static_cast<std::size_t>(degree() + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) dense[valuation_ + i] = coeffs_[i];
    std::reverse(dense.begin(), dense.end());
    return LaurentPolynomial(0, std::move(dense));
}

Rational LaurentPolynomial::evaluate(const Rational& at) const {
    if (is_zero()) return 0;
    if (at == 0) {
        if (valuation_ < 0) throw InvalidInput("evaluating a pole at 0");
        return coefficient(0);
    }
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    if (valuation_ != 0) {
        Rational power = 1;
        const Rational base = valuation_ > 0 ? at : Rational(1) / at;
        for (int i = 0; i < std::abs(valuation_); ++i) power *= base;
        acc *= power;
    }
    return acc;
}

Rational LaurentPolynomial::content() const {
    if (is_zero()) return 0;
    Integer g = 0;
    Integer l = 1;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational out(g, l);
    out.canonicalize();
    return out;
}

LaurentPolynomial LaurentPolynomial::primitive_part() const {
    if (is_zero()) return {};
    Rational factor = 1 / content();
    if (leading_coefficient() < 0) factor = -factor;
    return scaled(factor);
}

LaurentPolynomial LaurentPolynomial::operator-() const { return scaled(-1); }

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    const int lo = std::min(valuation_, other.valuation_);
    const int hi = std::max(degree(), other.degree());
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[valuation_ - lo + i] += coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[other.valuation_ - lo + i] += other.coeffs_[i];
    valuation_ = lo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& other) { return *this += -other; }

LaurentPolynomial& LaurentPolynomial::operator*=(const LaurentPolynomial& other) { return *this = *this * other; }

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return LaurentPolynomial(a.valuation_ + b.valuation_, std::move(out));
}

std::string format_term(const Rational& coeff, int exponent, const std::string& var, bool first,
                        bool compact) {
    std::string out;
    Rational mag = abs(coeff);
    if (coeff < 0) {
        out += first ? "-" : (compact ? "-" : " - ");
    } else if (!first) {
        out += compact ? "+" : " + ";
    }
    const bool unit = mag == 1;
    if (exponent == 0 || !unit) {
        if (is_integer(mag) || exponent == 0) {
            out += mag.get_str();
        } else {
            out += "(" + mag.get_str() + ")";
        }
    }
    if (exponent != 0) {
        out += var;
        if (exponent != 1) out += "^" + std::to_string(exponent);
    }
    return out;
}

std::string LaurentPolynomial::to_string(bool compact, const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out += format_term(coeffs_[i], valuation_ + static_cast<int>(i), var, out.empty(), compact);
    }
    return out;
}

PolyDivision divmod(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (b.is_zero()) throw InvalidInput("polynomial division by zero");
    if (a.valuation() < 0 || b.valuation() < 0) {
        throw InvalidInput("polynomial division needs ordinary polynomials");
    }
    if (a.is_zero() || a.degree() < b.degree()) return {LaurentPolynomial(), a};
    const int db = b.degree();
    std::vector<Rational> rem(static_cast<std::size_t>(a.degree() + 1));
    for (int e = a.valuation(); e <= a.degree(); ++e) rem[e] = a.coefficient(e);
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db + 1));
    const Rational& lead = b.leading_coefficient();
    for (int k = a.degree(); k >= db; --k) {
        if (rem[k] == 0) continue;
        Rational f = rem[k] / lead;
        quo[k - db] = f;
        for (int e = b.valuation(); e <= db; ++e) rem[k - db + e] -= f * b.coefficient(e);
    }
    return {LaurentPolynomial(0, std::move(quo)), LaurentPolynomial(0, std::move(rem))};
}

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial x = a;
    LaurentPolynomial y = b;
    while (!y.is_zero()) {
        LaurentPolynomial r = divmod(x, y).remainder;
        // Keep intermediate coefficients small.
        if (!r.is_zero()) r = r.primitive_part();
        x = std::move(y);
        y = std::move(r);
    }
    if (x.is_zero()) return x;
    return x.scaled(1 / x.leading_coefficient());
}

std::optional<LaurentPolynomial> exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

}  // namespace qreal
