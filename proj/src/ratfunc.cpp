#include "qreal/ratfunc.hpp"

#include <algorithm>

#include "qreal/errors.hpp"

namespace qreal {

RationalFunctionQ::RationalFunctionQ(const LaurentPolynomial& p) : RationalFunctionQ(p, LaurentPolynomial(1)) {}

RationalFunctionQ::RationalFunctionQ(const LaurentPolynomial& num, const LaurentPolynomial& den) {
    if (den.is_zero()) throw InvalidInput("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPolynomial();
        den_ = LaurentPolynomial(1);
        return;
    }
    // Clear negative exponents, then cancel the gcd over Q.
    const int lift = -std::min({num.valuation(), den.valuation(), 0});
    LaurentPolynomial n = num.shifted(lift);
    LaurentPolynomial d = den.shifted(lift);
    const int common_valuation = std::min(n.valuation(), d.valuation());
    n = n.shifted(-common_valuation);
    d = d.shifted(-common_valuation);
    const LaurentPolynomial g = gcd(n, d);
    if (g.degree() > 0) {
        n = divmod(n, g).quotient;
        d = divmod(d, g).quotient;
    }
    // Integer coefficients with no content shared across numerator and denominator.
    Integer l = 1;
    for (const auto* p : {&n, &d}) {
        for (const auto& c : p->coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    n = n.scaled(Rational(l));
    d = d.scaled(Rational(l));
    Integer content = 0;
    for (const auto* p : {&n, &d}) {
        for (const auto& c : p->coeffs()) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
    }
    Rational factor(1, content);
    if (d.lowest_coefficient() < 0) factor = -factor;
    num_ = n.scaled(factor);
    den_ = d.scaled(factor);
}

std::optional<Rational> RationalFunctionQ::evaluate(const Rational& at) const {
    const Rational d = den_.evaluate(at);
    if (d == 0) return std::nullopt;
    return num_.evaluate(at) / d;
}

RationalFunctionQ RationalFunctionQ::inverse() const {
    if (is_zero()) throw InvalidInput("inverse of the zero rational function");
    return RationalFunctionQ(den_, num_);
}

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return RationalFunctionQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) { return a + (-b); }

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return RationalFunctionQ(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) { return a * b.inverse(); }

std::string RationalFunctionQ::to_string() const {
    if (den_ == LaurentPolynomial(1)) return num_.to_string(true);
    auto wrap = [](const LaurentPolynomial& p) {
        const std::string text = p.to_string(true);
        return p.is_monomial() && p.lowest_coefficient() > 0 ? text : "(" + text + ")";
    };
    std::string num = num_.is_monomial() ? num_.to_string(true) : "(" + num_.to_string(true) + ")";
    return num + "/" + wrap(den_);
}

TruncatedLaurentSeries expand(const RationalFunctionQ& f, int order) {
    return expand_quotient(f.numerator(), f.denominator(), order);
}

}  // namespace qreal
