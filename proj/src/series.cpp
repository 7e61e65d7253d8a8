#include "qreal/series.hpp"

#include <algorithm>
#include <utility>

#include "qreal/errors.hpp"

namespace qreal {

TruncatedLaurentSeries::TruncatedLaurentSeries(int valuation, std::vector<Rational> coeffs, int order)
    : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {
    normalize();
}

TruncatedLaurentSeries TruncatedLaurentSeries::zero(int order) { return TruncatedLaurentSeries(order, {}, order); }

TruncatedLaurentSeries TruncatedLaurentSeries::from_polynomial(const LaurentPolynomial& p, int order) {
    return TruncatedLaurentSeries(p.valuation(), p.coeffs(), order);
}

void TruncatedLaurentSeries::normalize() {
    if (valuation_ >= order_) {
        coeffs_.clear();
    } else if (static_cast<long>(coeffs_.size()) > static_cast<long>(order_) - valuation_) {
        coeffs_.resize(static_cast<std::size_t>(order_ - valuation_));
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<int>(lead);
    }
    if (coeffs_.empty()) valuation_ = order_;
}

Rational TruncatedLaurentSeries::coefficient(int exponent) const {
    if (exponent >= order_) {
        throw InsufficientPrecision("coefficient of q^" + std::to_string(exponent) + " requested from a series exact below q^" +
                                    std::to_string(order_));
    }
    const long idx = static_cast<long>(exponent) - valuation_;
    if (idx < 0 || idx >= static_cast<long>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(idx)];
}

bool TruncatedLaurentSeries::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integer(c); });
}

TruncatedLaurentSeries TruncatedLaurentSeries::truncated(int order) const {
    return TruncatedLaurentSeries(valuation_, coeffs_, std::min(order, order_));
}

TruncatedLaurentSeries TruncatedLaurentSeries::shifted(int k) const {
    return TruncatedLaurentSeries(valuation_ + k, coeffs_, order_ + k);
}

LaurentPolynomial TruncatedLaurentSeries::polynomial_part() const { return LaurentPolynomial(valuation_, coeffs_); }

TruncatedLaurentSeries TruncatedLaurentSeries::operator-() const {
    auto out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

namespace {

TruncatedLaurentSeries add_impl(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b, int sign_b) {
    const int order = std::min(a.order(), b.order());
    const int lo = std::min(a.valuation(), b.valuation());
    if (lo >= order) return TruncatedLaurentSeries::zero(order);
    std::vector<Rational> out(static_cast<std::size_t>(order - lo));
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const int e = a.valuation() + static_cast<int>(i);
        if (e >= order) break;
        out[e - lo] += a.coeffs()[i];
    }
    for (std::size_t i = 0; i < b.coeffs().size(); ++i) {
        const int e = b.valuation() + static_cast<int>(i);
        if (e >= order) break;
        if (sign_b > 0) {
            out[e - lo] += b.coeffs()[i];
        } else {
            out[e - lo] -= b.coeffs()[i];
        }
    }
    return TruncatedLaurentSeries(lo, std::move(out), order);
}

// Long division of a (valuation va) by b (valuation vb, lowest coefficient
// nonzero); produces exponents [start, order). `a_at(e)` and `b_at(j)` read
// coefficients by absolute exponent and offset from vb respectively.
template <typename T, typename AAt, typename BAt>
std::vector<T> long_divide(AAt a_at, BAt b_at, std::size_t b_len, int vb, int start, int order) {
    const int count = order - start;
    std::vector<T> out(static_cast<std::size_t>(std::max(count, 0)));
    const T lead = b_at(0);
    T acc;
    for (int k = 0; k < count; ++k) {
        acc = a_at(start + k + vb);
        const std::size_t jmax = std::min<std::size_t>(static_cast<std::size_t>(k), b_len - 1);
        for (std::size_t j = 1; j <= jmax; ++j) {
            const T& bj = b_at(j);
            if (bj == 0) continue;
            acc -= bj * out[static_cast<std::size_t>(k) - j];
        }
        if constexpr (std::is_same_v<T, Integer>) {
            if (lead == 1) {
                out[k] = acc;
            } else {
                out[k] = -acc;
            }
        } else {
            out[k] = acc / lead;
        }
    }
    return out;
}

}  // namespace

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    return add_impl(a, b, 1);
}

TruncatedLaurentSeries operator-(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    return add_impl(a, b, -1);
}

TruncatedLaurentSeries operator*(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    const int order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
    if (a.is_zero() || b.is_zero()) return TruncatedLaurentSeries::zero(order);
    const int lo = a.valuation() + b.valuation();
    if (lo >= order) return TruncatedLaurentSeries::zero(order);
    const std::size_t len = static_cast<std::size_t>(order - lo);
    std::vector<Rational> out(len);
    for (std::size_t i = 0; i < a.coeffs().size() && i < len; ++i) {
        if (a.coeffs()[i] == 0) continue;
        const std::size_t jmax = std::min(b.coeffs().size(), len - i);
        for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return TruncatedLaurentSeries(lo, std::move(out), order);
}

TruncatedLaurentSeries operator/(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    if (b.is_zero()) {
        throw InsufficientPrecision("division by a series that is zero below q^" + std::to_string(b.order()));
    }
    const int vb = b.valuation();
    const int order = std::min(a.order() - vb, b.order() + a.valuation() - 2 * vb);
    if (a.is_zero()) return TruncatedLaurentSeries::zero(order);
    const int start = a.valuation() - vb;
    auto a_at = [&](int e) -> Rational {
        const long idx = static_cast<long>(e) - a.valuation();
        if (idx < 0 || idx >= static_cast<long>(a.coeffs().size())) return Rational(0);
        return a.coeffs()[static_cast<std::size_t>(idx)];
    };
    const auto& bc = b.coeffs();
    auto b_at = [&](std::size_t j) -> const Rational& { return bc[j]; };
    auto out = long_divide<Rational>(a_at, b_at, bc.size(), vb, start, order);
    return TruncatedLaurentSeries(start, std::move(out), order);
}

TruncatedLaurentSeries operator+(const TruncatedLaurentSeries& a, const LaurentPolynomial& p) {
    return a + TruncatedLaurentSeries::from_polynomial(p, a.order());
}

TruncatedLaurentSeries operator*(const LaurentPolynomial& p, const TruncatedLaurentSeries& a) {
    if (p.is_zero()) return TruncatedLaurentSeries::zero(a.order());
    // p is exact, so only a's order limits the product.
    const int exact_order = std::max(p.degree() + 1, a.order() + p.valuation() - a.valuation());
    return TruncatedLaurentSeries::from_polynomial(p, exact_order) * a;
}

TruncatedLaurentSeries operator/(const TruncatedLaurentSeries& a, const LaurentPolynomial& p) {
    if (p.is_zero()) throw InvalidInput("division by the zero polynomial");
    const int exact_order =
        std::max(p.degree() + 1, a.order() + p.valuation() - a.valuation() + 1);
    return a / TruncatedLaurentSeries::from_polynomial(p, exact_order);
}

std::string TruncatedLaurentSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        out += format_term(coeffs_[i], valuation_ + static_cast<int>(i), "q", out.empty(), false);
    }
    const std::string tail = "O(q^" + std::to_string(order_) + ")";
    return out.empty() ? tail : out + " + " + tail;
}

bool agree(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    return agreement_frontier(a, b) >= std::min(a.order(), b.order());
}

int agreement_frontier(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b) {
    const int order = std::min(a.order(), b.order());
    const int lo = std::min(a.valuation(), b.valuation());
    for (int e = lo; e < order; ++e) {
        if (a.coefficient(e) != b.coefficient(e)) return e;
    }
    return order;
}

TruncatedLaurentSeries series_binop(const TruncatedLaurentSeries& a, const TruncatedLaurentSeries& b, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return a + b;
        case SeriesOp::sub: return a - b;
        case SeriesOp::mul: return a * b;
        case SeriesOp::div: return a / b;
    }
    throw InvalidInput("unknown series operation");
}

TruncatedLaurentSeries series_sqrt(const TruncatedLaurentSeries& s) {
    if (s.is_zero()) {
        throw InsufficientPrecision("square root of a series that is zero below q^" + std::to_string(s.order()));
    }
    if (s.valuation() % 2 != 0) throw NoSeriesSquareRoot("odd valuation " + std::to_string(s.valuation()));
    const Rational& c0 = s.coeffs().front();
    if (c0 < 0 || !mpz_perfect_square_p(c0.get_num_mpz_t()) || !mpz_perfect_square_p(c0.get_den_mpz_t())) {
        throw NoSeriesSquareRoot("leading coefficient " + c0.get_str() + " is not a rational square");
    }
    Integer rn;
    Integer rd;
    mpz_sqrt(rn.get_mpz_t(), c0.get_num_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), c0.get_den_mpz_t());
    const Rational r0(rn, rd);

    const int v = s.valuation() / 2;
    const int order = s.order() - v;
    const std::size_t len = static_cast<std::size_t>(order - v);
    std::vector<Rational> r(len);
    r[0] = r0;
    const Rational twice = 2 * r0;
    for (std::size_t k = 1; k < len; ++k) {
        Rational acc = k < s.coeffs().size() ? s.coeffs()[k] : Rational(0);
        for (std::size_t i = 1; i < k; ++i) acc -= r[i] * r[k - i];
        r[k] = acc / twice;
    }
    return TruncatedLaurentSeries(v, std::move(r), order);
}

TruncatedLaurentSeries expand_quotient(const LaurentPolynomial& num, const LaurentPolynomial& den, int order) {
    if (den.is_zero()) throw InvalidInput("expansion of a quotient with zero denominator");
    if (num.is_zero()) return TruncatedLaurentSeries::zero(order);
    const int vd = den.valuation();
    const int start = num.valuation() - vd;
    if (start >= order) return TruncatedLaurentSeries::zero(order);

    const bool unit_lead = den.lowest_coefficient() == 1 || den.lowest_coefficient() == -1;
    if (unit_lead && num.is_integral() && den.is_integral()) {
        std::vector<Integer> dc;
        dc.reserve(den.coeffs().size());
        for (const auto& c : den.coeffs()) dc.push_back(c.get_num());
        const Integer zero = 0;
        auto a_at = [&](int e) -> Integer {
            const long idx = static_cast<long>(e) - num.valuation();
            if (idx < 0 || idx >= static_cast<long>(num.coeffs().size())) return zero;
            return num.coeffs()[static_cast<std::size_t>(idx)].get_num();
        };
        auto b_at = [&](std::size_t j) -> const Integer& { return dc[j]; };
        auto ints = long_divide<Integer>(a_at, b_at, dc.size(), vd, start, order);
        std::vector<Rational> out;
        out.reserve(ints.size());
        for (auto& c : ints) out.emplace_back(std::move(c));
        return TruncatedLaurentSeries(start, std::move(out), order);
    }
    auto a_at = [&](int e) -> Rational { return num.coefficient(e); };
    const auto& dc = den.coeffs();
    auto b_at = [&](std::size_t j) -> const Rational& { return dc[j]; };
    auto out = long_divide<Rational>(a_at, b_at, dc.size(), vd, start, order);
    return TruncatedLaurentSeries(start, std::move(out), order);
}

}  // namespace qreal
