#include "qreal/cfstream.hpp"

#include <algorithm>
#include <utility>

#include "qreal/errors.hpp"

namespace qreal {

CFStream CFStream::from_rational(const Rational& x) {
    CFStream s;
    if (x < 0) s.shift_ = qreal::ceil(-x).get_si();
    Rational value = x + s.shift_;
    for (;;) {
        const Integer a = qreal::floor(value);
        s.terms_.push_back(a);
        value -= a;
        if (value == 0) break;
        value = 1 / value;
    }
    return s;
}

CFStream CFStream::from_terms(std::vector<Integer> head, std::vector<Integer> period) {
    if (head.empty() && period.empty()) throw InvalidInput("empty continued fraction");
    CFStream s;
    s.terms_ = std::move(head);
    s.period_ = std::move(period);
    s.finite_ = s.period_.empty();
    if (s.terms_.empty()) {
        s.terms_.push_back(s.period_.front());
        std::rotate(s.period_.begin(), s.period_.begin() + 1, s.period_.end());
    }
    if (s.terms_.front() < 0) {
        s.shift_ = Integer(-s.terms_.front()).get_si();
        s.terms_.front() = 0;
    }
    auto positive = [](const Integer& a) { return a >= 1; };
    if (!std::all_of(s.terms_.begin() + 1, s.terms_.end(), positive) ||
        !std::all_of(s.period_.begin(), s.period_.end(), positive)) {
        throw InvalidInput("partial quotients after the first must be >= 1");
    }
    return s;
}

CFStream CFStream::from_algebraic(AlgebraicNumber alpha) {
    if (alpha.is_rational() || alpha.degree() < 2) {
        throw InvalidInput("rational input: use the rational expansion instead");
    }
    CFStream s;
    s.finite_ = false;
    const Integer fl = alpha.floor_value();
    if (alpha.is_rational()) throw InvalidInput("rational input: use the rational expansion instead");
    if (fl < 0) s.shift_ = Integer(-fl).get_si();
    const Rational m(s.shift_);
    AlgebraicState st{alpha.polynomial().taylor_shift(-m).primitive_part(), alpha.lo() + m, alpha.hi() + m};
    s.quotient_polys_.push_back(st.poly);
    s.algebraic_ = std::move(st);
    return s;
}

bool CFStream::ensure(std::size_t n) {
    while (terms_.size() < n) {
        if (algebraic_) {
            extend_algebraic();
        } else if (!period_.empty()) {
            terms_.insert(terms_.end(), period_.begin(), period_.end());
        } else {
            return false;
        }
    }
    return true;
}

const Integer& CFStream::term(std::size_t i) {
    if (!ensure(i + 1)) throw InvalidInput("continued fraction has only " + std::to_string(terms_.size()) + " terms");
    return terms_[i];
}

void CFStream::extend_algebraic() {
    auto& st = *algebraic_;
    AlgebraicNumber beta(st.poly, st.lo, st.hi);
    const Integer k = beta.floor_value();
    if (beta.is_rational()) {
        throw InvalidInput("complete quotient " + beta.lo().get_str() + " is rational; input was not irrational");
    }
    terms_.push_back(k);
    const Rational kr(k);
    // beta = k + 1/beta' with beta' > 1; beta' is a root of x^d P(k + 1/x).
    LaurentPolynomial next = st.poly.taylor_shift(kr).reversed().primitive_part();
    const Rational lo_gap = beta.lo() - kr;
    const Rational hi_gap = beta.hi() - kr;
    st.lo = 1 / hi_gap;
    st.hi = lo_gap == 0 ? root_bound(next) : 1 / lo_gap;
    st.poly = std::move(next);
    quotient_polys_.push_back(st.poly);
}

}  // namespace qreal
