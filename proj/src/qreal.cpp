#include "qreal/qreal.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <utility>

#include "qreal/errors.hpp"

namespace qreal {

LaurentPolynomial q_integer(long n) {
    if (n < 0) throw InvalidInput("q-integer of a negative number");
    return LaurentPolynomial(0, std::vector<Rational>(static_cast<std::size_t>(n), Rational(1)));
}

std::vector<Integer> cf_even(const Rational& x) {
    if (x < 0) throw InvalidInput("cf_even needs x >= 0");
    std::vector<Integer> terms = CFStream::from_rational(x).prefix();
    if (x == 0) return terms;
    if (terms.size() % 2 == 1) {
        // Euclid's last term is >= 2 unless x is an integer; [n] -> [n-1, 1] covers that case.
        terms.back() -= 1;
        terms.emplace_back(1);
    }
    return terms;
}

RationalFunctionQ q_rational(const Rational& x) {
    if (x < 0) {
        const long m = qreal::ceil(-x).get_si();
        const RationalFunctionQ shifted = q_rational(x + m) - RationalFunctionQ(q_integer(m));
        return shifted * RationalFunctionQ(LaurentPolynomial::monomial(1, -static_cast<int>(m)));
    }
    if (x == 0) return {};
    const auto terms = cf_even(x);
    // Innermost level is [a_2m]_{q^{-1}}; odd positions use q, even use q^{-1}.
    auto level = [&](std::size_t i) {
        const long a = terms[i].get_si();
        const bool odd = i % 2 == 0;  // 1-based position i + 1
        LaurentPolynomial base = q_integer(a);
        if (!odd) base = base.inverted_variable();
        return std::pair{RationalFunctionQ(base), LaurentPolynomial::monomial(1, odd ? static_cast<int>(a) : -static_cast<int>(a))};
    };
    RationalFunctionQ value = level(terms.size() - 1).first;
    for (std::size_t i = terms.size() - 1; i-- > 0;) {
        auto [base, step] = level(i);
        value = base + RationalFunctionQ(step) / value;
    }
    return value;
}

namespace {

// Right-multiplies by T_q^a (a > 0) or by the adjugate power of T_q (a < 0).
QMatrix times_t_power(const QMatrix& m, long a) {
    if (a == 0) return m;
    const LaurentPolynomial qa = LaurentPolynomial::monomial(1, static_cast<int>(std::labs(a)));
    const LaurentPolynomial n = q_integer(std::labs(a));
    if (a > 0) return m * QMatrix(qa, n, 0, 1);
    return m * QMatrix(1, -n, 0, qa);
}

// Walks the convergents of a stream; each value is [x_k + m]_q = b/d of the
// running product evaluated at 0.
class ConvergentWalker {
  public:
    explicit ConvergentWalker(CFStream& stream) : stream_(stream) {}

    /// False when a finite stream is exhausted.
    bool next() {
        if (!stream_.ensure(index_ + 1)) return false;
        const long a = stream_.term(index_).get_si();
        if (index_ > 0) product_ = product_ * QMatrix::s_q();
        product_ = times_t_power(product_, index_ % 2 == 0 ? a : -a).normalized();
        ++index_;
        return true;
    }

    std::size_t consumed() const { return index_; }
    bool at_end() { return stream_.is_finite() && !stream_.ensure(index_ + 1); }

    /// [x_k]_q exact below `order` (after undoing the shift).
    TruncatedLaurentSeries value(int order) const {
        const long m = stream_.shift();
        const int shifted_order = order + static_cast<int>(m);
        TruncatedLaurentSeries s = expand_quotient(product_.b(), product_.d(), shifted_order);
        if (m == 0) return s;
        s = s + (-q_integer(m));
        return s.shifted(-static_cast<int>(m));
    }

  private:
    CFStream& stream_;
    QMatrix product_;
    std::size_t index_ = 0;
};

}  // namespace

TruncatedLaurentSeries q_real(CFStream& stream, int order, const StabilizationOptions& options) {
    return q_real_stabilized(stream, order, options).series;
}

Stabilized q_real_stabilized(CFStream& stream, int order, const StabilizationOptions& options) {
    if (options.margin < 2) throw InvalidInput("stabilization margin must be at least 2");
    ConvergentWalker walker(stream);
    std::deque<TruncatedLaurentSeries> recent;
    while (walker.consumed() < options.budget) {
        if (!walker.next()) break;
        recent.push_back(walker.value(order));
        if (walker.at_end()) return {recent.back(), walker.consumed()};
        if (static_cast<int>(recent.size()) > options.margin) recent.pop_front();
        if (static_cast<int>(recent.size()) == options.margin &&
            std::all_of(recent.begin() + 1, recent.end(), [&](const auto& s) { return s == recent.front(); })) {
            return {recent.back(), walker.consumed()};
        }
    }
    throw StabilizationNotReached("coefficients below q^" + std::to_string(order) + " did not stabilize within " +
                                  std::to_string(options.budget) + " partial quotients");
}

std::vector<TruncatedLaurentSeries> convergent_expansions(CFStream& stream, std::size_t count, int order) {
    ConvergentWalker walker(stream);
    std::vector<TruncatedLaurentSeries> out;
    while (out.size() < count && walker.next()) out.push_back(walker.value(order));
    return out;
}

TruncatedLaurentSeries QuadraticClosedForm::expand(int order) const {
    const int vs = S.valuation();
    const int vr = R.valuation();
    // Enough radicand precision that dividing by S still reaches `order`.
    const int radicand_order = order + vs + vr / 2 + 1;
    const auto root = series_sqrt(TruncatedLaurentSeries::from_polynomial(R, radicand_order));
    return ((root + Q) / S).truncated(order);
}

std::string QuadraticClosedForm::to_string() const {
    return "(" + Q.to_string(true) + "+sqrt(" + R.to_string(true) + "))/(" + S.to_string(true) + ")";
}

namespace {

IntMatrix t_power(const Integer& k) { return IntMatrix{1, k, 0, 1}; }
const IntMatrix kS{0, -1, 1, 0};

IntMatrix adjugate(const IntMatrix& m) { return IntMatrix{m.d, -m.b, -m.c, m.a}; }

// prod_{t=from}^{to-1} T^{(-1)^t a_t} S over 0-based term indices.
IntMatrix word_product(const std::vector<Integer>& terms, std::size_t from, std::size_t to) {
    IntMatrix m;
    for (std::size_t t = from; t < to; ++t) {
        m = m * t_power(t % 2 == 0 ? terms[t] : Integer(-terms[t])) * kS;
    }
    return m;
}

// Divides Q, S by their shared monomial/integer factor and R by its square.
void reduce_closed_form(QuadraticClosedForm& f) {
    int k = std::min(f.S.valuation(), f.R.valuation() / 2);
    if (!f.Q.is_zero()) k = std::min(k, f.Q.valuation());
    f.Q = f.Q.shifted(-k);
    f.S = f.S.shifted(-k);
    f.R = f.R.shifted(-2 * k);
    Integer g = f.S.content().get_num();
    if (!f.Q.is_zero()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), f.Q.content().get_num_mpz_t());
    const Integer rc = f.R.content().get_num();
    for (Integer d = g; d > 1; --d) {
        if (g % d == 0 && rc % (d * d) == 0) {
            const Rational inv(1, d);
            f.Q = f.Q.scaled(inv);
            f.S = f.S.scaled(inv);
            f.R = f.R.scaled(inv * inv);
            break;
        }
    }
}

}  // namespace

QuadraticClosedForm q_quadratic_closed(const AlgebraicNumber& alpha) {
    if (alpha.degree() != 2) throw InvalidInput("closed form needs a quadratic irrational, got degree " + std::to_string(alpha.degree()));
    CFStream stream = CFStream::from_algebraic(alpha);

    // Find i < j with identical complete quotients (same reduced polynomial,
    // unique root above 1).
    std::map<std::string, std::size_t> seen;
    std::size_t start = 0;
    std::size_t period = 0;
    for (std::size_t j = 0; period == 0; ++j) {
        if (j > 10000) throw InvalidInput("no period found in the continued fraction");
        stream.ensure(j);
        const LaurentPolynomial& p = stream.complete_quotient_polynomials()[j];
        if (j > 0) {
            const auto sturm = sturm_sequence(p);
            const Rational bound = root_bound(p);
            if (count_roots(sturm, 1, bound) != 1) continue;
        }
        const std::string key = p.to_string(true, "x");
        auto [it, inserted] = seen.emplace(key, j);
        if (!inserted) {
            start = it->second;
            period = j - it->second;
        }
    }
    const std::size_t even_start = start + start % 2;
    const std::size_t even_period = period % 2 == 0 ? period : 2 * period;
    stream.ensure(even_start + even_period);
    const auto& terms = stream.prefix();

    const IntMatrix prefix = word_product(terms, 0, even_start);
    const IntMatrix loop = word_product(terms, even_start, even_start + even_period);
    const Integer m(stream.shift());
    IntMatrix fixing = t_power(-m) * prefix * loop * adjugate(prefix) * t_power(m);
    if (fixing.c < 0 || (fixing.c == 0 && fixing.a < 0)) fixing = IntMatrix{-fixing.a, -fixing.b, -fixing.c, -fixing.d};

    // The classical fixed-point equation must be a multiple of the minimal polynomial.
    const LaurentPolynomial fixed_eq = LaurentPolynomial(0, {Rational(-fixing.b), Rational(fixing.d - fixing.a), Rational(fixing.c)});
    if (fixed_eq.primitive_part() != alpha.polynomial().primitive_part()) {
        throw std::logic_error("fixing matrix " + fixing.to_string() + " does not fix the input");
    }

    QuadraticClosedForm form;
    form.fixing = fixing;
    form.word = decompose_psl2z(fixing);
    form.fixing_q = word_matrix_q(form.word);
    const auto& mq = form.fixing_q;
    const LaurentPolynomial diff = mq.a() - mq.d();
    form.Q = diff;
    form.R = diff * diff + LaurentPolynomial(4) * mq.b() * mq.c();
    form.S = LaurentPolynomial(2) * mq.c();
    reduce_closed_form(form);

    // Pick the branch that follows x rather than its conjugate: compare with a
    // deep convergent.
    QuadraticClosedForm other = form;
    other.Q = -form.Q;
    other.S = -form.S;
    const std::size_t depth = even_start + 4 * even_period + 4;
    stream.ensure(depth);
    Rational convergent = 0;
    {
        const auto& t = stream.prefix();
        convergent = Rational(t[depth - 1]);
        for (std::size_t i = depth - 1; i-- > 0;) convergent = Rational(t[i]) + 1 / convergent;
        convergent -= stream.shift();
    }
    const int probe = 12;
    const auto reference = qreal::expand(q_rational(convergent), probe);
    auto score = [&](const QuadraticClosedForm& f) {
        try {
            return agreement_frontier(f.expand(probe), reference);
        } catch (const Error&) {
            return std::numeric_limits<int>::min();
        }
    };
    return score(other) > score(form) ? other : form;
}

}  // namespace qreal
