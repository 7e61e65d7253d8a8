#include "qreal/algebraic.hpp"

#include <algorithm>
#include <utility>

#include "qreal/errors.hpp"

namespace qreal {

namespace {

int sign_changes(const std::vector<LaurentPolynomial>& seq, const Rational& x) {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq) {
        const int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

void check_polynomial(const LaurentPolynomial& p) {
    if (p.is_zero() || p.degree() < 1) throw InvalidInput("root isolation needs a nonconstant polynomial");
    if (p.valuation() < 0) throw InvalidInput("root isolation needs an ordinary polynomial");
    if (!p.is_integral()) throw InvalidInput("root isolation needs integer coefficients");
}

}  // namespace

bool is_squarefree(const LaurentPolynomial& p) { return gcd(p, p.derivative()).degree() == 0; }

std::vector<LaurentPolynomial> sturm_sequence(const LaurentPolynomial& p) {
    std::vector<LaurentPolynomial> seq{p, p.derivative()};
    while (!seq.back().is_zero() && seq.back().degree() > 0) {
        LaurentPolynomial r = divmod(seq[seq.size() - 2], seq.back()).remainder;
        if (r.is_zero()) break;
        // Positive rescaling keeps sign patterns intact.
        seq.push_back(-r.scaled(1 / r.content()));
    }
    return seq;
}

int count_roots(const std::vector<LaurentPolynomial>& sturm, const Rational& lo, const Rational& hi) {
    return sign_changes(sturm, lo) - sign_changes(sturm, hi);
}

Rational root_bound(const LaurentPolynomial& p) {
    Rational m = 0;
    const Rational lead = abs(p.leading_coefficient());
    for (int e = p.valuation(); e < p.degree(); ++e) m = std::max(m, Rational(abs(p.coefficient(e)) / lead));
    return m + 1;
}

AlgebraicNumber::AlgebraicNumber(LaurentPolynomial poly, Rational lo, Rational hi, bool)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {}

AlgebraicNumber::AlgebraicNumber(LaurentPolynomial poly, Rational lo, Rational hi)
    : poly_(std::move(poly)), lo_(std::move(lo)), hi_(std::move(hi)) {
    check_polynomial(poly_);
    if (!is_squarefree(poly_)) throw SquarefreeRequired("polynomial " + poly_.to_string(true, "x") + " is not squarefree");
    if (lo_ > hi_) std::swap(lo_, hi_);
    if (lo_ == hi_) {
        if (poly_.sign_at(lo_) != 0) throw InvalidInput("degenerate interval is not a root");
        return;
    }
    const auto sturm = sturm_sequence(poly_);
    if (poly_.sign_at(lo_) * poly_.sign_at(hi_) >= 0 || count_roots(sturm, lo_, hi_) != 1) {
        throw InvalidInput("interval (" + lo_.get_str() + ", " + hi_.get_str() + ") does not isolate exactly one root of " +
                           poly_.to_string(true, "x"));
    }
}

void AlgebraicNumber::split_at(const Rational& x) {
    if (is_rational() || x <= lo_ || x >= hi_) return;
    const int sx = poly_.sign_at(x);
    if (sx == 0) {
        lo_ = hi_ = x;
        return;
    }
    if (sx == poly_.sign_at(lo_)) {
        lo_ = x;
    } else {
        hi_ = x;
    }
}

void AlgebraicNumber::bisect() { split_at((lo_ + hi_) / 2); }

void AlgebraicNumber::refine_to(const Rational& width) {
    while (!is_rational() && hi_ - lo_ > width) bisect();
}

Integer AlgebraicNumber::floor_value() {
    // Split at integers inside the interval until none remain strictly inside.
    while (!is_rational()) {
        const Integer lo_floor = qreal::floor(lo_);
        const Integer hi_ceil = qreal::ceil(hi_);
        if (hi_ceil - lo_floor <= 1) return lo_floor;
        Integer mid = (lo_floor + hi_ceil);
        mpz_fdiv_q_2exp(mid.get_mpz_t(), mid.get_mpz_t(), 1);
        split_at(Rational(mid));
    }
    return qreal::floor(lo_);
}

int AlgebraicNumber::compare(const Rational& x) {
    for (;;) {
        if (is_rational()) return sgn(lo_ - x);
        if (x <= lo_) return 1;
        if (x >= hi_) return -1;
        split_at(x);
    }
}

double AlgebraicNumber::approximate() {
    refine_to(Rational(1, Integer(1) << 60));
    return Rational((lo_ + hi_) / 2).get_d();
}

std::string AlgebraicNumber::to_string() const {
    return "root of " + poly_.to_string(true, "x") + " in (" + lo_.get_str() + ", " + hi_.get_str() + ")";
}

std::vector<AlgebraicNumber> isolate_real_roots(const LaurentPolynomial& p) {
    check_polynomial(p);
    if (!is_squarefree(p)) throw SquarefreeRequired("polynomial " + p.to_string(true, "x") + " is not squarefree");
    const auto sturm = sturm_sequence(p);
    const Rational bound = root_bound(p);

    std::vector<AlgebraicNumber> roots;
    // Work list of half-open intervals (lo, hi] with their root counts.
    struct Piece {
        Rational lo, hi;
        int count;
    };
    std::vector<Piece> work{{-bound, bound, count_roots(sturm, -bound, bound)}};
    while (!work.empty()) {
        Piece piece = std::move(work.back());
        work.pop_back();
        if (piece.count == 0) continue;
        if (piece.count == 1) {
            if (p.sign_at(piece.hi) == 0) {
                roots.push_back(AlgebraicNumber(p, piece.hi, piece.hi, true));
                continue;
            }
            if (p.sign_at(piece.lo) != 0) {
                roots.push_back(AlgebraicNumber(p, piece.lo, piece.hi, true));
                continue;
            }
        }
        const Rational mid = (piece.lo + piece.hi) / 2;
        const int left = count_roots(sturm, piece.lo, mid);
        work.push_back({mid, piece.hi, piece.count - left});
        work.push_back({piece.lo, mid, left});
    }
    std::sort(roots.begin(), roots.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return a.lo() < b.lo() || (a.lo() == b.lo() && a.hi() < b.hi());
    });
    return roots;
}

}  // namespace qreal
