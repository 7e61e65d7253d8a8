#pragma once

#include <cstddef>
#include <vector>

#include "qreal/algebraic.hpp"
#include "qreal/cfstream.hpp"
#include "qreal/modular.hpp"
#include "qreal/ratfunc.hpp"
#include "qreal/series.hpp"

namespace qreal {

/// Even-length continued fraction [a_1; ..., a_2m] of x >= 0, using the tail
/// identity [..., a] = [..., a - 1, 1]. Zero is returned as {0}.
std::vector<Integer> cf_even(const Rational& x);

/// q-deformed rational [x]_q. Nonnegative x use the nested q-continued
/// fraction; negative x use [x]_q = q^{-m}([x + m]_q - [m]_q).
RationalFunctionQ q_rational(const Rational& x);

/// q-integer [n]_q = 1 + q + ... + q^{n-1} (n >= 0).
LaurentPolynomial q_integer(long n);

struct StabilizationOptions {
    /// Consecutive convergents that must agree on every requested coefficient.
    int margin = 3;
    /// Partial quotients that may be consumed before giving up.
    std::size_t budget = 200;
};

/// Stabilized q-deformation [x]_q exact below `order`, from the convergents of
/// the stream. Throws StabilizationNotReached when the budget runs out.
TruncatedLaurentSeries q_real(CFStream& stream, int order, const StabilizationOptions& options = {});

struct Stabilized {
    TruncatedLaurentSeries series;
    /// Partial quotients consumed when the certificate was reached.
    std::size_t quotients_used = 0;
};
Stabilized q_real_stabilized(CFStream& stream, int order, const StabilizationOptions& options = {});

/// Expansions (exact below `order`) of [x_k]_q for the first `count`
/// convergents x_k of the stream, already shifted back to x.
std::vector<TruncatedLaurentSeries> convergent_expansions(CFStream& stream, std::size_t count, int order);

/// [x]_q = (Q + sqrt(R)) / S for a real quadratic irrational, with the square
/// root taken as the series branch with positive leading coefficient.
struct QuadraticClosedForm {
    LaurentPolynomial Q;
    LaurentPolynomial R;
    LaurentPolynomial S;
    /// Classical hyperbolic matrix fixing x, its word and its q-deformation.
    IntMatrix fixing;
    ModularWord word;
    QMatrix fixing_q;

    TruncatedLaurentSeries expand(int order) const;
    std::string to_string() const;
};

/// Closed form from the periodic continued fraction. Throws InvalidInput
/// unless the number has degree 2.
QuadraticClosedForm q_quadratic_closed(const AlgebraicNumber& alpha);

}  // namespace qreal
