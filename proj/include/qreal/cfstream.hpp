#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qreal/algebraic.hpp"
#include "qreal/laurent.hpp"
#include "qreal/number.hpp"

namespace qreal {

/// Lazily extended continued fraction [a_1; a_2, a_3, ...] of x + m, where the
/// integer shift m >= 0 makes the expanded value nonnegative (m = 0 for x >= 0).
///
/// Emitted terms satisfy a_1 >= 0 and a_i >= 1 for i >= 2. Not thread-safe:
/// extension mutates the stream; copies of prefix() are plain values.
class CFStream {
  public:
    /// Finite expansion of an exact rational.
    static CFStream from_rational(const Rational& x);
    /// Explicit terms followed, when `period` is nonempty, by `period` repeated
    /// forever. The first term may be negative; it is absorbed into the shift.
    static CFStream from_terms(std::vector<Integer> head, std::vector<Integer> period = {});
    /// Lagrange expansion of an irrational algebraic number. Throws InvalidInput
    /// for rational roots: up front for linear polynomials and exact interval
    /// endpoints, otherwise once a complete quotient turns out to be an integer.
    static CFStream from_algebraic(AlgebraicNumber alpha);

    long shift() const { return shift_; }
    bool is_finite() const { return finite_; }
    /// Extends to at least n terms; false when a finite stream is shorter.
    bool ensure(std::size_t n);
    /// i-th term (0-based); throws InvalidInput past the end of a finite stream.
    const Integer& term(std::size_t i);
    std::size_t emitted() const { return terms_.size(); }
    const std::vector<Integer>& prefix() const { return terms_; }

    /// For algebraic streams: minimal polynomial of the i-th complete quotient
    /// (entry 0 belongs to the shifted input), primitive with positive leading
    /// coefficient. Entry count is emitted() + 1.
    const std::vector<LaurentPolynomial>& complete_quotient_polynomials() const { return quotient_polys_; }
    bool is_algebraic() const { return algebraic_.has_value(); }

  private:
    CFStream() = default;
    void extend_algebraic();

    long shift_ = 0;
    bool finite_ = true;
    std::vector<Integer> terms_;
    std::vector<Integer> period_;

    struct AlgebraicState {
        LaurentPolynomial poly;
        Rational lo, hi;
    };
    std::optional<AlgebraicState> algebraic_;
    std::vector<LaurentPolynomial> quotient_polys_;
};

}  // namespace qreal
