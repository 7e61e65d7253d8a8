#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qreal/laurent.hpp"
#include "qreal/number.hpp"
#include "qreal/ratfunc.hpp"
#include "qreal/series.hpp"

namespace qreal {

/// 2x2 integer matrix for the classical modular group.
struct IntMatrix {
    Integer a = 1, b = 0, c = 0, d = 1;

    Integer determinant() const { return a * d - b * c; }
    Integer trace() const { return a + d; }
    friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
    friend bool operator==(const IntMatrix& x, const IntMatrix& y) = default;
    /// Equal up to the sign of the whole matrix.
    bool projectively_equal(const IntMatrix& other) const;
    /// Mobius image of a rational; std::nullopt for the point at infinity.
    std::optional<Rational> apply(const Rational& x) const;
    std::string to_string() const;
};

/// 2x2 matrix over Laurent polynomials in q.
///
/// Most callers treat it projectively (see normalized()); Burau images keep
/// their scalar factor.
class QMatrix {
  public:
    QMatrix() : a_(1), b_(), c_(), d_(1) {}
    QMatrix(LaurentPolynomial a, LaurentPolynomial b, LaurentPolynomial c, LaurentPolynomial d);

    static QMatrix identity() { return {}; }
    static QMatrix t_q();
    /// Adjugate of T_q, i.e. T_q^{-1} up to the scalar q.
    static QMatrix t_q_inverse();
    static QMatrix s_q();

    const LaurentPolynomial& a() const { return a_; }
    const LaurentPolynomial& b() const { return b_; }
    const LaurentPolynomial& c() const { return c_; }
    const LaurentPolynomial& d() const { return d_; }

    LaurentPolynomial determinant() const { return a_ * d_ - b_ * c_; }
    LaurentPolynomial trace() const { return a_ + d_; }
    QMatrix adjugate() const { return QMatrix(d_, -b_, -c_, a_); }
    QMatrix scaled(const LaurentPolynomial& s) const { return QMatrix(s * a_, s * b_, s * c_, s * d_); }

    /// Projective normal form: the common monomial q^k is divided out and the
    /// sign fixed so the first nonzero entry (reading order) has a positive
    /// lowest coefficient.
    QMatrix normalized() const;
    bool projectively_equal(const QMatrix& other) const { return normalized() == other.normalized(); }
    bool is_projective_identity() const { return normalized() == identity(); }
    /// Entries at q = 1.
    IntMatrix at_one() const;

    friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
    friend bool operator==(const QMatrix& x, const QMatrix& y) = default;

    /// "[[q, 1], [0, 1]]".
    std::string to_string() const;

  private:
    LaurentPolynomial a_, b_, c_, d_;
};

/// Word in the generators T, T^{-1} and S.
class ModularWord {
  public:
    enum class Letter { T, TInv, S };

    ModularWord() = default;
    explicit ModularWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    /// Letters "T", "t" (= T^{-1}) and "S"; anything else throws InvalidInput.
    static ModularWord parse(std::string_view text);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    ModularWord& append(Letter l) {
        letters_.push_back(l);
        return *this;
    }
    ModularWord& append(const ModularWord& other);
    /// Appends T^k (k > 0) or t^{-k} (k < 0).
    ModularWord& append_power(long k);

    /// Cancels Tt, tT, SS and TSTSTS until no rule applies. One admissible
    /// reduced form; not claimed to be a normal form for the group.
    ModularWord canonicalized() const;
    ModularWord inverse() const;

    IntMatrix classical() const;
    std::string to_string() const;
    friend bool operator==(const ModularWord& x, const ModularWord& y) = default;

  private:
    std::vector<Letter> letters_;
};

/// Product of the q-generators, before projective normalization.
QMatrix word_matrix_q_raw(const ModularWord& w);
/// Projectively normalized product of the q-generators.
QMatrix word_matrix_q(const ModularWord& w);

/// Word whose classical matrix equals +-M, built by the Euclidean algorithm on
/// the first column. Throws InvalidInput unless det M = 1.
ModularWord decompose_psl2z(const IntMatrix& m);

/// (a s + b) / (c s + d). Throws InsufficientPrecision when c s + d vanishes
/// at the available order.
TruncatedLaurentSeries apply_mobius_q(const QMatrix& m, const TruncatedLaurentSeries& s);
/// Same action on exact rational functions; std::nullopt for the image infinity.
std::optional<RationalFunctionQ> apply_mobius_q(const QMatrix& m, const RationalFunctionQ& f);

/// Reduced Burau image of a braid word; generators are 1, 2 for sigma_1,
/// sigma_2 and -1, -2 for their inverses. Not normalized.
QMatrix burau_matrix(const std::vector<int>& braid);
/// "1 2 -1" or "1,2,-1".
std::vector<int> parse_braid(std::string_view text);

}  // namespace qreal
