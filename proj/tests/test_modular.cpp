#include <random>

#include "doctest.h"
#include "qreal/errors.hpp"
#include "qreal/modular.hpp"
#include "qreal/qreal.hpp"

using namespace qreal;

namespace {

using Poly = LaurentPolynomial;
const Poly q = Poly::variable();

Poly mono(long c, int e) { return Poly::monomial(c, e); }

ModularWord random_word(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> letter(0, 2);
    ModularWord w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) w.append(static_cast<ModularWord::Letter>(letter(rng)));
    return w;
}

}  // namespace

TEST_CASE("word_matrix_q examples") {
    CHECK(word_matrix_q(ModularWord::parse("T")) == QMatrix(q, 1, 0, 1));
    CHECK(word_matrix_q(ModularWord::parse("TS")) == QMatrix(1, -1, 1, 0));
    CHECK(word_matrix_q(ModularWord::parse("tS")) == QMatrix(q, 1, -mono(1, 2), 0));
    CHECK(word_matrix_q(ModularWord::parse("")) == QMatrix::identity());
    CHECK_THROWS_AS(ModularWord::parse("TX"), InvalidInput);
}

TEST_CASE("relations hold projectively") {
    CHECK(word_matrix_q(ModularWord::parse("SS")).is_projective_identity());
    CHECK(word_matrix_q(ModularWord::parse("TSTSTS")).is_projective_identity());
    CHECK(word_matrix_q(ModularWord::parse("Tt")).is_projective_identity());
    CHECK_FALSE(word_matrix_q(ModularWord::parse("TS")).is_projective_identity());
    CHECK(ModularWord::parse("TtSSTSTSTS").canonicalized().empty());
}

TEST_CASE("decompose_psl2z examples") {
    CHECK(decompose_psl2z(IntMatrix{1, 1, 0, 1}).to_string() == "T");
    CHECK(decompose_psl2z(IntMatrix{0, -1, 1, 0}).to_string() == "S");
    CHECK(decompose_psl2z(IntMatrix{1, -1, 1, 0}).to_string() == "TS");
    CHECK_THROWS_AS(decompose_psl2z(IntMatrix{2, 0, 0, 1}), InvalidInput);

    std::mt19937 rng(7);
    for (int i = 0; i < 300; ++i) {
        const ModularWord w = random_word(rng, 14);
        const IntMatrix m = w.classical();
        const ModularWord back = decompose_psl2z(m);
        CHECK(back.classical().projectively_equal(m));
        CHECK(word_matrix_q(back).at_one().projectively_equal(m));
    }
}

TEST_CASE("apply_mobius_q examples") {
    const auto two = TruncatedLaurentSeries::from_polynomial(q_integer(2), 10);
    CHECK(apply_mobius_q(QMatrix::t_q(), two) == TruncatedLaurentSeries::from_polynomial(q_integer(3), 10));

    const auto one = TruncatedLaurentSeries::from_polynomial(Poly(1), 10);
    const auto image = apply_mobius_q(QMatrix::s_q(), one);
    CHECK(image.valuation() == -1);
    CHECK(image.coefficient(-1) == -1);
    CHECK(agree(image, TruncatedLaurentSeries::from_polynomial(-mono(1, -1), 20)));

    const auto zero = TruncatedLaurentSeries::zero(10);
    CHECK_THROWS_AS(apply_mobius_q(QMatrix::s_q(), zero), InsufficientPrecision);
    CHECK_FALSE(apply_mobius_q(QMatrix::s_q(), RationalFunctionQ()).has_value());
}

TEST_CASE("burau representation") {
    CHECK(burau_matrix({1}) == QMatrix(q, 1, 0, 1));
    CHECK(burau_matrix({2}) == QMatrix(1, 0, -q, q));
    CHECK(burau_matrix({1, 2, 1}) == burau_matrix({2, 1, 2}));
    const Poly minus_q3 = -mono(1, 3);
    CHECK(burau_matrix({1, 2, 1, 2, 1, 2}) == QMatrix(minus_q3, 0, 0, minus_q3));
    CHECK(burau_matrix({1, -1}) == QMatrix::identity());
    CHECK(burau_matrix({-2, 2, 2, -2}) == QMatrix::identity());
    CHECK(burau_matrix({1}).projectively_equal(QMatrix::t_q()));
    CHECK(burau_matrix({2}).projectively_equal(QMatrix::s_q() * QMatrix::t_q() * QMatrix::s_q()));
    CHECK(parse_braid("1 2 -1") == std::vector<int>{1, 2, -1});
    CHECK(parse_braid("1,-2") == std::vector<int>{1, -2});
    CHECK_THROWS_AS(parse_braid("3"), InvalidInput);
}

TEST_CASE("equivariance on rationals") {
    std::mt19937 rng(11);
    int checked = 0;
    while (checked < 300) {
        const ModularWord w = random_word(rng, 10);
        Rational x(Integer(std::uniform_int_distribution<long>(-30, 30)(rng)),
                   Integer(std::uniform_int_distribution<long>(1, 12)(rng)));
        x.canonicalize();
        const auto y = w.classical().apply(x);
        if (!y) continue;
        const auto image = apply_mobius_q(word_matrix_q(w), q_rational(x));
        REQUIRE(image.has_value());
        CHECK(*image == q_rational(*y));
        ++checked;
    }
}

TEST_CASE("hyperbolic traces are palindromic and determinants monomial") {
    std::mt19937 rng(5);
    int hyperbolic = 0;
    while (hyperbolic < 100) {
        const ModularWord w = random_word(rng, 16);
        const QMatrix raw = word_matrix_q_raw(w);
        const Poly det = raw.determinant();
        CHECK(det.is_monomial());
        CHECK(abs(det.lowest_coefficient()) == 1);
        if (abs(w.classical().trace()) <= 2) continue;
        CHECK(word_matrix_q(w).trace().is_palindromic());
        ++hyperbolic;
    }
}
