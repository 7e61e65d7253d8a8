#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "qreal/ctable.hpp"
#include "qreal/errors.hpp"
#include "qreal/qreal.hpp"
#include "qreal/serialize.hpp"

using namespace qreal;

namespace {

using Poly = LaurentPolynomial;

std::string golden_path(const std::string& name) { return std::string(QREAL_GOLDEN_DIR) + "/" + name; }

std::vector<std::vector<std::string>> read_csv(const std::string& name) {
    std::ifstream in(golden_path(name));
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'k') continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

Integer cofactor_det(const std::vector<std::vector<Integer>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    if (n == 1) return m[0][0];
    Integer total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::vector<std::vector<Integer>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != col) row.push_back(m[i][j]);
            }
            minor.push_back(row);
        }
        const Integer term = m[0][col] * cofactor_det(minor);
        total += col % 2 == 0 ? term : Integer(-term);
    }
    return total;
}

}  // namespace

TEST_CASE("bareiss matches cofactor expansion") {
    std::mt19937 rng(19);
    std::uniform_int_distribution<int> size(0, 5);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int t = 0; t < 200; ++t) {
        const auto n = static_cast<std::size_t>(size(rng));
        std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
        for (auto& row : m) {
            for (auto& x : row) x = entry(rng) * (t % 3 == 0 ? 0 : 1) + (t % 3 == 0 ? entry(rng) % 2 : 0);
        }
        CHECK(bareiss_determinant(m) == cofactor_det(m));
    }
}

TEST_CASE("hankel_c basics") {
    const auto one = TruncatedLaurentSeries::from_polynomial(Poly(1), 20);
    CHECK(hankel_c(one, 5, 0) == 1);
    CHECK(hankel_c(one, 0, 1) == 1);
    CHECK(hankel_c(one, 3, 1) == 0);
    // C(0/M) = (-1)^{M(M-1)/2} c0^M
    const auto s = TruncatedLaurentSeries(-2, {Rational(-3), Rational(2), Rational(5)}, 12);
    for (int M = 0; M <= 6; ++M) {
        Rational expected = 1;
        for (int i = 0; i < M; ++i) expected *= -3;
        if ((M * (M - 1) / 2) % 2 == 1) expected = -expected;
        CHECK(hankel_c(s, 0, M) == expected);
    }
    CHECK(hankel_c(s, 2, 1) == 5);
    CHECK_THROWS_AS(hankel_c(s, 10, 5), InsufficientSeriesOrder);

    const auto halves = TruncatedLaurentSeries(0, {Rational(1, 2), Rational(1, 3), Rational(1, 4)}, 10);
    CHECK(hankel_c(halves, 1, 2) == Rational(1, 2) * Rational(1, 4) - Rational(1, 9));
}

TEST_CASE("[5/3]_q C-table") {
    const auto s = expand(q_rational(Rational(5, 3)), 30);
    const auto table = c_table(s, 9, 5);
    const auto rows = read_csv("q5over3_ctable.csv");
    REQUIRE(rows.size() == 6);
    for (int M = 0; M <= 5; ++M) {
        for (int L = 0; L <= 9; ++L) {
            if (L == 2 && M == 3) continue;
            CAPTURE(L);
            CAPTURE(M);
            CHECK(table.at(L, M) == parse_rational(rows[static_cast<std::size_t>(M)][static_cast<std::size_t>(L)]));
        }
    }
    // The printed table has +2 here; the determinant of
    // [[c0,c1,c2],[c1,c2,c3],[c2,c3,c4]] = [[1,0,1],[0,1,0],[1,0,-1]] is -2.
    CHECK(rows[3][2] == "2");
    CHECK(table.at(2, 3) == -2);
    CHECK(cofactor_det({{1, 0, 1}, {0, 1, 0}, {1, 0, -1}}) == -2);
    const auto block = zero_block_detect(table);
    REQUIRE(block.has_value());
    CHECK(block->lambda == 4);
    CHECK(block->mu == 3);
}

TEST_CASE("B+ Hankel table") {
    const auto bplus = read_series_file(golden_path("heptagon_bplus.json"));
    const auto table = c_table(bplus, 12, 12);
    const auto rows = read_csv("bplus_hankel12.csv");
    REQUIRE(rows.size() == 12);
    int matched = 0;
    for (int M = 1; M <= 12; ++M) {
        for (int L = 1; L <= 12; ++L) {
            matched += table.at(L, M) == parse_rational(rows[static_cast<std::size_t>(M - 1)][static_cast<std::size_t>(L - 1)]);
        }
    }
    CHECK(matched == 144);
    CHECK(table.at(1, 1) == -2);
    CHECK(table.at(12, 12) == 5272);
    CHECK_FALSE(zero_block_detect(table).has_value());
    CHECK_THROWS_AS(c_table(bplus, 20, 20), InsufficientSeriesOrder);
}

TEST_CASE("rational functions show zero blocks") {
    for (long n = 1; n <= 8; ++n) {
        const auto s = TruncatedLaurentSeries::from_polynomial(q_integer(n), 40);
        CHECK(zero_block_detect(c_table(s, 12, 8)).has_value());
    }
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::uniform_int_distribution<int> deg(0, 6);
    for (int t = 0; t < 40; ++t) {
        std::vector<Rational> num(static_cast<std::size_t>(deg(rng) + 1));
        std::vector<Rational> den(static_cast<std::size_t>(deg(rng) + 1));
        for (auto& x : num) x = coef(rng);
        for (auto& x : den) x = coef(rng);
        num[0] = num[0] == 0 ? Rational(1) : num[0];
        den[0] = 1;
        const RationalFunctionQ f(Poly(0, num), Poly(0, den));
        CHECK(zero_block_detect(c_table(expand(f, 40), 20, 12)).has_value());
    }
}

TEST_CASE("figure export") {
    const auto bplus = read_series_file(golden_path("heptagon_bplus.json"));
    const auto points = fig_export(bplus);
    REQUIRE(points.size() == 33);
    CHECK(points[1].k == 2);
    CHECK(points[1].signed_log == doctest::Approx(-0.693147).epsilon(1e-6));
    CHECK(points[11].signed_log == doctest::Approx(1.60944).epsilon(1e-5));
    for (const auto& p : points) {
        if (abs(p.coeff) >= 1) CHECK(std::llround(std::exp(std::fabs(p.signed_log))) == Rational(abs(p.coeff)).get_d());
    }
    const auto csv = fig_csv(points);
    CHECK(csv.rfind("k,coeff,signedlog\n1,-1,0\n2,-2,-0.693147\n", 0) == 0);

    const auto bminus = read_series_file(golden_path("nonagon_bminus.json"));
    CHECK(fig_export(bminus)[4].signed_log == doctest::Approx(0.693147).epsilon(1e-6));
}
