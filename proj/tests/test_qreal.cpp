#include <random>

#include "doctest.h"
#include "qreal/errors.hpp"
#include "qreal/qreal.hpp"
#include "qreal/serialize.hpp"

using namespace qreal;

namespace {

using Poly = LaurentPolynomial;

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

TruncatedLaurentSeries golden(const std::string& name) {
    return read_series_file(std::string(QREAL_GOLDEN_DIR) + "/" + name + ".json");
}

AlgebraicNumber root_near(const Poly& p, double approx) {
    for (auto& r : isolate_real_roots(p)) {
        if (std::abs(r.approximate() - approx) < 1e-2) return r;
    }
    throw std::runtime_error("no root near the given value");
}

}  // namespace

TEST_CASE("cf_even") {
    CHECK(cf_even(Rational(5, 3)) == ints({1, 1, 1, 1}));
    CHECK(cf_even(Rational(3)) == ints({2, 1}));
    CHECK(cf_even(Rational(1)) == ints({0, 1}));
    CHECK(cf_even(Rational(0)) == ints({0}));
    CHECK(cf_even(Rational(7, 3)) == ints({2, 3}));
    CHECK(cf_even(Rational(1, 2)) == ints({0, 2}));
    CHECK_THROWS_AS(cf_even(Rational(-1)), InvalidInput);
}

TEST_CASE("q_rational examples") {
    CHECK(q_rational(Rational(5, 3)).to_string() == "(1+q+2q^2+q^3)/(1+q+q^2)");
    CHECK(q_rational(Rational(4)) == RationalFunctionQ(Poly::from_ints({1, 1, 1, 1})));
    CHECK(q_rational(Rational(-1)).to_string() == "-1/q");
    CHECK(q_rational(Rational(0)) == RationalFunctionQ());
    CHECK(q_rational(Rational(1)) == RationalFunctionQ(Poly(1)));

    std::mt19937 rng(3);
    for (int i = 0; i < 300; ++i) {
        Rational x(Integer(std::uniform_int_distribution<long>(-200, 200)(rng)),
                   Integer(std::uniform_int_distribution<long>(1, 60)(rng)));
        x.canonicalize();
        const auto f = q_rational(x);
        REQUIRE(f.evaluate(1).has_value());
        CHECK(*f.evaluate(1) == x);
        // [x+1]_q = q[x]_q + 1
        CHECK(q_rational(x + 1) == RationalFunctionQ(Poly::variable()) * f + RationalFunctionQ(Poly(1)));
    }
}

TEST_CASE("isolate_real_roots") {
    auto nonagon = isolate_real_roots(Poly::from_ints({1, -3, 0, 1}));
    REQUIRE(nonagon.size() == 3);
    CHECK(nonagon[0].compare(Rational(-1879, 1000)) < 0);
    CHECK(nonagon[0].compare(Rational(-1880, 1000)) > 0);
    CHECK(nonagon[1].compare(Rational(347, 1000)) > 0);
    CHECK(nonagon[1].compare(Rational(348, 1000)) < 0);
    CHECK(nonagon[2].compare(Rational(1532, 1000)) > 0);
    CHECK(nonagon[2].compare(Rational(1533, 1000)) < 0);

    const auto sqrt2 = isolate_real_roots(Poly::from_ints({-2, 0, 1}));
    REQUIRE(sqrt2.size() == 2);
    CHECK(sqrt2[0].hi() <= 0);
    CHECK(sqrt2[1].lo() >= 0);

    auto hepta = isolate_real_roots(Poly::from_ints({-1, -2, 1, 1}));
    REQUIRE(hepta.size() == 3);
    CHECK(hepta[2].approximate() == doctest::Approx(1.2469796).epsilon(1e-7));
    CHECK(hepta[1].approximate() == doctest::Approx(-0.4450419).epsilon(1e-7));
    CHECK(hepta[0].approximate() == doctest::Approx(-1.8019377).epsilon(1e-7));

    CHECK_THROWS_AS(isolate_real_roots(Poly::from_ints({1, 2, 1})), SquarefreeRequired);
    CHECK_THROWS_AS(AlgebraicNumber(Poly::from_ints({-2, 0, 1}), -2, 2), InvalidInput);
}

TEST_CASE("algebraic continued fractions") {
    auto hepta = CFStream::from_algebraic(root_near(Poly::from_ints({-1, -2, 1, 1}), 1.247));
    CHECK(hepta.term(0) == 1);
    CHECK(hepta.shift() == 0);

    auto golden_stream = CFStream::from_algebraic(root_near(Poly::from_ints({-1, -1, 1}), 1.618));
    golden_stream.ensure(30);
    for (std::size_t i = 0; i < 30; ++i) CHECK(golden_stream.term(i) == 1);

    auto nona = CFStream::from_algebraic(root_near(Poly::from_ints({1, -3, 0, 1}), -1.879));
    CHECK(nona.shift() == 2);
    CHECK(nona.term(0) == 0);

    // sqrt(2) = [1; 2, 2, 2, ...]
    auto sqrt2 = CFStream::from_algebraic(root_near(Poly::from_ints({-2, 0, 1}), 1.414));
    sqrt2.ensure(20);
    CHECK(sqrt2.term(0) == 1);
    for (std::size_t i = 1; i < 20; ++i) CHECK(sqrt2.term(i) == 2);

    CHECK_THROWS_AS(CFStream::from_algebraic(AlgebraicNumber(Poly::from_ints({-1, 2}), 0, 1)), InvalidInput);
    // (2x - 1)(x^2 - 2) has the rational root 1/2 in (0, 1).
    auto hidden = CFStream::from_algebraic(AlgebraicNumber(Poly::from_ints({2, -4, -1, 2}), 0, 1));
    CHECK_THROWS_AS(hidden.ensure(10), InvalidInput);
}

TEST_CASE("q_real reproduces the heptagon and nonagon roots") {
    const Poly hepta = Poly::from_ints({-1, -2, 1, 1});
    const Poly nona = Poly::from_ints({1, -3, 0, 1});
    const std::pair<const char*, std::pair<Poly, double>> cases[] = {
        {"heptagon_x1", {hepta, 1.247}}, {"heptagon_x2", {hepta, -0.445}}, {"heptagon_x3", {hepta, -1.802}},
        {"nonagon_x1", {nona, 1.532}},   {"nonagon_x2", {nona, 0.347}},    {"nonagon_x3", {nona, -1.879}},
    };
    for (const auto& [name, where] : cases) {
        CAPTURE(name);
        auto stream = CFStream::from_algebraic(root_near(where.first, where.second));
        const auto s = q_real(stream, 31);
        CHECK(s == golden(name));
        CHECK(s.is_integral());
    }
}

TEST_CASE("golden ratio closed form") {
    const auto phi = root_near(Poly::from_ints({-1, -1, 1}), 1.618);
    const auto form = q_quadratic_closed(phi);
    CHECK(form.Q == Poly::from_ints({-1, 1, 1}));
    CHECK(form.R == Poly::from_ints({1, 2, -1, 2, 1}));
    CHECK(form.S == Poly::from_ints({0, 2}));
    CHECK(form.fixing == IntMatrix{2, 1, 1, 1});
    CHECK(form.R.is_palindromic());

    auto stream = CFStream::from_algebraic(phi);
    CHECK(form.expand(41) == q_real(stream, 41));

    auto ones = CFStream::from_terms({}, ints({1}));
    CHECK(q_real(ones, 20) == form.expand(20));
}

TEST_CASE("closed forms agree with stabilization") {
    const std::pair<Poly, double> quadratics[] = {
        {Poly::from_ints({-2, 0, 1}), 1.414},  {Poly::from_ints({-2, 0, 1}), -1.414},
        {Poly::from_ints({-3, 0, 1}), 1.732},  {Poly::from_ints({-1, -3, 2}), 1.78},
        {Poly::from_ints({-5, 0, 1}), -2.236}, {Poly::from_ints({1, -7, 3}), 0.1529},
    };
    for (const auto& [p, approx] : quadratics) {
        CAPTURE(p.to_string());
        CAPTURE(approx);
        const auto alpha = root_near(p, approx);
        const auto form = q_quadratic_closed(alpha);
        CHECK(form.R.is_palindromic());
        auto stream = CFStream::from_algebraic(alpha);
        const auto s = q_real(stream, 20);
        CHECK(form.expand(20) == s);
    }
    CHECK_THROWS_AS(q_quadratic_closed(root_near(Poly::from_ints({-1, -2, 1, 1}), 1.247)), InvalidInput);
}

TEST_CASE("stabilization properties") {
    auto stream = CFStream::from_algebraic(root_near(Poly::from_ints({1, -3, 0, 1}), 0.347));
    const auto expansions = convergent_expansions(stream, 14, 31);
    int previous = -1000;
    for (std::size_t k = 0; k + 1 < expansions.size(); ++k) {
        const int frontier = agreement_frontier(expansions[k], expansions[k + 1]);
        CHECK(frontier >= previous);
        previous = frontier;
    }

    auto x = CFStream::from_algebraic(root_near(Poly::from_ints({-1, -2, 1, 1}), -0.445));
    auto x_plus_one = CFStream::from_algebraic(root_near(Poly::from_ints({-1, -2, 1, 1}).taylor_shift(-1), 0.555));
    const auto a = q_real(x, 25);
    const auto b = q_real(x_plus_one, 25);
    CHECK(agree(b, Poly::variable() * a + Poly(1)));

    auto tight = CFStream::from_algebraic(root_near(Poly::from_ints({-1, -2, 1, 1}), 1.247));
    CHECK_THROWS_AS(q_real(tight, 31, StabilizationOptions{3, 4}), StabilizationNotReached);

    auto finite = CFStream::from_rational(Rational(5, 3));
    CHECK(q_real(finite, 12) == expand(q_rational(Rational(5, 3)), 12));
}
