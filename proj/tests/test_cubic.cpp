#include "doctest.h"
#include "qreal/cubic.hpp"
#include "qreal/errors.hpp"
#include "qreal/serialize.hpp"

using namespace qreal;

namespace {

using Poly = LaurentPolynomial;

TruncatedLaurentSeries golden(const std::string& name) {
    return read_series_file(std::string(QREAL_GOLDEN_DIR) + "/" + name + ".json");
}

const CubicFamily heptagon{FamilySign::plus, -1};
const CubicFamily nonagon{FamilySign::minus, 0};

}  // namespace

TEST_CASE("family polynomials and discriminants") {
    CHECK(family_polynomial(nonagon) == Poly::from_ints({1, -3, 0, 1}));
    CHECK(family_polynomial(heptagon) == Poly::from_ints({-1, -2, 1, 1}));
    CHECK(family_polynomial({FamilySign::minus, 1}) == Poly::from_ints({1, -2, -1, 1}));

    CHECK(cubic_discriminant(Poly::from_ints({1, -3, 0, 1})) == 81);
    CHECK(cubic_discriminant(Poly::from_ints({8, -12, 0, 1})) == 5184);
    CHECK(cubic_discriminant(Poly::from_ints({13, -13, 0, 1})) == 4225);
    CHECK_THROWS_AS(cubic_discriminant(Poly::from_ints({1, 1})), InvalidInput);

    for (long b = -20; b <= 20; ++b) {
        const Integer minus = b * b - 3 * b + 9;
        const Integer plus = b * b + 3 * b + 9;
        CHECK(cubic_discriminant(family_polynomial({FamilySign::minus, b})) == minus * minus);
        CHECK(cubic_discriminant(family_polynomial({FamilySign::plus, b})) == plus * plus);
    }
    CHECK(CubicFamily::parse_sign("plus") == FamilySign::plus);
    CHECK_THROWS_AS(CubicFamily::parse_sign("times"), InvalidInput);
}

TEST_CASE("galois maps") {
    const auto minus = galois_map(nonagon);
    const auto plus = galois_map(heptagon);
    CHECK(minus.quantum == QMatrix(1, -1, 1, 0));
    CHECK(plus.quantum == QMatrix(Poly::variable(), 1, -Poly::monomial(1, 2), 0));
    CHECK((minus.classical * minus.classical * minus.classical).projectively_equal(IntMatrix{}));
    CHECK((plus.classical * plus.classical * plus.classical).projectively_equal(IntMatrix{}));
}

TEST_CASE("root orbits") {
    auto hepta = root_orbit(heptagon);
    CHECK(hepta.roots[0].approximate() == doctest::Approx(1.2469796));
    CHECK(hepta.roots[1].approximate() == doctest::Approx(-0.4450419));
    CHECK(hepta.roots[2].approximate() == doctest::Approx(-1.8019377));
    // x1 = -(x2 + 1)/x2
    CHECK(hepta.image[1] == 0);
    CHECK(hepta.image[2] == 1);
    CHECK(hepta.image[0] == 2);

    auto nona = root_orbit(nonagon);
    CHECK(nona.roots[0].approximate() == doctest::Approx(1.5320889));
    CHECK(nona.image[0] == 1);
    CHECK(nona.image[1] == 2);
    CHECK(nona.image[2] == 0);

    for (long b = -5; b <= 5; ++b) {
        for (auto sign : {FamilySign::minus, FamilySign::plus}) {
            auto orbit = root_orbit({sign, b});
            const auto& g = galois_map({sign, b}).classical;
            for (std::size_t i = 0; i < 3; ++i) {
                const double x = orbit.roots[i].approximate();
                const double image = (g.a.get_d() * x + g.b.get_d()) / (g.c.get_d() * x + g.d.get_d());
                CHECK(image == doctest::Approx(orbit.roots[static_cast<std::size_t>(orbit.image[i])].approximate()));
            }
        }
    }
}

TEST_CASE("heptagon identities") {
    const auto xs = q_roots(heptagon, 31);
    CHECK(xs[0] == golden("heptagon_x1"));
    CHECK(xs[1] == golden("heptagon_x2"));
    CHECK(xs[2] == golden("heptagon_x3"));

    const auto r = vieta_residuals(xs, heptagon);
    CHECK(r.vanish());
    CHECK(r.product.order() >= 28);
    CHECK(agree(xs[0] * xs[1] * xs[2], TruncatedLaurentSeries::from_polynomial(Poly::monomial(1, -3), 40)));

    CHECK(agree(qrel_transport(xs[1], heptagon), xs[0]));
    CHECK(agree(qrel_transport(xs[2], heptagon), xs[1]));
    CHECK(agree(qrel_transport(xs[0], heptagon), xs[2]));
    const auto thrice = qrel_transport(qrel_transport(qrel_transport(xs[0], heptagon), heptagon), heptagon);
    CHECK(agree(thrice, xs[0]));
    CHECK(thrice.order() >= 20);

    const auto expected = golden("heptagon_bplus");
    CHECK(b_series(heptagon, 31) == expected);
    for (int i = 1; i <= 3; ++i) {
        CAPTURE(i);
        CHECK(b_series(heptagon, 31, {BRoute::defect, i}) == expected);
    }
}

TEST_CASE("nonagon identities") {
    const auto xs = q_roots(nonagon, 31, {}, false);
    CHECK(xs[0] == golden("nonagon_x1"));
    CHECK(xs[1] == golden("nonagon_x2"));
    CHECK(xs[2] == golden("nonagon_x3"));
    CHECK(vieta_residuals(xs, nonagon).vanish());
    CHECK(agree(qrel_transport(xs[0], nonagon), xs[1]));
    CHECK(agree(qrel_transport(xs[2], nonagon), xs[0]));

    const auto expected = golden("nonagon_bminus");
    CHECK(b_series(nonagon, 31) == expected);
    for (int i = 1; i <= 3; ++i) CHECK(b_series(nonagon, 31, {BRoute::defect, i}) == expected);
    CHECK_THROWS_AS(b_series(nonagon, 31, {BRoute::defect, 4}), InvalidInput);
}

TEST_CASE("quantum cubic annihilates its roots") {
    for (const auto& f : {heptagon, nonagon}) {
        const auto cubic = quantum_cubic(f, 31);
        CHECK(cubic.classical_limit() == family_polynomial(f));
        const auto xs = q_roots(f, 31);
        for (const auto& x : xs) {
            const auto value = cubic.evaluate(x);
            CHECK(value.is_zero());
            CHECK(value.order() >= 20);
        }
    }
    CHECK(quantum_cubic(heptagon, 10).symbolic() == "X^3 - B X^2 - (q^-1 B + 3q^-2) X - q^-3");
}

TEST_CASE("the printed plus-family pair identity does not hold") {
    // e2 = q^-1 e1 - 3q^-2 fails already at q = 1; e2 = -(q^-1 e1 + 3q^-2) holds.
    const auto xs = q_roots(heptagon, 20);
    const auto e1 = xs[0] + xs[1] + xs[2];
    const auto e2 = xs[0] * xs[1] + xs[1] * xs[2] + xs[2] * xs[0];
    CHECK_FALSE((e2 - Poly::monomial(1, -1) * e1 + Poly::monomial(3, -2)).is_zero());
    CHECK((e2 + Poly::monomial(1, -1) * e1 + Poly::monomial(3, -2)).is_zero());
}
