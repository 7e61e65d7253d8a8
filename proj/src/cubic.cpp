#include "qreal/cubic.hpp"

#include <future>

#include "qreal/errors.hpp"

namespace qreal {

namespace {

using Poly = LaurentPolynomial;

Poly mono(const Rational& c, int e) { return Poly::monomial(c, e); }

// a - 1/x is the Galois map: a = 1 (minus) or a = -1 (plus).
long map_offset(const CubicFamily& f) { return f.sign == FamilySign::minus ? 1 : -1; }

TruncatedLaurentSeries horner(const TruncatedLaurentSeries& x, const std::array<TruncatedLaurentSeries, 3>& c) {
    // x^3 + c2 x^2 + c1 x + c0
    TruncatedLaurentSeries acc = x + c[2];
    acc = acc * x + c[1];
    return acc * x + c[0];
}

TruncatedLaurentSeries exact(const Poly& p, int order) { return TruncatedLaurentSeries::from_polynomial(p, order); }

}  // namespace

FamilySign CubicFamily::parse_sign(std::string_view text) {
    if (text == "minus" || text == "-") return FamilySign::minus;
    if (text == "plus" || text == "+") return FamilySign::plus;
    throw InvalidInput("family must be minus or plus, got '" + std::string(text) + "'");
}

std::string CubicFamily::name() const {
    return std::string(sign == FamilySign::minus ? "minus" : "plus") + " b=" + std::to_string(b);
}

Poly family_polynomial(const CubicFamily& f) {
    const long b = f.b;
    if (f.sign == FamilySign::minus) return Poly::from_ints({1, b - 3, -b, 1});
    return Poly::from_ints({-1, -(b + 3), -b, 1});
}

Integer cubic_discriminant(const Poly& p) {
    if (p.is_zero() || p.valuation() < 0 || p.degree() != 3 || !p.is_integral()) {
        throw InvalidInput("discriminant needs an integer cubic, got " + p.to_string());
    }
    const Integer a = p.coefficient(3).get_num();
    const Integer b = p.coefficient(2).get_num();
    const Integer c = p.coefficient(1).get_num();
    const Integer d = p.coefficient(0).get_num();
    return 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c - 4 * a * c * c * c - 27 * a * a * d * d;
}

GaloisMap galois_map(const CubicFamily& f) {
    const auto word = ModularWord::parse(f.sign == FamilySign::minus ? "TS" : "tS");
    return {word.classical(), word_matrix_q(word)};
}

RootOrbit root_orbit(const CubicFamily& f) {
    const Poly p = family_polynomial(f);
    const long a = map_offset(f);

    // x^3 p(a - 1/x) must be a multiple of p, so the map permutes the roots.
    const Poly ax_minus_1 = Poly::from_ints({-1, a});
    const Poly x = Poly::variable();
    Poly transformed;
    Poly power(1);
    for (int k = 0; k <= 3; ++k) {
        Poly term = Poly(p.coefficient(k)) * power;
        for (int j = k; j < 3; ++j) term = term * x;
        transformed = transformed + term;
        power = power * ax_minus_1;
    }
    if (transformed.primitive_part() != p.primitive_part() && transformed.primitive_part() != -p.primitive_part()) {
        throw std::logic_error("Galois map does not preserve " + p.to_string());
    }

    auto ascending = isolate_real_roots(p);
    if (ascending.size() != 3) throw std::logic_error(p.to_string() + " does not have three real roots");
    RootOrbit orbit{f, {ascending[2], ascending[1], ascending[0]}, {}};

    for (int round = 0; round < 200; ++round) {
        bool resolved = true;
        for (int i = 0; i < 3 && resolved; ++i) {
            auto& r = orbit.roots[static_cast<std::size_t>(i)];
            if (r.lo() <= 0 && r.hi() >= 0) {
                resolved = false;
                break;
            }
            const Rational img_lo = a - 1 / r.lo();
            const Rational img_hi = a - 1 / r.hi();
            int hits = 0;
            for (int j = 0; j < 3; ++j) {
                const auto& s = orbit.roots[static_cast<std::size_t>(j)];
                if (!(s.hi() < img_lo || s.lo() > img_hi)) {
                    ++hits;
                    orbit.image[static_cast<std::size_t>(i)] = j;
                }
            }
            resolved = hits == 1;
        }
        if (resolved) {
            const auto& img = orbit.image;
            if (img[0] == 0 || img[img[0]] == 0 || img[img[img[0]]] != 0) {
                throw std::logic_error("Galois map is not a 3-cycle on the roots");
            }
            return orbit;
        }
        for (auto& r : orbit.roots) r.bisect();
    }
    throw std::logic_error("could not separate the Galois images of the roots");
}

RootSeries q_roots(const RootOrbit& orbit, int order, const StabilizationOptions& options, bool parallel) {
    auto one = [&](std::size_t i) {
        CFStream stream = CFStream::from_algebraic(orbit.roots[i]);
        return q_real(stream, order, options);
    };
    if (!parallel) return {one(0), one(1), one(2)};
    std::array<std::future<TruncatedLaurentSeries>, 3> jobs;
    for (std::size_t i = 0; i < 3; ++i) jobs[i] = std::async(std::launch::async, one, i);
    return {jobs[0].get(), jobs[1].get(), jobs[2].get()};
}

RootSeries q_roots(const CubicFamily& f, int order, const StabilizationOptions& options, bool parallel) {
    return q_roots(root_orbit(f), order, options, parallel);
}

TruncatedLaurentSeries qrel_transport(const TruncatedLaurentSeries& x, const CubicFamily& f) {
    return apply_mobius_q(galois_map(f).quantum, x);
}

VietaResiduals vieta_residuals(const RootSeries& xs, const CubicFamily& f) {
    const auto& [x1, x2, x3] = xs;
    const auto e1 = x1 + x2 + x3;
    const auto e2 = x1 * x2 + x2 * x3 + x3 * x1;
    const auto e3 = x1 * x2 * x3;
    if (f.sign == FamilySign::minus) {
        return {e3 + Poly(1), e2 - e1 + Poly(3)};
    }
    return {e3 + (-mono(1, -3)), e2 + mono(1, -1) * e1 + mono(3, -2)};
}

TruncatedLaurentSeries defect_operator(const CubicFamily& f, const TruncatedLaurentSeries& x) {
    const int n = x.order() + 8;
    const Rational b(f.b);
    if (f.sign == FamilySign::minus) {
        const auto num = horner(x, {exact(Poly(1), n), exact(Poly(b - 3), n), exact(Poly(-b), n)});
        return num / (x * (x + Poly(-1)));
    }
    const Poly c1 = -(mono(b, -1) + mono(3, -2));
    const auto num = horner(x, {exact(-mono(1, -3), n), exact(c1, n), exact(Poly(-b), n)});
    return num / (x * (x + mono(1, -1)));
}

TruncatedLaurentSeries b_series(const CubicFamily& f, int order, const BSeriesOptions& options) {
    if (options.route == BRoute::sum) {
        const int work = std::max(order, options.work_order);
        const auto xs = q_roots(f, work, options.stabilization);
        return (xs[0] + xs[1] + xs[2]).truncated(order);
    }
    if (options.root_index < 1 || options.root_index > 3) throw InvalidInput("root index must be 1, 2 or 3");
    const auto orbit = root_orbit(f);
    const auto& root = orbit.roots[static_cast<std::size_t>(options.root_index - 1)];
    int work = std::max(order + 4, options.work_order);
    for (int attempt = 0; attempt < 16; ++attempt) {
        CFStream stream = CFStream::from_algebraic(root);
        const auto x = q_real(stream, work, options.stabilization);
        const auto result = defect_operator(f, x) + Poly(Rational(f.b));
        if (result.order() >= order) return result.truncated(order);
        work += order - result.order() + 2;
    }
    throw InsufficientPrecision("defect route did not reach order " + std::to_string(order));
}

TruncatedLaurentSeries QuantumCubic::coefficient(int k) const {
    if (k == 3) return TruncatedLaurentSeries::from_polynomial(Poly(1), B.order() + 8);
    const auto i = static_cast<std::size_t>(k);
    const int n = B.order() + 8;
    return alpha.at(i) * B + exact(beta.at(i), n);
}

TruncatedLaurentSeries QuantumCubic::evaluate(const TruncatedLaurentSeries& x) const {
    return horner(x, {coefficient(0), coefficient(1), coefficient(2)});
}

Poly QuantumCubic::classical_limit() const {
    Poly out = Poly::monomial(1, 3);
    for (std::size_t k = 0; k < 3; ++k) {
        const Rational c = alpha[k].evaluate(1) * family.b + beta[k].evaluate(1);
        out = out + Poly::monomial(c, static_cast<int>(k));
    }
    return out;
}

std::string QuantumCubic::symbolic() const {
    if (family.sign == FamilySign::minus) return "X^3 - B X^2 + (B - 3) X + 1";
    return "X^3 - B X^2 - (q^-1 B + 3q^-2) X - q^-3";
}

QuantumCubic quantum_cubic(const CubicFamily& f, int order, const BSeriesOptions& options) {
    QuantumCubic c;
    c.family = f;
    c.order = order;
    c.B = b_series(f, order, options);
    if (f.sign == FamilySign::minus) {
        c.alpha = {Poly(), Poly(1), Poly(-1)};
        c.beta = {Poly(1), Poly(-3), Poly()};
    } else {
        c.alpha = {Poly(), -mono(1, -1), Poly(-1)};
        c.beta = {-mono(1, -3), -mono(3, -2), Poly()};
    }
    return c;
}

}  // namespace qreal
