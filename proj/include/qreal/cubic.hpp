#pragma once

#include <array>
#include <string>
#include <string_view>

#include "qreal/algebraic.hpp"
#include "qreal/modular.hpp"
#include "qreal/qreal.hpp"
#include "qreal/series.hpp"

namespace qreal {

enum class FamilySign { minus, plus };

/// x^3 - b x^2 + (b-3) x + 1 (minus) or x^3 - b x^2 - (b+3) x - 1 (plus).
struct CubicFamily {
    FamilySign sign = FamilySign::minus;
    long b = 0;

    /// "minus" / "plus"; anything else throws InvalidInput.
    static FamilySign parse_sign(std::string_view text);
    std::string name() const;
};

LaurentPolynomial family_polynomial(const CubicFamily& f);
/// 18abcd - 4b^3 d + b^2 c^2 - 4ac^3 - 27a^2 d^2; throws InvalidInput unless p
/// is an ordinary polynomial of degree 3.
Integer cubic_discriminant(const LaurentPolynomial& p);

struct GaloisMap {
    IntMatrix classical;
    QMatrix quantum;
};
/// minus: x -> (x-1)/x, from TS; plus: x -> -(x+1)/x, from T^{-1}S.
GaloisMap galois_map(const CubicFamily& f);

/// Real roots in descending order. image[i] is the index of the root that the
/// Galois map sends roots[i] to.
struct RootOrbit {
    CubicFamily family;
    std::array<AlgebraicNumber, 3> roots;
    std::array<int, 3> image{};
};
/// Certified exactly: the map preserves the polynomial's root set and interval
/// images pin down where each root goes.
RootOrbit root_orbit(const CubicFamily& f);

using RootSeries = std::array<TruncatedLaurentSeries, 3>;

/// [x_i]_q for the three roots, each exact below `order`. The three
/// stabilizations run concurrently when `parallel` is set.
RootSeries q_roots(const CubicFamily& f, int order, const StabilizationOptions& options = {}, bool parallel = true);
/// Same, for an orbit that is already known.
RootSeries q_roots(const RootOrbit& orbit, int order, const StabilizationOptions& options = {}, bool parallel = true);

/// Image of X under the q-deformed Galois map.
TruncatedLaurentSeries qrel_transport(const TruncatedLaurentSeries& x, const CubicFamily& f);

struct VietaResiduals {
    /// X1 X2 X3 - (-1) or X1 X2 X3 - q^-3.
    TruncatedLaurentSeries product;
    /// e2 - (e1 - 3) or e2 + q^-1 e1 + 3 q^-2.
    TruncatedLaurentSeries pairs;
    bool vanish() const { return product.is_zero() && pairs.is_zero(); }
};
VietaResiduals vieta_residuals(const RootSeries& xs, const CubicFamily& f);

/// E(X): the family polynomial over X(X-1) (minus) or the quantum plus
/// polynomial at B = b over X(X+q^-1) (plus).
TruncatedLaurentSeries defect_operator(const CubicFamily& f, const TruncatedLaurentSeries& x);

enum class BRoute { sum, defect };

struct BSeriesOptions {
    BRoute route = BRoute::sum;
    /// 1-based root used by the defect route.
    int root_index = 1;
    /// Lower bound for the working order of the root series.
    int work_order = 0;
    StabilizationOptions stabilization;
};

/// B(q) = X1 + X2 + X3, or E(X_i) + b; exact below `order`.
TruncatedLaurentSeries b_series(const CubicFamily& f, int order, const BSeriesOptions& options = {});

/// X^3 + c2 X^2 + c1 X + c0 with each c_k = alpha_k(q) B + beta_k(q).
struct QuantumCubic {
    CubicFamily family;
    int order = 0;
    TruncatedLaurentSeries B;
    std::array<LaurentPolynomial, 3> alpha;  // for c0, c1, c2
    std::array<LaurentPolynomial, 3> beta;

    TruncatedLaurentSeries coefficient(int k) const;
    TruncatedLaurentSeries evaluate(const TruncatedLaurentSeries& x) const;
    /// Substitutes B -> b and q -> 1.
    LaurentPolynomial classical_limit() const;
    /// "X^3 - B X^2 - (q^-1 B + 3q^-2) X - q^-3".
    std::string symbolic() const;
};
QuantumCubic quantum_cubic(const CubicFamily& f, int order, const BSeriesOptions& options = {});

}  // namespace qreal
