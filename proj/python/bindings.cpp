#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qreal/ctable.hpp"
#include "qreal/cubic.hpp"
#include "qreal/errors.hpp"
#include "qreal/modular.hpp"
#include "qreal/qreal.hpp"

namespace py = pybind11;
using namespace qreal;

namespace {

using Poly = LaurentPolynomial;
// (valuation, order, coefficients as decimal strings)
using SeriesTuple = std::tuple<int, int, std::vector<std::string>>;

SeriesTuple pack(const TruncatedLaurentSeries& s) {
    std::vector<std::string> coeffs;
    for (int e = s.valuation(); e < s.order(); ++e) coeffs.push_back(to_string(s.coefficient(e)));
    return {s.valuation(), s.order(), coeffs};
}

TruncatedLaurentSeries unpack(const SeriesTuple& t) {
    std::vector<Rational> coeffs;
    for (const auto& c : std::get<2>(t)) coeffs.push_back(parse_rational(c));
    return TruncatedLaurentSeries(std::get<0>(t), std::move(coeffs), std::get<1>(t));
}

std::vector<std::string> coefficient_strings(const Poly& p) {
    std::vector<std::string> out;
    if (p.is_zero()) return out;
    for (int e = 0; e <= p.degree(); ++e) out.push_back(to_string(p.coefficient(e)));
    return out;
}

// Highest degree first, as on the command line.
Poly poly_from(const std::vector<long long>& descending) {
    std::vector<Rational> c;
    for (auto it = descending.rbegin(); it != descending.rend(); ++it) c.emplace_back(Integer(std::to_string(*it)));
    return Poly(0, std::move(c));
}

CubicFamily family_from(const std::string& sign, long b) { return {CubicFamily::parse_sign(sign), b}; }

std::tuple<std::vector<std::string>, std::vector<std::string>, std::string> q_rational_py(const std::string& x) {
    const auto f = q_rational(parse_rational(x));
    return {coefficient_strings(f.numerator()), coefficient_strings(f.denominator()), f.to_string()};
}

SeriesTuple q_rational_series(const std::string& x, int order) { return pack(expand(q_rational(parse_rational(x)), order)); }

SeriesTuple q_real_algebraic(const std::vector<long long>& minpoly, const std::string& lo, const std::string& hi, int order,
                             int margin, std::size_t budget) {
    auto stream = CFStream::from_algebraic(AlgebraicNumber(poly_from(minpoly), parse_rational(lo), parse_rational(hi)));
    return pack(q_real(stream, order, {margin, budget}));
}

SeriesTuple q_real_cf(const std::vector<long long>& head, const std::vector<long long>& period, int order, int margin,
                      std::size_t budget) {
    auto to_ints = [](const std::vector<long long>& xs) {
        std::vector<Integer> out;
        for (auto x : xs) out.emplace_back(std::to_string(x));
        return out;
    };
    auto stream = CFStream::from_terms(to_ints(head), to_ints(period));
    return pack(q_real(stream, order, {margin, budget}));
}

py::dict quadratic_closed(const std::vector<long long>& minpoly, const std::string& lo, const std::string& hi, int order) {
    QuadraticClosedForm form;
    TruncatedLaurentSeries s;
    {
        py::gil_scoped_release release;
        form = q_quadratic_closed(AlgebraicNumber(poly_from(minpoly), parse_rational(lo), parse_rational(hi)));
        s = form.expand(order);
    }
    py::dict d;
    d["Q"] = coefficient_strings(form.Q);
    d["R"] = coefficient_strings(form.R);
    d["S"] = coefficient_strings(form.S);
    d["text"] = form.to_string();
    d["fixing"] = std::vector<std::string>{to_string(form.fixing.a), to_string(form.fixing.b), to_string(form.fixing.c),
                                           to_string(form.fixing.d)};
    d["word"] = form.word.to_string();
    d["series"] = pack(s);
    return d;
}

std::vector<SeriesTuple> cubic_roots(const std::string& sign, long b, int order) {
    const auto xs = q_roots(family_from(sign, b), order);
    return {pack(xs[0]), pack(xs[1]), pack(xs[2])};
}

std::vector<double> root_values(const std::string& sign, long b) {
    auto orbit = root_orbit(family_from(sign, b));
    return {orbit.roots[0].approximate(), orbit.roots[1].approximate(), orbit.roots[2].approximate()};
}

SeriesTuple b_series_py(const std::string& sign, long b, int order, const std::string& route, int root_index) {
    BSeriesOptions opts;
    if (route == "sum") {
        opts.route = BRoute::sum;
    } else if (route == "defect") {
        opts.route = BRoute::defect;
    } else {
        throw InvalidInput("route must be sum or defect");
    }
    opts.root_index = root_index;
    return pack(b_series(family_from(sign, b), order, opts));
}

std::pair<SeriesTuple, SeriesTuple> vieta_py(const std::string& sign, long b, int order) {
    const auto f = family_from(sign, b);
    const auto r = vieta_residuals(q_roots(f, order), f);
    return {pack(r.product), pack(r.pairs)};
}

std::vector<std::vector<std::string>> c_table_py(const SeriesTuple& s, int lmax, int mmax) {
    const auto table = c_table(unpack(s), lmax, mmax);
    std::vector<std::vector<std::string>> rows;
    for (int M = 0; M <= mmax; ++M) {
        std::vector<std::string> row;
        for (int L = 0; L <= lmax; ++L) row.push_back(to_string(table.at(L, M)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<std::pair<int, int>> zero_block_py(const SeriesTuple& s, int lmax, int mmax) {
    const auto block = zero_block_detect(c_table(unpack(s), lmax, mmax));
    if (!block) return std::nullopt;
    return std::pair{block->lambda, block->mu};
}

std::vector<std::tuple<int, std::string, double>> fig_export_py(const SeriesTuple& s) {
    std::vector<std::tuple<int, std::string, double>> out;
    for (const auto& p : fig_export(unpack(s))) out.emplace_back(p.k, to_string(p.coeff), p.signed_log);
    return out;
}

std::string discriminant_py(const std::vector<long long>& cubic) { return to_string(cubic_discriminant(poly_from(cubic))); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact q-deformed numbers: rationals, quadratic and cubic irrationals";

    auto base = py::register_exception<Error>(m, "QRealError", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<InsufficientPrecision>(m, "InsufficientPrecision", base.ptr());
    py::register_exception<StabilizationNotReached>(m, "StabilizationNotReached", base.ptr());
    py::register_exception<InsufficientSeriesOrder>(m, "InsufficientSeriesOrder", base.ptr());

    const auto nogil = py::call_guard<py::gil_scoped_release>();

    m.def("q_rational", &q_rational_py, py::arg("x"), nogil,
          "[x]_q as (numerator, denominator, text); coefficient lists are ascending");
    m.def("q_rational_series", &q_rational_series, py::arg("x"), py::arg("order"), nogil);
    m.def("q_real_algebraic", &q_real_algebraic, py::arg("minpoly"), py::arg("lo"), py::arg("hi"), py::arg("order") = 31,
          py::arg("margin") = 3, py::arg("budget") = 200, nogil);
    m.def("q_real_cf", &q_real_cf, py::arg("head"), py::arg("period") = std::vector<long long>{}, py::arg("order") = 31,
          py::arg("margin") = 3, py::arg("budget") = 200, nogil);
    m.def("quadratic_closed", &quadratic_closed, py::arg("minpoly"), py::arg("lo"), py::arg("hi"), py::arg("order") = 20);
    m.def("cubic_roots", &cubic_roots, py::arg("family"), py::arg("b"), py::arg("order") = 31, nogil);
    m.def("root_values", &root_values, py::arg("family"), py::arg("b"), nogil);
    m.def("b_series", &b_series_py, py::arg("family"), py::arg("b"), py::arg("order") = 31, py::arg("route") = "sum",
          py::arg("root_index") = 1, nogil);
    m.def("vieta_residuals", &vieta_py, py::arg("family"), py::arg("b"), py::arg("order") = 31, nogil);
    m.def("c_table", &c_table_py, py::arg("series"), py::arg("lmax"), py::arg("mmax"), nogil);
    m.def("zero_block", &zero_block_py, py::arg("series"), py::arg("lmax"), py::arg("mmax"), nogil);
    m.def("fig_export", &fig_export_py, py::arg("series"), nogil);
    m.def("cubic_discriminant", &discriminant_py, py::arg("coeffs"), nogil);
    m.def(
        "word_matrix_q", [](const std::string& w) { return word_matrix_q(ModularWord::parse(w)).to_string(); }, py::arg("word"),
        nogil);
    m.def(
        "decompose_psl2z",
        [](long a, long b, long c, long d) { return decompose_psl2z(IntMatrix{a, b, c, d}).to_string(); }, py::arg("a"),
        py::arg("b"), py::arg("c"), py::arg("d"), nogil);
    m.def(
        "burau_matrix", [](const std::vector<int>& braid) { return burau_matrix(braid).to_string(); }, py::arg("braid"), nogil);

#ifdef QREAL_VERSION
    m.attr("__version__") = QREAL_VERSION;
#else
    m.attr("__version__") = "dev";
#endif
}
