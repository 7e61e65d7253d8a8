#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "qreal/ctable.hpp"
#include "qreal/cubic.hpp"
#include "qreal/errors.hpp"
#include "qreal/modular.hpp"
#include "qreal/qreal.hpp"
#include "qreal/serialize.hpp"
#include "qreal/verify.hpp"

#ifndef QREAL_GOLDEN_DIR
#define QREAL_GOLDEN_DIR "golden"
#endif

namespace qreal::cli {

namespace {

using json = nlohmann::json;
using Poly = LaurentPolynomial;

enum class Format { text, json, csv };

struct FormatFlags {
    bool json = false;
    bool csv = false;
    bool text = false;

    void attach(CLI::App* app) {
        auto* j = app->add_flag("--json", json, "JSON output");
        auto* c = app->add_flag("--csv", csv, "CSV output");
        auto* t = app->add_flag("--text", text, "plain text output (default)");
        j->excludes(c)->excludes(t);
        c->excludes(t);
    }
    Format get() const { return json ? Format::json : csv ? Format::csv : Format::text; }
};

int work_order_from_env() {
    const char* raw = std::getenv("QREAL_WORK_ORDER");
    if (raw == nullptr || *raw == '\0') return 0;
    try {
        return std::stoi(raw);
    } catch (const std::exception&) {
        throw InvalidInput(std::string("QREAL_WORK_ORDER must be an integer, got '") + raw + "'");
    }
}

std::vector<std::string> split(const std::string& text, char sep = ',') {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

// "c_n,...,c_1,c_0", highest degree first.
Poly parse_minpoly(const std::string& text) {
    auto parts = split(text);
    if (parts.size() < 2) throw InvalidInput("--minpoly needs at least two coefficients");
    std::vector<Rational> ascending;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) ascending.emplace_back(parse_integer(*it));
    return Poly(0, std::move(ascending));
}

AlgebraicNumber parse_algebraic(const std::string& minpoly, const std::string& interval) {
    const Poly p = parse_minpoly(minpoly);
    const auto ends = split(interval);
    if (ends.size() != 2) throw InvalidInput("--interval needs lo,hi");
    return AlgebraicNumber(p, parse_rational(ends[0]), parse_rational(ends[1]));
}

std::vector<Integer> parse_integers(const std::string& text) {
    std::vector<Integer> out;
    for (const auto& s : split(text)) out.push_back(parse_integer(s));
    return out;
}

void check_order(int order) {
    if (order < 1) throw InvalidInput("--order must be at least 1");
}

json series_json(const TruncatedLaurentSeries& s) { return series_to_json(s); }

json with_schema(const std::string& command) { return {{"schema", kSchema}, {"command", command}}; }

std::string series_csv(const std::vector<std::pair<std::string, TruncatedLaurentSeries>>& columns) {
    int lo = 0;
    int hi = 0;
    bool first = true;
    for (const auto& [name, s] : columns) {
        lo = first ? s.valuation() : std::min(lo, s.valuation());
        hi = first ? s.order() : std::min(hi, s.order());
        first = false;
    }
    std::string out = "exponent";
    for (const auto& [name, s] : columns) out += "," + name;
    out += "\n";
    for (int e = lo; e < hi; ++e) {
        out += std::to_string(e);
        for (const auto& [name, s] : columns) out += "," + to_string(s.coefficient(e));
        out += "\n";
    }
    return out;
}

std::string approx_text(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

json interval_json(const AlgebraicNumber& a) { return json::array({to_string(a.lo()), to_string(a.hi())}); }

struct Context {
    std::ostream& out;
    int work_order;
};

// ---- qrat

struct QratArgs {
    std::string x;
    int expand = 0;
    FormatFlags format;
};

void run_qrat(const QratArgs& a, Context& ctx) {
    const Rational x = parse_rational(a.x);
    const auto f = q_rational(x);
    if (a.format.get() == Format::json) {
        json j = with_schema("qrat");
        j["input"] = to_string(x);
        j["text"] = f.to_string();
        j["numerator"] = f.numerator().to_string(true);
        j["denominator"] = f.denominator().to_string(true);
        if (x >= 0) {
            json cf = json::array();
            for (const auto& t : cf_even(x)) cf.push_back(to_string(t));
            j["cf_even"] = cf;
        }
        if (a.expand > 0) j["expansion"] = series_json(expand(f, a.expand));
        ctx.out << j.dump(2) << '\n';
        return;
    }
    if (a.format.get() == Format::csv) {
        if (a.expand <= 0) throw InvalidInput("--csv needs --expand N");
        ctx.out << series_csv({{"coeff", expand(f, a.expand)}});
        return;
    }
    ctx.out << f.to_string() << '\n';
    if (a.expand > 0) ctx.out << expand(f, a.expand).to_string() << '\n';
}

// ---- qreal

struct QrealArgs {
    std::string minpoly;
    std::string interval;
    std::string cf;
    std::string repeat;
    std::string rational;
    int order = 31;
    int margin = 3;
    std::size_t budget = 200;
    FormatFlags format;
};

void run_qreal(const QrealArgs& a, Context& ctx) {
    check_order(a.order);
    const int sources = !a.minpoly.empty() + !a.cf.empty() + !a.rational.empty();
    if (sources != 1) throw InvalidInput("give exactly one of --minpoly/--interval, --cf [--repeat], --rational");
    CFStream stream = [&] {
        if (!a.minpoly.empty()) {
            if (a.interval.empty()) throw InvalidInput("--minpoly needs --interval lo,hi");
            return CFStream::from_algebraic(parse_algebraic(a.minpoly, a.interval));
        }
        if (!a.cf.empty()) return CFStream::from_terms(parse_integers(a.cf), parse_integers(a.repeat));
        return CFStream::from_rational(parse_rational(a.rational));
    }();
    const int work = std::max(a.order, ctx.work_order);
    const auto result = q_real_stabilized(stream, work, StabilizationOptions{a.margin, a.budget});
    const auto s = result.series.truncated(a.order);
    switch (a.format.get()) {
        case Format::json: {
            json j = with_schema("qreal");
            json terms = json::array();
            for (const auto& t : stream.prefix()) terms.push_back(to_string(t));
            j["shift"] = stream.shift();
            j["partial_quotients"] = terms;
            j["quotients_used"] = result.quotients_used;
            j["integral"] = s.is_integral();
            j["series"] = series_json(s);
            ctx.out << j.dump(2) << '\n';
            break;
        }
        case Format::csv: ctx.out << series_csv({{"coeff", s}}); break;
        case Format::text: ctx.out << s.to_string() << '\n'; break;
    }
}

// ---- quad

struct QuadArgs {
    std::string minpoly;
    std::string interval;
    int order = 20;
    FormatFlags format;
};

void run_quad(const QuadArgs& a, Context& ctx) {
    check_order(a.order);
    const auto alpha = parse_algebraic(a.minpoly, a.interval);
    const auto form = q_quadratic_closed(alpha);
    const auto s = form.expand(a.order);
    switch (a.format.get()) {
        case Format::json: {
            json j = with_schema("quad");
            j["Q"] = form.Q.to_string(true);
            j["R"] = form.R.to_string(true);
            j["S"] = form.S.to_string(true);
            j["R_palindromic"] = form.R.is_palindromic();
            j["fixing_matrix"] = form.fixing.to_string();
            j["word"] = form.word.to_string();
            j["fixing_matrix_q"] = form.fixing_q.to_string();
            j["series"] = series_json(s);
            ctx.out << j.dump(2) << '\n';
            break;
        }
        case Format::csv: ctx.out << series_csv({{"coeff", s}}); break;
        case Format::text:
            ctx.out << "[x]_q = " << form.to_string() << '\n'
                    << "Q = " << form.Q.to_string(true) << '\n'
                    << "R = " << form.R.to_string(true) << '\n'
                    << "S = " << form.S.to_string(true) << '\n'
                    << "fixing matrix " << form.fixing.to_string() << " = " << form.word.to_string() << '\n'
                    << "q-deformed " << form.fixing_q.to_string() << '\n'
                    << s.to_string() << '\n';
            break;
    }
}

// ---- cubic / bseries

struct FamilyArgs {
    std::string family;
    long b = 0;
    int order = 31;
    std::string route = "sum";
    int root_index = 1;

    CubicFamily get() const { return {CubicFamily::parse_sign(family), b}; }
    BRoute parsed_route() const {
        if (route == "sum") return BRoute::sum;
        if (route == "defect") return BRoute::defect;
        throw InvalidInput("--b-route must be sum or defect");
    }
};

void add_family_options(CLI::App* app, FamilyArgs& a) {
    app->add_option("--family", a.family, "minus or plus")->required()->check(CLI::IsMember({"minus", "plus"}));
    app->add_option("--b", a.b, "family parameter")->required();
    app->add_option("--order", a.order, "series known exactly below q^order")->capture_default_str();
}

struct CubicArgs {
    FamilyArgs family;
    bool check_vieta = false;
    bool with_b = false;
    FormatFlags format;
};

void run_cubic(const CubicArgs& a, Context& ctx) {
    check_order(a.family.order);
    const auto f = a.family.get();
    auto orbit = root_orbit(f);
    const int work = std::max(a.family.order, ctx.work_order);
    auto xs = q_roots(orbit, work);
    for (auto& x : xs) x = x.truncated(a.family.order);
    std::optional<VietaResiduals> vieta;
    if (a.check_vieta) vieta = vieta_residuals(xs, f);
    std::optional<TruncatedLaurentSeries> b;
    if (a.with_b) {
        BSeriesOptions opts{a.family.parsed_route(), a.family.root_index, ctx.work_order, {}};
        b = b_series(f, a.family.order, opts);
    }
    const auto g = galois_map(f);

    switch (a.format.get()) {
        case Format::json: {
            json j = with_schema("cubic");
            j["family"] = f.sign == FamilySign::minus ? "minus" : "plus";
            j["b"] = f.b;
            j["order"] = a.family.order;
            j["polynomial"] = family_polynomial(f).to_string(true, "x");
            j["discriminant"] = to_string(cubic_discriminant(family_polynomial(f)));
            j["galois_map"] = {{"classical", g.classical.to_string()}, {"quantum", g.quantum.to_string()}};
            json roots = json::array();
            for (std::size_t i = 0; i < 3; ++i) {
                roots.push_back({{"index", i + 1},
                                 {"interval", interval_json(orbit.roots[i])},
                                 {"approx", approx_text(orbit.roots[i].approximate())},
                                 {"galois_image", orbit.image[i] + 1},
                                 {"series", series_json(xs[i])}});
            }
            j["roots"] = roots;
            if (vieta) {
                j["vieta"] = {{"product_residual", series_json(vieta->product)},
                              {"pairs_residual", series_json(vieta->pairs)},
                              {"vanish", vieta->vanish()}};
            }
            if (b) j["b_series"] = {{"route", a.family.route}, {"root_index", a.family.root_index}, {"series", series_json(*b)}};
            ctx.out << j.dump(2) << '\n';
            break;
        }
        case Format::csv: {
            std::vector<std::pair<std::string, TruncatedLaurentSeries>> cols{{"X1", xs[0]}, {"X2", xs[1]}, {"X3", xs[2]}};
            if (b) cols.emplace_back("B", *b);
            ctx.out << series_csv(cols);
            break;
        }
        case Format::text: {
            ctx.out << "family " << f.name() << ": " << family_polynomial(f).to_string(false, "x") << '\n';
            for (std::size_t i = 0; i < 3; ++i) {
                ctx.out << "x" << i + 1 << " ~ " << approx_text(orbit.roots[i].approximate()) << "  X" << i + 1
                        << "(q) = " << xs[i].to_string() << '\n';
            }
            for (std::size_t i = 0; i < 3; ++i) {
                ctx.out << "galois: x" << i + 1 << " -> x" << orbit.image[i] + 1 << '\n';
            }
            if (vieta) {
                ctx.out << "vieta product residual: " << vieta->product.to_string() << '\n'
                        << "vieta pairs residual: " << vieta->pairs.to_string() << '\n'
                        << "vieta: " << (vieta->vanish() ? "residuals vanish" : "NONZERO residual") << '\n';
            }
            if (b) ctx.out << "B(q) [" << a.family.route << "] = " << b->to_string() << '\n';
            break;
        }
    }
}

struct BseriesArgs {
    FamilyArgs family;
    FormatFlags format;
};

void run_bseries(const BseriesArgs& a, Context& ctx) {
    check_order(a.family.order);
    const auto f = a.family.get();
    BSeriesOptions opts{a.family.parsed_route(), a.family.root_index, ctx.work_order, {}};
    const auto b = b_series(f, a.family.order, opts);
    switch (a.format.get()) {
        case Format::json: {
            json j = with_schema("bseries");
            j["family"] = f.sign == FamilySign::minus ? "minus" : "plus";
            j["b"] = f.b;
            j["route"] = a.family.route;
            if (opts.route == BRoute::defect) j["root_index"] = a.family.root_index;
            j["series"] = series_json(b);
            ctx.out << j.dump(2) << '\n';
            break;
        }
        case Format::csv: ctx.out << series_csv({{"coeff", b}}); break;
        case Format::text: ctx.out << b.to_string() << '\n'; break;
    }
}

// ---- ctable / figdata

struct CtableArgs {
    std::string series;
    int lmax = 12;
    int mmax = 12;
    FormatFlags format;
};

void run_ctable(const CtableArgs& a, Context& ctx) {
    const auto s = read_series_file(a.series);
    const auto table = c_table(s, a.lmax, a.mmax);
    const auto block = zero_block_detect(table);
    switch (a.format.get()) {
        case Format::json: {
            json j = with_schema("ctable");
            json rows = json::array();
            for (int M = 0; M <= a.mmax; ++M) {
                json row = json::array();
                for (int L = 0; L <= a.lmax; ++L) row.push_back(to_string(table.at(L, M)));
                rows.push_back(row);
            }
            j["lmax"] = a.lmax;
            j["mmax"] = a.mmax;
            j["rows"] = rows;
            j["zero_block"] = block ? json{{"lambda", block->lambda}, {"mu", block->mu}} : json(nullptr);
            j["note"] = "a zero block inside a finite table is evidence of rationality, not a proof";
            ctx.out << j.dump(2) << '\n';
            break;
        }
        case Format::csv: ctx.out << table.to_csv(); break;
        case Format::text:
            ctx.out << "C(L/M), rows M = 0.." << a.mmax << ", columns L = 0.." << a.lmax << '\n' << table.to_csv();
            if (block) {
                ctx.out << "zero block from C(" << block->lambda << "/" << block->mu << ") (bounded evidence of rationality)\n";
            } else {
                ctx.out << "no zero block within the table (bounded evidence only)\n";
            }
            break;
    }
}

struct FigArgs {
    std::string series;
    int points = 0;
};

void run_figdata(const FigArgs& a, Context& ctx) {
    auto points = fig_export(read_series_file(a.series));
    if (a.points > 0 && a.points < static_cast<int>(points.size())) points.resize(static_cast<std::size_t>(a.points));
    ctx.out << fig_csv(points);
}

// ---- word / burau

struct WordArgs {
    std::string word;
    std::string matrix;
    std::string braid;
};

void run_word(const WordArgs& a, Context& ctx) {
    const int given = !a.word.empty() + !a.matrix.empty() + !a.braid.empty();
    if (given != 1) throw InvalidInput("give exactly one of --word, --matrix, --braid");
    if (!a.braid.empty()) {
        const auto m = burau_matrix(parse_braid(a.braid));
        ctx.out << "burau " << m.to_string() << '\n';
        return;
    }
    ModularWord w;
    if (!a.matrix.empty()) {
        const auto e = parse_integers(a.matrix);
        if (e.size() != 4) throw InvalidInput("--matrix needs a,b,c,d");
        w = decompose_psl2z(IntMatrix{e[0], e[1], e[2], e[3]});
    } else {
        w = ModularWord::parse(a.word);
    }
    ctx.out << "word " << (w.empty() ? "(empty)" : w.to_string()) << '\n'
            << "reduced " << (w.canonicalized().empty() ? "(empty)" : w.canonicalized().to_string()) << '\n'
            << "classical " << w.classical().to_string() << '\n'
            << "q-deformed " << word_matrix_q(w).to_string() << '\n';
}

// ---- verify-all

struct VerifyArgs {
    std::string golden = QREAL_GOLDEN_DIR;
    unsigned seed = 20240611;
    std::string write;
    int evidence_l = 12;
    int evidence_m = 12;
    bool serial = false;
};

int run_verify(const VerifyArgs& a, Context& ctx) {
    verify::Options o;
    o.golden_dir = a.golden;
    o.seed = a.seed;
    o.parallel = !a.serial;
    o.work_order = ctx.work_order;
    int failed = 0;
    for (int id = 1; id <= verify::kCriterionCount; ++id) {
        const auto r = verify::run_criterion(id, o);
        ctx.out << verify::format_line(r) << '\n' << std::flush;
        failed += !r.passed;
    }
    ctx.out << verify::rationality_evidence(o, a.evidence_l, a.evidence_m);
    if (!a.write.empty()) {
        verify::regenerate_golden(a.write, o);
        const auto diffs = verify::compare_golden(a.write, a.golden);
        ctx.out << "regenerated golden files in " << a.write << ": "
                << (diffs.empty() ? "all match the pinned copies" : std::to_string(diffs.size()) + " differences") << '\n';
        for (const auto& d : diffs) ctx.out << "  " << d << '\n';
    }
    ctx.out << verify::kCriterionCount - failed << "/" << verify::kCriterionCount << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}

void report_error(std::ostream& err, const char* kind, const std::string& message) {
    err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact q-deformed rationals, quadratic and cubic irrationals", "qreal-lab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "qreal-lab 0.1.0");

    QratArgs qrat;
    auto* qrat_cmd = app.add_subcommand("qrat", "q-deformed rational [x]_q as a rational function");
    qrat_cmd->add_option("x", qrat.x, "rational p/q")->required();
    qrat_cmd->add_option("--expand", qrat.expand, "also print the expansion below q^N");
    qrat.format.attach(qrat_cmd);

    QrealArgs qreal_args;
    auto* qreal_cmd = app.add_subcommand("qreal", "stabilized series [x]_q from a continued fraction");
    qreal_cmd->add_option("--minpoly", qreal_args.minpoly, "integer coefficients, highest degree first: c3,c2,c1,c0");
    qreal_cmd->add_option("--interval", qreal_args.interval, "isolating interval lo,hi");
    qreal_cmd->add_option("--cf", qreal_args.cf, "partial quotients a1,a2,...");
    qreal_cmd->add_option("--repeat", qreal_args.repeat, "periodic tail appended after --cf");
    qreal_cmd->add_option("--rational", qreal_args.rational, "exact rational p/q");
    qreal_cmd->add_option("--order", qreal_args.order, "series known exactly below q^order")->capture_default_str();
    qreal_cmd->add_option("--margin", qreal_args.margin, "consecutive convergents that must agree")->capture_default_str();
    qreal_cmd->add_option("--budget", qreal_args.budget, "partial quotients allowed")->capture_default_str();
    qreal_args.format.attach(qreal_cmd);

    QuadArgs quad;
    auto* quad_cmd = app.add_subcommand("quad", "closed form (Q + sqrt R)/S of a quadratic irrational");
    quad_cmd->add_option("--minpoly", quad.minpoly, "a,b,c for a x^2 + b x + c")->required();
    quad_cmd->add_option("--interval", quad.interval, "isolating interval lo,hi")->required();
    quad_cmd->add_option("--order", quad.order, "expansion order")->capture_default_str();
    quad.format.attach(quad_cmd);

    CubicArgs cubic;
    auto* cubic_cmd = app.add_subcommand("cubic", "q-deformed roots of a cyclic cubic");
    add_family_options(cubic_cmd, cubic.family);
    cubic_cmd->add_flag("--check-vieta", cubic.check_vieta, "report the Vieta residuals");
    auto* route_opt = cubic_cmd->add_option("--b-route", cubic.family.route, "also compute B(q): sum or defect");
    route_opt->check(CLI::IsMember({"sum", "defect"}));
    cubic_cmd->add_option("--root-index", cubic.family.root_index, "root used by the defect route")->check(CLI::Range(1, 3));
    cubic.format.attach(cubic_cmd);

    BseriesArgs bs;
    auto* bs_cmd = app.add_subcommand("bseries", "the invariant B(q) of a cyclic cubic family");
    add_family_options(bs_cmd, bs.family);
    bs_cmd->add_option("--route", bs.family.route, "sum or defect")->check(CLI::IsMember({"sum", "defect"}))->capture_default_str();
    bs_cmd->add_option("--root-index", bs.family.root_index, "root used by the defect route")->check(CLI::Range(1, 3));
    bs.format.attach(bs_cmd);

    CtableArgs ct;
    auto* ct_cmd = app.add_subcommand("ctable", "Hankel C-table of a series");
    ct_cmd->add_option("--series", ct.series, "series JSON file")->required()->check(CLI::ExistingFile);
    ct_cmd->add_option("--lmax", ct.lmax, "largest L")->capture_default_str()->check(CLI::NonNegativeNumber);
    ct_cmd->add_option("--mmax", ct.mmax, "largest M")->capture_default_str()->check(CLI::NonNegativeNumber);
    ct.format.attach(ct_cmd);

    FigArgs fig;
    auto* fig_cmd = app.add_subcommand("figdata", "signed-log coefficient data for plotting");
    fig_cmd->add_option("--series", fig.series, "series JSON file")->required()->check(CLI::ExistingFile);
    fig_cmd->add_option("--points", fig.points, "limit the number of rows");

    WordArgs word;
    auto* word_cmd = app.add_subcommand("word", "modular words, their q-deformation and Burau matrices");
    word_cmd->add_option("--word", word.word, "letters T, t (inverse) and S");
    word_cmd->add_option("--matrix", word.matrix, "decompose a,b,c,d with ad - bc = 1");
    word_cmd->add_option("--braid", word.braid, "braid word such as \"1 2 -1\"");

    VerifyArgs ver;
    auto* ver_cmd = app.add_subcommand("verify-all", "run every acceptance check against the golden data");
    ver_cmd->add_option("--golden", ver.golden, "directory with the pinned golden files")->capture_default_str();
    ver_cmd->add_option("--seed", ver.seed, "seed for the randomized checks")->capture_default_str();
    ver_cmd->add_option("--write", ver.write, "regenerate the golden files into DIR and compare");
    ver_cmd->add_option("--evidence-l", ver.evidence_l, "C-table width for the rationality evidence")->capture_default_str();
    ver_cmd->add_option("--evidence-m", ver.evidence_m, "C-table height for the rationality evidence")->capture_default_str();
    ver_cmd->add_flag("--serial", ver.serial, "compute root series one at a time");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        report_error(err, "usage", e.what());
        return 2;
    }

    try {
        Context ctx{out, work_order_from_env()};
        if (*qrat_cmd) run_qrat(qrat, ctx);
        if (*qreal_cmd) run_qreal(qreal_args, ctx);
        if (*quad_cmd) run_quad(quad, ctx);
        if (*cubic_cmd) {
            cubic.with_b = route_opt->count() > 0;
            run_cubic(cubic, ctx);
        }
        if (*bs_cmd) run_bseries(bs, ctx);
        if (*ct_cmd) run_ctable(ct, ctx);
        if (*fig_cmd) run_figdata(fig, ctx);
        if (*word_cmd) run_word(word, ctx);
        if (*ver_cmd) return run_verify(ver, ctx);
    } catch (const InvalidInput& e) {
        report_error(err, e.kind(), e.what());
        return 2;
    } catch (const Error& e) {
        report_error(err, e.kind(), e.what());
        return 1;
    }
    return 0;
}

}  // namespace qreal::cli
