#include "qreal/modular.hpp"

#include <sstream>

#include "qreal/errors.hpp"

namespace qreal {

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

bool IntMatrix::projectively_equal(const IntMatrix& other) const {
    return *this == other || (a == -other.a && b == -other.b && c == -other.c && d == -other.d);
}

std::optional<Rational> IntMatrix::apply(const Rational& x) const {
    const Rational den = Rational(c) * x + Rational(d);
    if (den == 0) return std::nullopt;
    return (Rational(a) * x + Rational(b)) / den;
}

std::string IntMatrix::to_string() const {
    return "[[" + a.get_str() + ", " + b.get_str() + "], [" + c.get_str() + ", " + d.get_str() + "]]";
}

QMatrix::QMatrix(LaurentPolynomial a, LaurentPolynomial b, LaurentPolynomial c, LaurentPolynomial d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

QMatrix QMatrix::t_q() { return QMatrix(LaurentPolynomial::variable(), 1, 0, 1); }

QMatrix QMatrix::t_q_inverse() { return QMatrix(1, -1, 0, LaurentPolynomial::variable()); }

QMatrix QMatrix::s_q() { return QMatrix(0, -1, LaurentPolynomial::variable(), 0); }

QMatrix QMatrix::normalized() const {
    const LaurentPolynomial* entries[] = {&a_, &b_, &c_, &d_};
    bool any = false;
    int shift = 0;
    const LaurentPolynomial* first = nullptr;
    for (const auto* e : entries) {
        if (e->is_zero()) continue;
        if (!any || e->valuation() < shift) shift = e->valuation();
        if (!first) first = e;
        any = true;
    }
    if (!any) return *this;
    const Rational sign = first->lowest_coefficient() < 0 ? -1 : 1;
    auto fix = [&](const LaurentPolynomial& p) { return p.shifted(-shift).scaled(sign); };
    return QMatrix(fix(a_), fix(b_), fix(c_), fix(d_));
}

IntMatrix QMatrix::at_one() const {
    auto at = [](const LaurentPolynomial& p) {
        const Rational v = p.evaluate(1);
        if (!is_integer(v)) throw InvalidInput("matrix entry is not integral at q = 1");
        return v.get_num();
    };
    return {at(a_), at(b_), at(c_), at(d_)};
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
    return QMatrix(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                   x.c_ * y.b_ + x.d_ * y.d_);
}

std::string QMatrix::to_string() const {
    return "[[" + a_.to_string(true) + ", " + b_.to_string(true) + "], [" + c_.to_string(true) + ", " +
           d_.to_string(true) + "]]";
}

ModularWord ModularWord::parse(std::string_view text) {
    std::vector<Letter> letters;
    for (char ch : text) {
        switch (ch) {
            case 'T': letters.push_back(Letter::T); break;
            case 't': letters.push_back(Letter::TInv); break;
            case 'S': letters.push_back(Letter::S); break;
            case ' ': break;
            default: throw InvalidInput(std::string("unknown modular word letter '") + ch + "'");
        }
    }
    return ModularWord(std::move(letters));
}

ModularWord& ModularWord::append(const ModularWord& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

ModularWord& ModularWord::append_power(long k) {
    const Letter l = k >= 0 ? Letter::T : Letter::TInv;
    for (long i = 0; i < std::labs(k); ++i) letters_.push_back(l);
    return *this;
}

ModularWord ModularWord::canonicalized() const {
    static const std::vector<Letter> tststs = {Letter::T, Letter::S, Letter::T, Letter::S, Letter::T, Letter::S};
    std::vector<Letter> stack;
    for (Letter l : letters_) {
        stack.push_back(l);
        const std::size_t n = stack.size();
        if (n >= 2) {
            const Letter x = stack[n - 2];
            const Letter y = stack[n - 1];
            const bool cancels = (x == Letter::T && y == Letter::TInv) || (x == Letter::TInv && y == Letter::T) ||
                                 (x == Letter::S && y == Letter::S);
            if (cancels) {
                stack.resize(n - 2);
                continue;
            }
        }
        if (n >= 6 && std::equal(tststs.begin(), tststs.end(), stack.end() - 6)) stack.resize(n - 6);
    }
    return ModularWord(std::move(stack));
}

ModularWord ModularWord::inverse() const {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        switch (*it) {
            case Letter::T: out.push_back(Letter::TInv); break;
            case Letter::TInv: out.push_back(Letter::T); break;
            case Letter::S: out.push_back(Letter::S); break;
        }
    }
    return ModularWord(std::move(out));
}

IntMatrix ModularWord::classical() const {
    IntMatrix m;
    for (Letter l : letters_) {
        switch (l) {
            case Letter::T: m = m * IntMatrix{1, 1, 0, 1}; break;
            case Letter::TInv: m = m * IntMatrix{1, -1, 0, 1}; break;
            case Letter::S: m = m * IntMatrix{0, -1, 1, 0}; break;
        }
    }
    return m;
}

std::string ModularWord::to_string() const {
    std::string out;
    for (Letter l : letters_) out += l == Letter::T ? 'T' : (l == Letter::TInv ? 't' : 'S');
    return out;
}

QMatrix word_matrix_q_raw(const ModularWord& w) {
    QMatrix m;
    for (auto l : w.letters()) {
        switch (l) {
            case ModularWord::Letter::T: m = m * QMatrix::t_q(); break;
            case ModularWord::Letter::TInv: m = m * QMatrix::t_q_inverse(); break;
            case ModularWord::Letter::S: m = m * QMatrix::s_q(); break;
        }
    }
    return m;
}

QMatrix word_matrix_q(const ModularWord& w) { return word_matrix_q_raw(w).normalized(); }

ModularWord decompose_psl2z(const IntMatrix& input) {
    if (input.determinant() != 1) {
        throw InvalidInput("matrix " + input.to_string() + " is not in SL(2,Z)");
    }
    IntMatrix m = input;
    ModularWord w;
    // M = T^k S M' with M' = S^{-1} T^{-k} M; |lower-left| strictly decreases.
    while (m.c != 0) {
        Integer k;
        mpz_fdiv_q(k.get_mpz_t(), m.a.get_mpz_t(), m.c.get_mpz_t());
        w.append_power(k.get_si());
        m.a -= k * m.c;
        m.b -= k * m.d;
        w.append(ModularWord::Letter::S);
        m = IntMatrix{m.c, m.d, -m.a, -m.b};
    }
    const Integer n = m.a == 1 ? m.b : Integer(-m.b);
    w.append_power(n.get_si());
    return w;
}

TruncatedLaurentSeries apply_mobius_q(const QMatrix& m, const TruncatedLaurentSeries& s) {
    const auto num = (m.a() * s) + m.b();
    const auto den = (m.c() * s) + m.d();
    if (den.is_zero()) {
        throw InsufficientPrecision("Mobius denominator vanishes below q^" + std::to_string(den.order()));
    }
    return num / den;
}

std::optional<RationalFunctionQ> apply_mobius_q(const QMatrix& m, const RationalFunctionQ& f) {
    const auto& n = f.numerator();
    const auto& d = f.denominator();
    const LaurentPolynomial den = m.c() * n + m.d() * d;
    if (den.is_zero()) return std::nullopt;
    return RationalFunctionQ(m.a() * n + m.b() * d, den);
}

QMatrix burau_matrix(const std::vector<int>& braid) {
    const LaurentPolynomial q = LaurentPolynomial::variable();
    const LaurentPolynomial q_inv = LaurentPolynomial::monomial(1, -1);
    QMatrix m;
    for (int g : braid) {
        switch (g) {
            case 1: m = m * QMatrix(q, 1, 0, 1); break;
            case 2: m = m * QMatrix(1, 0, -q, q); break;
            case -1: m = m * QMatrix(q_inv, -q_inv, 0, 1); break;
            case -2: m = m * QMatrix(1, 0, 1, q_inv); break;
            default: throw InvalidInput("braid generator " + std::to_string(g) + " outside B_3");
        }
    }
    return m;
}

std::vector<int> parse_braid(std::string_view text) {
    std::vector<int> out;
    std::string token;
    auto flush = [&] {
        if (token.empty()) return;
        if (token == "1" || token == "2" || token == "-1" || token == "-2") {
            out.push_back(std::stoi(token));
        } else {
            throw InvalidInput("bad braid generator '" + token + "'");
        }
        token.clear();
    };
    for (char ch : text) {
        if (ch == ' ' || ch == ',') {
            flush();
        } else {
            token += ch;
        }
    }
    flush();
    return out;
}

}  // namespace qreal
