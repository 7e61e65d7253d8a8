#include "qreal/ctable.hpp"

#include <cstdio>
#include <sstream>
#include <utility>

#include "qreal/errors.hpp"

namespace qreal {

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = std::move(v);
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Rational hankel_c(const TruncatedLaurentSeries& s, int L, int M) {
    if (L < 0 || M < 0) throw InvalidInput("C(L/M) needs L, M >= 0");
    if (M == 0) return 1;
    const int top = L + M - 1;
    const int known = s.order() - s.valuation();
    if (top >= known) {
        throw InsufficientSeriesOrder("C(" + std::to_string(L) + "/" + std::to_string(M) + ") needs c_" +
                                      std::to_string(top) + " but only c_0..c_" + std::to_string(known - 1) +
                                      " are exact");
    }
    // Clear denominators so the elimination stays in the integers.
    Integer den = 1;
    for (const auto& c : s.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    const auto& cs = s.coeffs();
    auto c = [&](int k) -> Integer {
        if (k < 0 || k >= static_cast<int>(cs.size())) return 0;
        const Rational scaled = cs[static_cast<std::size_t>(k)] * den;
        return scaled.get_num();
    };
    std::vector<std::vector<Integer>> m(static_cast<std::size_t>(M), std::vector<Integer>(static_cast<std::size_t>(M)));
    for (int i = 0; i < M; ++i) {
        for (int j = 0; j < M; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = c(L - M + 1 + i + j);
    }
    Rational det(bareiss_determinant(std::move(m)));
    if (den != 1) {
        Integer scale;
        mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(M));
        det /= Rational(scale);
    }
    return det;
}

CTable::CTable(TruncatedLaurentSeries subject, int lmax, int mmax, std::vector<std::vector<Rational>> rows)
    : subject_(std::move(subject)), lmax_(lmax), mmax_(mmax), rows_(std::move(rows)) {}

const Rational& CTable::at(int L, int M) const {
    if (L < 0 || L > lmax_ || M < 0 || M > mmax_) {
        throw InvalidInput("C(" + std::to_string(L) + "/" + std::to_string(M) + ") is outside the table");
    }
    return rows_[static_cast<std::size_t>(M)][static_cast<std::size_t>(L)];
}

std::string CTable::to_csv(int lmin, int mmin) const {
    std::ostringstream out;
    for (int M = mmin; M <= mmax_; ++M) {
        for (int L = lmin; L <= lmax_; ++L) {
            if (L > lmin) out << ',';
            out << to_string(at(L, M));
        }
        out << '\n';
    }
    return out.str();
}

CTable c_table(const TruncatedLaurentSeries& s, int lmax, int mmax) {
    if (lmax < 0 || mmax < 0) throw InvalidInput("table bounds must be nonnegative");
    // Fail on the corner before doing any work.
    hankel_c(s, lmax, mmax);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(mmax) + 1);
    for (int M = 0; M <= mmax; ++M) {
        auto& row = rows[static_cast<std::size_t>(M)];
        for (int L = 0; L <= lmax; ++L) row.push_back(hankel_c(s, L, M));
    }
    return CTable(s, lmax, mmax, std::move(rows));
}

std::optional<ZeroBlock> zero_block_detect(const CTable& t) {
    for (int mu = 1; mu < t.mmax(); ++mu) {
        for (int lambda = 0; lambda < t.lmax(); ++lambda) {
            bool zero = true;
            for (int M = mu; M <= t.mmax() && zero; ++M) {
                for (int L = lambda; L <= t.lmax() && zero; ++L) zero = t.at(L, M) == 0;
            }
            if (zero) return ZeroBlock{lambda, mu};
        }
    }
    return std::nullopt;
}

std::vector<FigPoint> fig_export(const TruncatedLaurentSeries& s) {
    std::vector<FigPoint> out;
    int k = 1;
    for (int e = s.valuation(); e < s.order(); ++e) {
        const Rational c = s.coefficient(e);
        double value = 0;
        if (abs(c) > 1) {
            value = log_abs(c.get_num()) - log_abs(c.get_den());
            if (c < 0) value = -value;
        }
        out.push_back({k++, c, value});
    }
    return out;
}

std::string fig_csv(const std::vector<FigPoint>& points) {
    std::string out = "k,coeff,signedlog\n";
    char buf[64];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%.6g", p.signed_log);
        out += std::to_string(p.k) + "," + to_string(p.coeff) + "," + buf + "\n";
    }
    return out;
}

}  // namespace qreal
