#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qreal/number.hpp"
#include "qreal/series.hpp"

namespace qreal {

/// Determinant of a square integer matrix by fraction-free elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

/// Hankel determinant C(L/M) = det(c_{L-M+1+i+j}) for 0 <= i, j < M, where c_0
/// is the coefficient at the series' valuation and c_k = 0 for k < 0.
/// Throws InsufficientSeriesOrder when c_{L+M-1} is not known exactly.
Rational hankel_c(const TruncatedLaurentSeries& s, int L, int M);

class CTable {
  public:
    CTable(TruncatedLaurentSeries subject, int lmax, int mmax, std::vector<std::vector<Rational>> rows);

    const TruncatedLaurentSeries& subject() const { return subject_; }
    int lmax() const { return lmax_; }
    int mmax() const { return mmax_; }
    const Rational& at(int L, int M) const;

    /// Rows M = mmin..mmax, columns L = lmin..lmax, comma separated.
    std::string to_csv(int lmin = 0, int mmin = 0) const;

  private:
    TruncatedLaurentSeries subject_;
    int lmax_;
    int mmax_;
    std::vector<std::vector<Rational>> rows_;  // rows_[M][L]
};

/// All C(L/M) for 0 <= L <= lmax, 0 <= M <= mmax.
CTable c_table(const TruncatedLaurentSeries& s, int lmax, int mmax);

/// Corner (lambda, mu) of a zero block: C(L/M) = 0 for every computed entry
/// with L >= lambda and M >= mu.
struct ZeroBlock {
    int lambda;
    int mu;
};
/// Smallest block (by mu, then lambda) reaching both table edges and at least
/// 2x2 in size. Bounded evidence of rationality only, never a proof.
std::optional<ZeroBlock> zero_block_detect(const CTable& t);

struct FigPoint {
    int k;
    Rational coeff;
    double signed_log;
};
/// k = 1 at the valuation; signed_log = sign(c) ln|c| for |c| >= 1, else 0.
std::vector<FigPoint> fig_export(const TruncatedLaurentSeries& s);
/// "k,coeff,signedlog" rows, log column with 6 significant digits.
std::string fig_csv(const std::vector<FigPoint>& points);

}  // namespace qreal
