#include "quap/gt.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>

namespace quap {

namespace {

// shifted label l_{r,i} = m[r][i] - i with 1-based i
long lshift(const GTPattern& p, int r, int i) { return p.m[r - 1][i - 1] - i; }

}  // namespace

bool IrrepLabel::valid() const {
  if (rows.empty()) return false;
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i - 1] < rows[i]) return false;
  return true;
}

int GTPattern::row_sum(int r) const {
  if (r <= 0) return 0;
  int s = 0;
  for (int v : m[r - 1]) s += v;
  return s;
}

bool GTPattern::betweenness_ok() const {
  for (int r = 1; r < n(); ++r)
    for (int i = 0; i < r; ++i)
      if (!(m[r][i] >= m[r - 1][i] && m[r - 1][i] >= m[r][i + 1])) return false;
  for (int r = 0; r < n(); ++r)
    for (int i = 0; i + 1 < static_cast<int>(m[r].size()); ++i)
      if (m[r][i] < m[r][i + 1]) return false;
  return true;
}

namespace {

void enumerate_rows(std::vector<std::vector<int>>& rows, int r, std::vector<GTPattern>& out) {
  if (r == 0) {
    GTPattern p;
    p.m = rows;
    std::reverse(p.m.begin(), p.m.end());
    out.push_back(std::move(p));
    return;
  }
  // rows is built top-down: rows[0] = label row (length n); fill the row of
  // length r below the one at rows.back().  Copy: push_back reallocates.
  const std::vector<int> upper = rows.back();
  std::vector<int> cur(r);
  std::function<void(int)> fill = [&](int i) {
    if (i == r) {
      rows.push_back(cur);
      enumerate_rows(rows, r - 1, out);
      rows.pop_back();
      return;
    }
    int hi = upper[i];
    int lo = upper[i + 1];
    for (int v = hi; v >= lo; --v) {
      cur[i] = v;
      fill(i + 1);
    }
  };
  fill(0);
}

}  // namespace

GTSpace::GTSpace(IrrepLabel label) : label_(std::move(label)) {
  if (!label_.valid()) throw std::invalid_argument("irrep label must be non-increasing");
  std::vector<std::vector<int>> rows = {label_.rows};
  enumerate_rows(rows, label_.n() - 1, patterns_);
  std::sort(patterns_.begin(), patterns_.end());
}

int GTSpace::index_of(const GTPattern& p) const {
  auto it = std::lower_bound(patterns_.begin(), patterns_.end(), p);
  if (it == patterns_.end() || !(*it == p)) return -1;
  return static_cast<int>(it - patterns_.begin());
}

long weyl_dimension(const IrrepLabel& label) {
  const int n = label.n();
  long num = 1, den = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      num *= label.rows[i - 1] - label.rows[j - 1] + j - i;
      den *= j - i;
    }
  return num / den;
}

namespace {

// Radicand of the Gel'fand-Tsetlin raising coefficient moving entry j of
// row k up by one, evaluated on the pattern p (before the move):
//   -( prod_{i=1}^{k+1} (l_{k+1,i} - l_{k,j}) * prod_{i=1}^{k-1} (l_{k-1,i} - l_{k,j} - 1) )
//   / prod_{i != j} ( (l_{k,i} - l_{k,j}) (l_{k,i} - l_{k,j} - 1) )
// The printed source coefficient is garbled; this is the standard form,
// validated by bracket closure and adjointness.  `upper` supplies row k+1
// when it is not part of the pattern (the ladder top row).
Rat gt_radicand(const GTPattern& p, int k, int j, const std::vector<int>* upper) {
  long lkj = lshift(p, k, j);
  Rat num(1), den(1);
  int upper_len = upper ? static_cast<int>(upper->size()) : k + 1;
  for (int i = 1; i <= upper_len; ++i) {
    long lup = upper ? (*upper)[i - 1] - i : lshift(p, k + 1, i);
    num *= Rat(lup - lkj);
  }
  for (int i = 1; i <= k - 1; ++i) num *= Rat(lshift(p, k - 1, i) - lkj - 1);
  for (int i = 1; i <= k; ++i) {
    if (i == j) continue;
    long lki = lshift(p, k, i);
    den *= Rat((lki - lkj) * (lki - lkj - 1));
  }
  return -num / den;
}

// pattern with entry (k, j) shifted by delta, or nullopt if invalid
std::optional<GTPattern> shifted(const GTPattern& p, int k, int j, int delta,
                                 bool check_upper = true) {
  GTPattern q = p;
  q.m[k - 1][j - 1] += delta;
  // row ordering within row k
  for (int i = 0; i + 1 < k; ++i)
    if (q.m[k - 1][i] < q.m[k - 1][i + 1]) return std::nullopt;
  // betweenness against neighbours that exist in the pattern
  for (int i = 0; i < k - 1; ++i)
    if (!(q.m[k - 1][i] >= q.m[k - 2][i] && q.m[k - 2][i] >= q.m[k - 1][i + 1]))
      return std::nullopt;
  if (check_upper && k < q.n())
    for (int i = 0; i < k; ++i)
      if (!(q.m[k][i] >= q.m[k - 1][i] && q.m[k - 1][i] >= q.m[k][i + 1]))
        return std::nullopt;
  return q;
}

}  // namespace

std::vector<std::vector<Radical>> sigma_z_exact(const GTSpace& space, int k, int kp) {
  const int n = space.label().n();
  if (k < 1 || k > n || std::abs(k - kp) > 1 || kp < 1 || kp > n)
    throw std::out_of_range("sigma_z index");
  const int d = space.dim();
  std::vector<std::vector<Radical>> m(d, std::vector<Radical>(d));

  for (int col = 0; col < d; ++col) {
    const GTPattern& p = space.pattern(col);
    if (kp == k) {
      m[col][col] = Radical(GRat(Rat(p.row_sum(k) - p.row_sum(k - 1))));
      continue;
    }
    // both band generators move row min(k, kp); the first index larger
    // means lowering
    int r = std::min(k, kp);
    if (r == n) continue;  // no row n+1 inside U(n)
    int dir = k < kp ? +1 : -1;
    for (int j = 1; j <= r; ++j) {
      auto target = shifted(p, r, j, dir);
      if (!target) continue;
      const GTPattern& base = dir > 0 ? p : *target;
      Rat rho = gt_radicand(base, r, j, nullptr);
      if (rho < 0) throw std::logic_error("negative compact radicand");
      Int pnum = numerator(rho), pden = denominator(rho);
      Radical coeff = Radical::root(pnum * pden, GRat(Rat(1, 1) / Rat(pden)));
      int row = space.index_of(*target);
      if (row < 0) continue;
      m[row][col] += coeff;
    }
  }
  return m;
}

Eigen::MatrixXd sigma_z(const GTSpace& space, int k, int kp) {
  // the diagonal/raising/lowering band; Z_{k,k+1} raises, adjoint lowers
  if (std::abs(k - kp) > 1) throw std::out_of_range("sigma_z is the band form");
  auto exact = sigma_z_exact(space, k, kp);
  const int d = space.dim();
  Eigen::MatrixXd m(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m(r, c) = exact[r][c].to_double_re();
  return m;
}

Eigen::MatrixXd sigma_z_full(const GTSpace& space, int a, int b) {
  if (std::abs(a - b) <= 1) return sigma_z(space, a, b);
  // [Z_ac, Z_cb] = Z_ab for distinct a, b, c in the compact block
  if (b > a) {
    Eigen::MatrixXd x = sigma_z_full(space, a, b - 1);
    Eigen::MatrixXd y = sigma_z(space, b - 1, b);
    return x * y - y * x;
  }
  Eigen::MatrixXd x = sigma_z_full(space, a, b + 1);
  Eigen::MatrixXd y = sigma_z(space, b + 1, b);
  return x * y - y * x;
}

namespace {

using ExactMat = std::vector<std::vector<Radical>>;

ExactMat emul(const ExactMat& a, const ExactMat& b) {
  const int d = static_cast<int>(a.size());
  ExactMat r(d, std::vector<Radical>(d));
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < d; ++j) {
        if (b[k][j].is_zero()) continue;
        r[i][j] += a[i][k] * b[k][j];
      }
    }
  return r;
}

ExactMat esub(ExactMat a, const ExactMat& b) {
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) a[i][j] -= b[i][j];
  return a;
}

ExactMat sigma_full_exact(const GTSpace& space, int a, int b) {
  if (std::abs(a - b) <= 1) return sigma_z_exact(space, a, b);
  if (b > a) {
    ExactMat x = sigma_full_exact(space, a, b - 1);
    ExactMat y = sigma_z_exact(space, b - 1, b);
    return esub(emul(x, y), emul(y, x));
  }
  ExactMat x = sigma_full_exact(space, a, b + 1);
  ExactMat y = sigma_z_exact(space, b + 1, b);
  return esub(emul(x, y), emul(y, x));
}

}  // namespace

std::vector<Int> un_casimirs(const IrrepLabel& label, int upto) {
  const int n = label.n();
  if (upto > n) throw std::invalid_argument("u(n) has n independent invariants");
  GTSpace space(label);
  const int d = space.dim();

  std::vector<std::vector<ExactMat>> full(n + 1, std::vector<ExactMat>(n + 1));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) full[a][b] = sigma_full_exact(space, a, b);

  std::vector<Int> out;
  for (int alpha = 1; alpha <= upto; ++alpha) {
    // cyclic contraction sum_{b1..balpha} Z_{b1 b2} ... Z_{balpha b1}
    ExactMat total(d, std::vector<Radical>(d));
    std::vector<int> idx(alpha, 1);
    while (true) {
      ExactMat prod = full[idx[0]][idx[(1) % alpha]];
      for (int t = 1; t < alpha; ++t) prod = emul(prod, full[idx[t]][idx[(t + 1) % alpha]]);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) total[i][j] += prod[i][j];
      int t = alpha - 1;
      while (t >= 0 && idx[t] == n) idx[t--] = 1;
      if (t < 0) break;
      ++idx[t];
    }
    // must be an integer scalar matrix
    Radical v = total[0][0];
    if (!v.is_rational()) throw std::logic_error("Casimir eigenvalue not rational");
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const Radical want = i == j ? v : Radical();
        if (!(total[i][j] == want))
          throw std::logic_error("Casimir operator is not scalar on the irrep");
      }
    GRat g = v.rational_part();
    if (!g.is_real() || denominator(g.re) != 1)
      throw std::logic_error("Casimir eigenvalue not an integer");
    out.push_back(numerator(g.re));
  }
  return out;
}

Int casimir_polynomial(const IrrepLabel& label, int alpha) {
  // Perelomov-Popov closed form with a_i = lambda_i + n - i:
  //   c_alpha = sum_i a_i^alpha prod_{j != i} (1 - 1/(a_i - a_j))
  const int n = label.n();
  Rat total(0);
  for (int i = 1; i <= n; ++i) {
    Rat ai(label.rows[i - 1] + n - i);
    Rat term(1);
    for (int p = 0; p < alpha; ++p) term *= ai;
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      Rat aj(label.rows[j - 1] + n - j);
      term *= Rat(1) - Rat(1) / (ai - aj);
    }
    total += term;
  }
  if (denominator(total) != 1) throw std::logic_error("Perelomov-Popov value not integral");
  return numerator(total);
}

Eigen::MatrixXd scalar_sigma(long d1, int index_count, bool noncompact, int a, int b) {
  (void)index_count;
  Eigen::MatrixXd m(1, 1);
  double eta = noncompact && a == 0 && b == 0 ? -1.0 : 1.0;
  m(0, 0) = a == b ? d1 * eta : 0.0;
  return m;
}

LadderSpace::LadderSpace(std::vector<int> top, int rungs) : top_(std::move(top)) {
  if (rungs < 3) throw std::invalid_argument("ladder needs at least three rungs");
  const int n = static_cast<int>(top_.size()) - 1;
  if (n < 1) throw std::invalid_argument("ladder top row must have n+1 entries");
  std::vector<int> base(top_.begin() + 1, top_.end());
  IrrepLabel base_label{base};
  if (!base_label.valid())
    throw std::invalid_argument("ladder base row must be non-increasing");

  // rung level r: all non-increasing rows >= base entrywise with excess r
  std::vector<std::vector<int>> current = {base};
  for (int r = 0; r < rungs; ++r) {
    for (auto& row : current) {
      rung_labels_.push_back(IrrepLabel{row});
      spaces_.push_back(std::make_shared<GTSpace>(rung_labels_.back()));
      offsets_.push_back(dim_);
      dim_ += spaces_.back()->dim();
    }
    std::vector<std::vector<int>> next;
    for (auto& row : current)
      for (int j = 0; j < n; ++j) {
        std::vector<int> up = row;
        up[j] += 1;
        if (j > 0 && up[j] > up[j - 1]) continue;
        if (std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
      }
    std::sort(next.begin(), next.end());
    current = std::move(next);
  }
}

int LadderSpace::rung_of(int row) const {
  for (int r = rungs() - 1; r >= 0; --r)
    if (row >= offsets_[r]) return r;
  return -1;
}

std::vector<int> LadderSpace::interior_rows() const {
  // exclude the lowest and highest rung LEVELS
  std::vector<int> base(top_.begin() + 1, top_.end());
  int base_sum = 0;
  for (int v : base) base_sum += v;
  int max_level = 0;
  for (int r = 0; r < rungs(); ++r) {
    int s = 0;
    for (int v : rung_labels_[r].rows) s += v;
    max_level = std::max(max_level, s - base_sum);
  }
  std::vector<int> rows;
  for (int r = 0; r < rungs(); ++r) {
    int s = 0;
    for (int v : rung_labels_[r].rows) s += v;
    int level = s - base_sum;
    if (level == 0 || level == max_level) continue;
    for (int i = 0; i < spaces_[r]->dim(); ++i) rows.push_back(offsets_[r] + i);
  }
  return rows;
}

namespace {

std::complex<double> branch_sqrt(const Rat& rho) {
  double v = to_double(rho);
  if (v >= 0) return std::sqrt(v);
  return {0.0, std::sqrt(-v)};
}

}  // namespace

Eigen::MatrixXcd u1n_sigma(const LadderSpace& ladder, int a, int b) {
  const int n = ladder.n();
  const int d = ladder.dim();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);

  if (a >= 1 && b >= 1) {
    for (int r = 0; r < ladder.rungs(); ++r) {
      Eigen::MatrixXd blk = sigma_z_full(ladder.rung(r), a, b);
      int off = ladder.offset(r);
      for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j) m(off + i, off + j) = blk(i, j);
    }
    return m;
  }

  int top_sum = 0;
  for (int v : ladder.top()) top_sum += v;

  if (a == 0 && b == 0) {
    for (int r = 0; r < ladder.rungs(); ++r) {
      int rsum = 0;
      for (int v : ladder.rung_label(r).rows) rsum += v;
      int off = ladder.offset(r);
      for (int i = 0; i < ladder.rung(r).dim(); ++i)
        m(off + i, off + i) = -(double(top_sum) - double(rsum));
    }
    return m;
  }

  if ((a == 0 && b == 1) || (a == 1 && b == 0)) {
    bool raise = a == 0;
    // moving entry j of the rung row changes the rung label; the
    // coefficient is the n-row Gel'fand-Tsetlin form against the fixed top
    for (int r = 0; r < ladder.rungs(); ++r) {
      const GTSpace& src = ladder.rung(r);
      for (int col = 0; col < src.dim(); ++col) {
        GTPattern p = src.pattern(col);
        for (int j = 1; j <= n; ++j) {
          auto target = shifted(p, n, j, raise ? +1 : -1, false);
          if (!target) continue;
          // locate the target rung
          IrrepLabel tl{target->m[n - 1]};
          int tr = -1;
          for (int q = 0; q < ladder.rungs(); ++q)
            if (ladder.rung_label(q).rows == tl.rows) {
              tr = q;
              break;
            }
          if (tr < 0) continue;  // outside the truncation
          const GTPattern& base = raise ? p : *target;
          Rat rho = gt_radicand(base, n, j, &ladder.top());
          int row = ladder.rung(tr).index_of(*target);
          if (row < 0) continue;
          m(ladder.offset(tr) + row, ladder.offset(r) + col) += branch_sqrt(rho);
        }
      }
    }
    return m;
  }

  // remaining 0-row generators by commutators: Z_{0,b} = [Z_{0,b-1}, Z_{b-1,b}]
  if (a == 0) {
    Eigen::MatrixXcd x = u1n_sigma(ladder, 0, b - 1);
    Eigen::MatrixXcd y = u1n_sigma(ladder, b - 1, b);
    return x * y - y * x;
  }
  // Z_{a,0} = [Z_{a,a-1}, Z_{a-1,0}] down to Z_{1,0}
  Eigen::MatrixXcd x = u1n_sigma(ladder, a, a - 1);
  Eigen::MatrixXcd y = u1n_sigma(ladder, a - 1, 0);
  return x * y - y * x;
}

}  // namespace quap
