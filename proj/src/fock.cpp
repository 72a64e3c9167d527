#include "quap/fock.hpp"

#include <stdexcept>

#include "quap/hermite.hpp"

namespace quap {

namespace {
using Triplets = std::vector<Eigen::Triplet<std::complex<double>>>;

SparseOp from_triplets(const Triplets& t, int dim) {
  SparseOp m(dim, dim);
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

const std::complex<double> kI(0.0, 1.0);
}  // namespace

TruncatedFock::TruncatedFock(int modes, int n_max, bool noncompact)
    : modes_(modes), n_max_(n_max), noncompact_(noncompact) {
  if (modes < 1 || n_max < 0) throw std::invalid_argument("bad Fock space shape");
  std::vector<int> k(modes, 0);
  // enumerate all tuples with total <= n_max, then sort graded-lex
  while (true) {
    states_.push_back(FockIndex{k});
    int pos = modes - 1;
    while (pos >= 0) {
      ++k[pos];
      int total = 0;
      for (int v : k) total += v;
      if (total <= n_max) break;
      k[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  std::sort(states_.begin(), states_.end());
  for (int r = 0; r < dim(); ++r) lookup_[states_[r].k] = r;
}

std::optional<int> TruncatedFock::row_of(const FockIndex& k) const {
  auto it = lookup_.find(k.k);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

int TruncatedFock::grade(int row) const {
  const FockIndex& s = states_[row];
  if (!noncompact_) return s.total();
  int g = -s.k[0];
  for (int m = 1; m < modes_; ++m) g += s.k[m];
  return g;
}

std::vector<int> TruncatedFock::grades() const {
  std::vector<int> gs;
  for (int r = 0; r < dim(); ++r) {
    int g = grade(r);
    if (std::find(gs.begin(), gs.end(), g) == gs.end()) gs.push_back(g);
  }
  std::sort(gs.begin(), gs.end());
  return gs;
}

std::vector<int> TruncatedFock::block_rows(int g) const {
  std::vector<int> rows;
  for (int r = 0; r < dim(); ++r)
    if (grade(r) == g) rows.push_back(r);
  return rows;
}

std::vector<int> TruncatedFock::interior(int d) const {
  std::vector<int> rows;
  for (int r = 0; r < dim(); ++r)
    if (states_[r].total() <= n_max_ - d) rows.push_back(r);
  return rows;
}

void RepConfig::validate() const {
  if (s == 0 || s == 1) throw std::invalid_argument("projective constant s must avoid 0 and 1");
  if (!(kappa > 0)) throw std::invalid_argument("central eigenvalue kappa must be positive");
}

namespace {

// mode position in the tuple for paper index a
int mode_of(const TruncatedFock& space, int a) {
  int m = space.noncompact() ? a : a - 1;
  if (m < 0 || m >= space.modes()) throw std::out_of_range("mode index");
  return m;
}

// unit ladders: raise[m] and lower[m] in the plain oscillator sense
SparseOp unit_shift(const TruncatedFock& space, int m, bool up) {
  Triplets t;
  for (int r = 0; r < space.dim(); ++r) {
    FockIndex k = space.state(r);
    if (up) {
      k.k[m] += 1;
      if (auto row = space.row_of(k)) t.emplace_back(*row, r, std::sqrt(double(k.k[m])));
    } else {
      if (k.k[m] == 0) continue;
      k.k[m] -= 1;
      if (auto row = space.row_of(k)) t.emplace_back(*row, r, std::sqrt(double(k.k[m] + 1)));
    }
  }
  return from_triplets(t, space.dim());
}

}  // namespace

SparseOp ladder(const TruncatedFock& space, int a, int sign, const RepConfig& cfg) {
  cfg.validate();
  int m = mode_of(space, a);
  bool time_mode = space.noncompact() && a == 0;
  bool up = sign > 0;
  if (time_mode) up = !up;  // A_0^+ lowers k_0, A_0^- raises it
  SparseOp op = unit_shift(space, m, up);
  return std::sqrt(cfg.kd()) * op;
}

SparseOp rho_z(const TruncatedFock& space, int a, int b, const RepConfig& cfg) {
  cfg.validate();
  SparseOp plus = ladder(space, a, +1, cfg);
  SparseOp minus = ladder(space, b, -1, cfg);
  double inv_s = 1.0 / cfg.sd();
  if (space.noncompact() && a == 0 && b == 0) {
    // number-ordered so the diagonal action is (kappa/s) k_0
    return inv_s * (minus * plus).eval();
  }
  return inv_s * (plus * minus).eval();
}

SparseOp rho_u(const TruncatedFock& space, const RepConfig& cfg) {
  const int lo = space.noncompact() ? 0 : 1;
  const int hi = lo + space.modes() - 1;
  SparseOp u(space.dim(), space.dim());
  for (int a = lo; a <= hi; ++a) {
    double eta = (space.noncompact() && a == 0) ? -1.0 : 1.0;
    u = (u + eta * rho_z(space, a, a, cfg)).eval();
  }
  return u;
}

SparseOp unit_position(const TruncatedFock& space, int a) {
  int m = mode_of(space, a);
  SparseOp up = unit_shift(space, m, true);
  SparseOp dn = unit_shift(space, m, false);
  return ((up + dn) / std::sqrt(2.0)).eval();
}

SparseOp unit_momentum(const TruncatedFock& space, int a) {
  int m = mode_of(space, a);
  SparseOp up = unit_shift(space, m, true);
  SparseOp dn = unit_shift(space, m, false);
  SparseOp p = (kI * (up - dn) / std::sqrt(2.0)).eval();
  if (space.noncompact() && a == 0) p = (-p).eval();  // swapped ladder roles
  return p;
}

SparseOp mode_phase(const TruncatedFock& space, bool spatial, bool time) {
  Triplets t;
  for (int r = 0; r < space.dim(); ++r) {
    const FockIndex& k = space.state(r);
    int count = 0;
    for (int m = 0; m < space.modes(); ++m) {
      bool is_time = space.noncompact() && m == 0;
      if ((is_time && time) || (!is_time && spatial)) count += k.k[m];
    }
    std::complex<double> phase = std::pow(kI, count % 4);
    t.emplace_back(r, r, phase);
  }
  return from_triplets(t, space.dim());
}

std::map<std::string, SparseOp> real_generators(const TruncatedFock& space,
                                                const RepConfig& cfg, CoordBasis basis) {
  cfg.validate();
  const int n = space.noncompact() ? space.modes() - 1 : space.modes();
  const double inv_s = 1.0 / cfg.sd();
  const double rt_k = std::sqrt(cfg.kd());

  auto X = [&](int a) { return (rt_k * unit_position(space, a)).eval(); };
  auto Y = [&](int a) { return (rt_k * unit_momentum(space, a)).eval(); };

  std::map<std::string, SparseOp> out;
  for (int i = 1; i <= n; ++i) {
    out["Q_" + std::to_string(i)] = X(i);
    out["P_" + std::to_string(i)] = Y(i);
  }
  // M_ab = (1/s)(X_a X_b + Y_a Y_b), L_ab = (1/s)(X_a Y_b - X_b Y_a); both
  // Hermitian since [X_a, Y_b] vanishes for a != b.
  auto Mop = [&](int a, int b) {
    return (inv_s * (X(a) * X(b) + Y(a) * Y(b))).eval();
  };
  auto Lop = [&](int a, int b) {
    return (inv_s * (X(a) * Y(b) - X(b) * Y(a))).eval();
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) out["M(" + std::to_string(i) + "," + std::to_string(j) + ")"] = Mop(i, j);
  if (n == 3) {
    out["J_1"] = Lop(3, 2);
    out["J_2"] = Lop(1, 3);
    out["J_3"] = Lop(2, 1);
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        out["J(" + std::to_string(i) + "," + std::to_string(j) + ")"] = Lop(i, j);
  }
  if (space.noncompact()) {
    out["T"] = X(0);
    out["E"] = Y(0);
    for (int i = 1; i <= n; ++i) {
      out["K_" + std::to_string(i)] = Lop(0, i);
      out["N_" + std::to_string(i)] = Mop(0, i);
    }
    out["R"] = (0.5 * Mop(0, 0)).eval();
  }

  // Basis choice: conjugate by the mode phases that rotate (q,p) -> (p,-q)
  // on the selected modes.
  bool spatial = basis == CoordBasis::MomentumTime || basis == CoordBasis::EnergyMomentum;
  bool time = basis == CoordBasis::EnergyPosition || basis == CoordBasis::EnergyMomentum;
  if (spatial || time) {
    SparseOp phi = mode_phase(space, spatial, time);
    SparseOp phi_dag = phi.adjoint();
    for (auto& [name, op] : out) op = (phi * op * phi_dag).eval();
  }
  return out;
}

double interior_residual(const TruncatedFock& space, const SparseOp& op, int d) {
  DenseOp dense = DenseOp(op);
  double worst = 0;
  for (int c : space.interior(d))
    worst = std::max(worst, dense.col(c).cwiseAbs().maxCoeff());
  return worst;
}

std::vector<std::pair<double, double>> degenerate_limit_probe(const TruncatedFock& space,
                                                              const RepConfig& base,
                                                              const std::vector<Rat>& kappas) {
  std::vector<std::pair<double, double>> out;
  for (const Rat& kap : kappas) {
    RepConfig cfg = base;
    cfg.kappa = kap;
    cfg.validate();  // kappa = 0 rejected by the invariant
    auto gens = real_generators(space, cfg, CoordBasis::PositionTime);
    SparseOp comm = gens.at("Q_1") * gens.at("P_1") - gens.at("P_1") * gens.at("Q_1");
    auto rows = space.interior(2);
    DenseOp dense = DenseOp(comm);
    DenseOp block(rows.size(), rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < rows.size(); ++j) block(i, j) = dense(rows[i], rows[j]);
    double norm = block.operatorNorm();
    out.emplace_back(to_double(kap), norm);
  }
  return out;
}

namespace {

// Differential-form oracle: per-mode words of position/derivative steps
// evaluated through the exact Hermite recurrences.
struct ModeOp {
  // sequence applied right-to-left: 'q' multiply, 'd' differentiate
  std::string word;
};

HermiteExpansion apply_word(const std::string& word, int k) {
  HermiteExpansion e = HermiteExpansion::basis(k);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    e = *it == 'q' ? e.apply_position() : e.apply_derivative();
  return e;
}

// matrix element <j| word |k> for a single mode
std::complex<double> mode_element(const std::string& word, int j, int k,
                                  std::complex<double> scale) {
  HermiteExpansion e = apply_word(word, k);
  auto it = e.coeff.find(j);
  if (it == e.coeff.end()) return {};
  return scale * std::complex<double>(it->second.to_double_re(), it->second.to_double_im());
}

}  // namespace

double coordinate_check(const TruncatedFock& space, const RepConfig& cfg,
                        const std::string& op_name) {
  auto gens = real_generators(space, cfg, CoordBasis::PositionTime);
  auto it = gens.find(op_name);
  if (it == gens.end()) throw std::invalid_argument("unknown generator " + op_name);
  DenseOp built = DenseOp(it->second);

  const int n = space.noncompact() ? space.modes() - 1 : space.modes();
  const double rt_k = std::sqrt(cfg.kd());
  const double inv_s = 1.0 / cfg.sd();

  // op = sum of terms: coefficient x per-mode words; momentum = -i d/dx and
  // the swapped time momentum carries the opposite sign.
  struct Term {
    std::complex<double> coeff;
    std::map<int, std::string> words;  // mode -> word
  };
  std::vector<Term> terms;
  auto xw = [&](int a) { return std::pair<int, std::string>{mode_of(space, a), "q"}; };
  auto yw = [&](int a) { return std::pair<int, std::string>{mode_of(space, a), "d"}; };
  auto ysign = [&](int a) {
    std::complex<double> s = -kI;  // p = -i d/dx
    if (space.noncompact() && a == 0) s = kI;
    return s;
  };

  auto add1 = [&](std::complex<double> c, std::pair<int, std::string> w) {
    Term t;
    t.coeff = c;
    t.words[w.first] = w.second;
    terms.push_back(t);
  };
  auto add2 = [&](std::complex<double> c, std::pair<int, std::string> w1,
                  std::pair<int, std::string> w2) {
    Term t;
    t.coeff = c;
    if (w1.first == w2.first)
      t.words[w1.first] = w1.second + w2.second;
    else {
      t.words[w1.first] = w1.second;
      t.words[w2.first] = w2.second;
    }
    terms.push_back(t);
  };

  auto parse_pair = [&](size_t open) {
    int a = op_name[open + 1] - '0';
    int b = op_name[open + 3] - '0';
    return std::pair<int, int>{a, b};
  };

  if (op_name[0] == 'Q' || op_name[0] == 'T') {
    int a = op_name[0] == 'T' ? 0 : op_name[2] - '0';
    add1(rt_k, xw(a));
  } else if (op_name[0] == 'P' || op_name[0] == 'E') {
    int a = op_name[0] == 'E' ? 0 : op_name[2] - '0';
    add1(rt_k * ysign(a), yw(a));
  } else if (op_name[0] == 'M' || op_name[0] == 'R') {
    auto [a, b] = op_name[0] == 'R' ? std::pair<int, int>{0, 0} : parse_pair(1);
    double scale = (op_name[0] == 'R' ? 0.5 : 1.0) * cfg.kd() * inv_s;
    add2(scale, xw(a), xw(b));
    add2(scale * ysign(a) * ysign(b), yw(a), yw(b));
  } else if (op_name[0] == 'J' || op_name[0] == 'K') {
    int a, b;
    if (op_name == "J_1") a = 3, b = 2;
    else if (op_name == "J_2") a = 1, b = 3;
    else if (op_name == "J_3") a = 2, b = 1;
    else if (op_name[0] == 'K') a = 0, b = op_name[2] - '0';
    else std::tie(a, b) = parse_pair(1);
    double scale = cfg.kd() * inv_s;
    add2(scale * ysign(b), xw(a), yw(b));
    add2(-scale * ysign(a), xw(b), yw(a));
  } else if (op_name[0] == 'N') {
    int b = op_name[2] - '0';
    double scale = cfg.kd() * inv_s;
    add2(scale, xw(0), xw(b));
    add2(scale * ysign(0) * ysign(b), yw(0), yw(b));
  } else {
    throw std::invalid_argument("no differential oracle for " + op_name);
  }

  double worst = 0;
  for (int col : space.interior(2)) {
    const FockIndex& k = space.state(col);
    for (int row = 0; row < space.dim(); ++row) {
      const FockIndex& j = space.state(row);
      std::complex<double> want = 0;
      for (auto& t : terms) {
        std::complex<double> v = t.coeff;
        bool dead = false;
        for (int m = 0; m < space.modes() && !dead; ++m) {
          auto w = t.words.find(m);
          if (w == t.words.end()) {
            if (j.k[m] != k.k[m]) dead = true;
          } else {
            std::complex<double> el = mode_element(w->second, j.k[m], k.k[m], 1.0);
            if (el == std::complex<double>(0.0, 0.0)) dead = true;
            v *= el;
          }
        }
        if (!dead) want += v;
      }
      worst = std::max(worst, std::abs(built(row, col) - want));
    }
  }
  return worst;
}

}  // namespace quap
