#ifndef QUAP_ALGEBRA_HPP
#define QUAP_ALGEBRA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quap/rational.hpp"

namespace quap {

enum class Grading { Homogeneous, Translation, Center };

struct Params {
  Rat c{1};
  Rat b{1};
  Rat hbar{1};
};

/// Ordered list of generator labels with a per-generator grading tag.
struct GeneratorBasis {
  std::vector<std::string> names;
  std::vector<Grading> grading;

  int dim() const { return static_cast<int>(names.size()); }
  int index_of(const std::string& name) const;  // throws on unknown label
  std::optional<int> find(const std::string& name) const;
};

/// Diagonal metric eta with p entries equal to -1 followed by q entries +1.
struct Metric {
  int p = 0;
  int q = 0;
  std::vector<int> entries;

  static Metric euclidean(int n);
  static Metric lorentzian(int n);  // signature (1, n), index 0 timelike
  int eta(int a, int b) const { return a == b ? entries[a] : 0; }
  int dim() const { return static_cast<int>(entries.size()); }
};

/// Structure-constant coefficient: q * c^(ec/2) * b^(eb/2) * hbar^(eh/2)
/// with a Gaussian-rational q.  Exponents are stored in half-units; every
/// preset table evaluates with even exponents only.
struct Coeff {
  GRat q;
  int ec = 0;
  int eb = 0;
  int eh = 0;

  Coeff() = default;
  Coeff(GRat v) : q(std::move(v)) {}
  Coeff(long v) : q(GRat(v)) {}
  Coeff(GRat v, int c2, int b2, int h2) : q(std::move(v)), ec(c2), eb(b2), eh(h2) {}

  bool is_zero() const { return q.is_zero(); }
  Coeff operator-() const { return Coeff(-q, ec, eb, eh); }
  friend Coeff operator*(const Coeff& a, const Coeff& b) {
    return Coeff(a.q * b.q, a.ec + b.ec, a.eb + b.eb, a.eh + b.eh);
  }
  friend Coeff operator/(const Coeff& a, const Coeff& b) {
    return Coeff(a.q / b.q, a.ec - b.ec, a.eb - b.eb, a.eh - b.eh);
  }
  bool same_degree(const Coeff& o) const { return ec == o.ec && eb == o.eb && eh == o.eh; }

  /// Exact value at rational parameters; requires even exponents.
  GRat eval(const Params& p) const;
};

/// Convenience constructors for dimensionful table entries.
inline Coeff cpow(long num, long den, int ec, int eb, int eh) {
  return Coeff(GRat(Rat(num, den)), 2 * ec, 2 * eb, 2 * eh);
}
inline Coeff ci(long num, long den = 1) { return Coeff(GRat(Rat(0), Rat(num, den))); }

/// Sparse antisymmetric commutator table over a generator basis.
/// Entries are stored for both index orders; antisymmetry is enforced on
/// construction and checked by verify().
class StructureConstants {
 public:
  using Entry = std::vector<std::pair<Coeff, int>>;  // (coefficient, target)

  StructureConstants() = default;
  StructureConstants(GeneratorBasis basis, Metric metric, Params params)
      : basis_(std::move(basis)), metric_(std::move(metric)), params_(params) {}

  const GeneratorBasis& basis() const { return basis_; }
  const Metric& metric() const { return metric_; }
  const Params& params() const { return params_; }
  int dim() const { return basis_.dim(); }

  /// Adds coeff * X_target to [X_a, X_b] and the antisymmetric mirror.
  void add(int a, int b, Coeff coeff, int target);
  void add(const std::string& a, const std::string& b, Coeff coeff, const std::string& target);

  const Entry& table(int a, int b) const;
  const std::map<std::pair<int, int>, Entry>& entries() const { return table_; }

  /// Evaluated bracket [X_a, X_b] as a dense coefficient vector.
  std::vector<GRat> bracket(int a, int b) const;

  bool has_same_entry_set(const StructureConstants& other) const;

 private:
  GeneratorBasis basis_;
  Metric metric_;
  Params params_;
  std::map<std::pair<int, int>, Entry> table_;
};

/// Element of the algebra as a dense exact coefficient vector.
struct AlgebraElement {
  std::vector<GRat> coeff;

  static AlgebraElement zero(int dim) {
    AlgebraElement e;
    e.coeff.assign(dim, GRat());
    return e;
  }
  static AlgebraElement generator(int dim, int index, GRat scale = GRat(1)) {
    AlgebraElement e = zero(dim);
    e.coeff[index] = std::move(scale);
    return e;
  }
  bool is_zero() const {
    for (auto& c : coeff)
      if (!c.is_zero()) return false;
    return true;
  }
  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator*=(const GRat& s);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator*(AlgebraElement a, const GRat& s) { return a *= s; }
};

/// Bilinear extension of the structure-constant table.
AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y,
                          const StructureConstants& sc);

struct JacobiReport {
  bool antisymmetric = true;
  bool jacobi_ok = true;
  long triples_checked = 0;
  std::string first_failure;  // empty when clean
};

/// Exact antisymmetry + Jacobi scan over all basis triples.
JacobiReport verify_jacobi(const StructureConstants& sc);

/// New basis Y_alpha = scale_alpha * X_{source_alpha}: signed-monomial change
/// of basis (a scaled permutation), enough for contractions, dimensioned
/// rescalings and rotation-vector relabelings.
struct BasisMap {
  struct Gen {
    std::string name;
    int source;
    Coeff scale;
    Grading grading;
  };
  std::vector<Gen> gens;
};
StructureConstants rescale_basis(const StructureConstants& sc, const BasisMap& map,
                                 Metric metric, Params params);

/// Restriction to a generator subset; throws if the subset does not close.
StructureConstants restrict_subalgebra(const StructureConstants& sc,
                                       const std::vector<std::string>& keep, Metric metric);

}  // namespace quap

#endif
