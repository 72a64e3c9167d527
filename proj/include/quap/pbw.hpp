#ifndef QUAP_PBW_HPP
#define QUAP_PBW_HPP

#include <map>
#include <string>
#include <vector>

#include "quap/algebra.hpp"

namespace quap {

/// PBW monomial: generator indices in basis order with multiplicities.
/// The empty word is the unit.
struct Monomial {
  std::vector<std::pair<int, int>> factors;  // (generator, exponent)

  int degree() const {
    int d = 0;
    for (auto& [g, e] : factors) d += e;
    return d;
  }
  static Monomial unit() { return {}; }
  static Monomial from_sorted_word(const std::vector<int>& word);
  std::vector<int> word() const;

  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.factors < b.factors;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.factors == b.factors;
  }
};

/// Element of the universal enveloping algebra in canonical PBW form.
class EnvElement {
 public:
  std::map<Monomial, GRat> terms;

  static EnvElement zero() { return {}; }
  static EnvElement scalar(GRat c);

  bool is_zero() const { return terms.empty(); }
  int degree() const;
  void add_term(const Monomial& m, const GRat& c);

  EnvElement& operator+=(const EnvElement& o);
  EnvElement& operator-=(const EnvElement& o);
  EnvElement& operator*=(const GRat& s);
  friend EnvElement operator+(EnvElement a, const EnvElement& b) { return a += b; }
  friend EnvElement operator-(EnvElement a, const EnvElement& b) { return a -= b; }
  friend EnvElement operator*(EnvElement a, const GRat& s) { return a *= s; }
  friend bool operator==(const EnvElement& a, const EnvElement& b) {
    return a.terms == b.terms;
  }

  /// Sorted text form "coeff * g^e ..." used by golden files.
  std::string to_text(const GeneratorBasis& basis) const;
};

/// Raised when an input word exceeds the rewriting degree cap.
struct DegreeCapExceeded : std::runtime_error {
  explicit DegreeCapExceeded(int degree, int cap)
      : std::runtime_error("word degree " + std::to_string(degree) +
                           " exceeds the PBW cap " + std::to_string(cap)) {}
};

/// Normal-ordering engine over one structure-constant table.  Rewrites
/// X_b X_a -> X_a X_b - [X_b, X_a] until every word is sorted; results are
/// memoized per word.
class PbwEngine {
 public:
  explicit PbwEngine(const StructureConstants& sc, int degree_cap = 8);

  const StructureConstants& algebra() const { return sc_; }
  int degree_cap() const { return cap_; }

  EnvElement gen(int g) const;
  EnvElement gen(const std::string& name) const;

  /// Canonical form of the product of generators in the given order.
  EnvElement normal_order(const std::vector<int>& word);

  /// Product of two canonical elements, renormalized.
  EnvElement product(const EnvElement& x, const EnvElement& y);

  /// product(x, y) - product(y, x).
  EnvElement bracket(const EnvElement& x, const EnvElement& y);

 private:
  EnvElement order_word(const std::vector<int>& word);

  const StructureConstants& sc_;
  int cap_;
  std::vector<std::vector<std::vector<std::pair<GRat, int>>>> bracket_table_;
  std::map<std::vector<int>, EnvElement> cache_;
};

struct CentralityReport {
  bool central = true;
  std::string offending_generator;
  EnvElement first_residual;
  long generators_checked = 0;
};

/// Checks [c, X] = 0 exactly for every basis generator X.
CentralityReport verify_central(const EnvElement& c, PbwEngine& eng);

}  // namespace quap

#endif
