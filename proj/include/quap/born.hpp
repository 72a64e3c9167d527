#ifndef QUAP_BORN_HPP
#define QUAP_BORN_HPP

#include <vector>

#include "quap/algebra.hpp"

namespace quap {

/// Exact linear map on a generator basis, column g = image of generator g.
struct GeneratorMap {
  std::vector<std::vector<GRat>> cols;

  int dim() const { return static_cast<int>(cols.size()); }
  AlgebraElement apply(const AlgebraElement& x) const;
  GeneratorMap compose(const GeneratorMap& inner) const;  // this after inner
  bool is_identity() const;
};

/// Reciprocity map {t,e,q,p} -> {t,e,p,-q} as the generator map
/// Q_i -> P_i, P_i -> -Q_i, fixing T, E, I and everything else.
GeneratorMap born_map(const StructureConstants& sc);

/// Companion map {t,e,q,p} -> {e,-t,q,p}: T -> E/(bc), E -> -bc T.
GeneratorMap born_map_te(const StructureConstants& sc);

/// True when m is a Lie-algebra automorphism of the bracket table
/// restricted to the given generator names: [m x, m y] = m [x, y] exactly.
bool is_bracket_automorphism(const GeneratorMap& m, const StructureConstants& sc,
                             const std::vector<std::string>& span);

/// Coefficient matrix of the invariant -T^2 + Q^2/c^2 + P^2/b^2 - E^2/(b^2c^2)
/// on the span (T, E, Q_i, P_i), and the exact congruence check B^T G B = G.
std::vector<std::vector<GRat>> reciprocity_form(const StructureConstants& sc,
                                                std::vector<int>& span_out);
bool preserves_form(const GeneratorMap& m, const StructureConstants& sc);

}  // namespace quap

#endif
