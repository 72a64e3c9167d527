#ifndef QUAP_CASIMIR_HPP
#define QUAP_CASIMIR_HPP

#include <string>
#include <vector>

#include "quap/pbw.hpp"
#include "quap/presets.hpp"

namespace quap {

/// Index range of the complex-basis presets: 0..n noncompact, 1..n compact.
struct ZIndexRange {
  int lo;
  int hi;
};
ZIndexRange z_index_range(const StructureConstants& sc);

/// U = eta^{ab} Z_ab.
EnvElement u1_generator(PbwEngine& eng);

/// Traceless part Zhat_ab = Z_ab - U eta_ab / (n+1).
EnvElement traceless_z(PbwEngine& eng, int a, int b);

/// W_ab = A_a^+ A_b^- - I Z_ab (quaplectic) in canonical form.
EnvElement w_generator(PbwEngine& eng, int a, int b);

/// Casimir candidate of the given order for the preset family behind the
/// engine's table:
///   quaplectic / oscillator: order 1 -> I, order 2m -> cyclic eta-contracted
///     W products (oscillator only up to order 2);
///   u(n), u(1,n): order alpha -> cyclic eta-contracted Z products;
///   poincare: order 2 -> contracted translation square, order 4 (n=3) ->
///     the squared epsilon-contracted spin vector.
EnvElement build_casimir(PbwEngine& eng, PresetFamily family, int order);

struct WRelationReport {
  bool heisenberg_invariant = true;   // [A_c^pm, W_ab] = 0
  bool z_pattern_ok = true;           // [Z_ab, W_cd] = i(eta_ad W_cb - eta_bc W_ad)
  std::string first_failure;
};
WRelationReport verify_w_relations(PbwEngine& eng);

struct PauliLubanskiReport {
  bool identity_ok = false;   // epsilon-contracted square equals the 3-vector expansion
  bool central_ok = false;    // commutes with every generator
  EnvElement difference;
};
/// poincare(1,3) only; natural units.
PauliLubanskiReport verify_pauli_lubanski(PbwEngine& eng);

}  // namespace quap

#endif
