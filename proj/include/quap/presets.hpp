#ifndef QUAP_PRESETS_HPP
#define QUAP_PRESETS_HPP

#include <string>

#include "quap/algebra.hpp"

namespace quap {

enum class PresetFamily {
  Heisenberg,        // heisenberg(n)
  HeisenbergSpace,   // heisenberg(1,n): adds T, E
  Translation,       // translation(m)
  Poincare,          // poincare(1,n)
  Galilei,           // galilei(n)
  UnitaryCompact,    // u(n)
  UnitaryNoncompact, // u(1,n)
  QuaplecticCompact, // C(n), complex basis
  QuaplecticComplex, // C(1,n)-complex
  QuaplecticReal4,   // C(1,n)-real-4
  QuaplecticRealN,   // C(1,n)-real-n  (alias of plain C(1,n))
  Oscillator,        // Os(1,n)
  BLimit,            // B(1,n)
  GalileanPhase,     // galilean-phase-limit
};

struct PresetId {
  PresetFamily family;
  int n = 0;
};

/// Parses names like "C(1,3)-real-n", "poincare(1,3)", "u(2)",
/// "galilean-phase-limit(3)".  A dimension given in the name wins over the
/// n argument.  Throws std::invalid_argument on unknown names.
PresetId parse_preset(const std::string& name, int n_default = 0);

/// Builds the commutator table for a named algebra preset.  Structure
/// constants are exact; parameters c, b, hbar enter as tracked monomials.
/// Quaplectic-family presets are capped at n <= 4.
StructureConstants build_algebra(const std::string& preset, int n, Params params = {});
StructureConstants build_algebra(const PresetId& id, Params params = {});

/// True for presets carrying the complex {Z, A+, A-, I} basis.
bool is_complex_basis(PresetFamily f);

}  // namespace quap

#endif
