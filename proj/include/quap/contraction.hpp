#ifndef QUAP_CONTRACTION_HPP
#define QUAP_CONTRACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "quap/algebra.hpp"

namespace quap {

/// Rescaling Y_g = eps^{e_g} X_g with eps = 1/c or eps = 1/b.  Exponents
/// must be >= 0; renamed generators keep their grading.
struct ContractionScaling {
  char param = 'c';  // 'c' or 'b'
  std::vector<int> exponent;            // per generator, exponent of eps
  std::vector<std::string> new_names;   // empty string keeps the old name

  static ContractionScaling identity(const StructureConstants& sc, char param);
  void set(const StructureConstants& sc, const std::string& gen, int exp,
           const std::string& new_name = "");
};

/// Term-by-term eps -> 0 limit of the rescaled bracket table.  Entries whose
/// scaled coefficient diverges raise std::domain_error naming the pair.
StructureConstants contract(const StructureConstants& sc, const ContractionScaling& scaling,
                            std::optional<Metric> metric_override = std::nullopt);

}  // namespace quap

#endif
