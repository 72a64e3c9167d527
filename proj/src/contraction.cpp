#include "quap/contraction.hpp"

#include <stdexcept>

namespace quap {

ContractionScaling ContractionScaling::identity(const StructureConstants& sc, char param) {
  ContractionScaling s;
  s.param = param;
  s.exponent.assign(sc.dim(), 0);
  s.new_names.assign(sc.dim(), "");
  return s;
}

void ContractionScaling::set(const StructureConstants& sc, const std::string& gen, int exp,
                             const std::string& new_name) {
  int g = sc.basis().index_of(gen);
  if (exp < 0) throw std::invalid_argument("contraction exponent must be >= 0");
  exponent[g] = exp;
  new_names[g] = new_name;
}

StructureConstants contract(const StructureConstants& sc, const ContractionScaling& scaling,
                            std::optional<Metric> metric_override) {
  const int d = sc.dim();
  if (static_cast<int>(scaling.exponent.size()) != d)
    throw std::invalid_argument("scaling dimension mismatch");
  bool trivial = true;
  for (int e : scaling.exponent) trivial = trivial && e == 0;

  GeneratorBasis gb;
  for (int g = 0; g < d; ++g) {
    gb.names.push_back(scaling.new_names[g].empty() ? sc.basis().names[g]
                                                    : scaling.new_names[g]);
    gb.grading.push_back(sc.basis().grading[g]);
  }
  Metric metric = metric_override ? *metric_override : sc.metric();
  StructureConstants out(gb, metric, sc.params());

  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b)
      for (auto& [c, t] : sc.table(a, b)) {
        // All exponents zero: no eps is introduced, no limit is taken.
        if (trivial) {
          out.add(a, b, c, t);
          continue;
        }
        // eps-degree of the rescaled entry; the coefficient's own power of
        // the contracted parameter counts as eps^{-power}.
        int own = scaling.param == 'c' ? c.ec : c.eb;
        if (own % 2) throw std::logic_error("half-integer parameter power in table");
        int deg = scaling.exponent[a] + scaling.exponent[b] - scaling.exponent[t] - own / 2;
        if (deg < 0)
          throw std::domain_error("divergent bracket under contraction: [" +
                                  sc.basis().names[a] + "," + sc.basis().names[b] + "]");
        if (deg > 0) continue;  // vanishes in the limit
        Coeff nc = c;
        if (scaling.param == 'c')
          nc.ec = 0;
        else
          nc.eb = 0;
        out.add(a, b, nc, t);
      }
  return out;
}

}  // namespace quap
