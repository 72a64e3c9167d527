#include <json.hpp>
#include <sstream>

#include "quap/fields.hpp"

namespace quap {

std::string SpectrumReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["config"] = {{"s", s},
                 {"kappa", kappa},
                 {"label", label},
                 {"n_max", n_max},
                 {"noncompact", noncompact},
                 {"tolerance", tolerance}};
  j["blocks"] = nlohmann::ordered_json::array();
  for (auto& b : blocks) {
    nlohmann::ordered_json jb;
    jb["grade"] = b.grade;
    jb["dim"] = b.dim;
    jb["eigenvalues"] = b.eigenvalues;
    jb["residual"] = b.residual;
    j["blocks"].push_back(std::move(jb));
  }
  return j.dump(2) + "\n";
}

std::string SpectrumReport::to_markdown() const {
  std::ostringstream os;
  os << "| grade | dim | eigenvalues | residual |\n";
  os << "|------:|----:|-------------|---------:|\n";
  for (auto& b : blocks) {
    os << "| " << b.grade << " | " << b.dim << " | ";
    for (size_t i = 0; i < b.eigenvalues.size(); ++i) {
      if (i) os << ", ";
      os << b.eigenvalues[i];
    }
    os << " | " << b.residual << " |\n";
  }
  return os.str();
}

std::string SpectrumReport::to_csv() const {
  std::ostringstream os;
  os << "grade,index,eigenvalue,residual\n";
  for (auto& b : blocks)
    for (size_t i = 0; i < b.eigenvalues.size(); ++i)
      os << b.grade << "," << i << "," << b.eigenvalues[i] << "," << b.residual << "\n";
  return os.str();
}

}  // namespace quap
