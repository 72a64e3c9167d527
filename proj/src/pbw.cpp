#include "quap/pbw.hpp"

#include <algorithm>
#include <sstream>

namespace quap {

Monomial Monomial::from_sorted_word(const std::vector<int>& word) {
  Monomial m;
  for (int g : word) {
    if (!m.factors.empty() && m.factors.back().first == g)
      ++m.factors.back().second;
    else
      m.factors.emplace_back(g, 1);
  }
  return m;
}

std::vector<int> Monomial::word() const {
  std::vector<int> w;
  for (auto& [g, e] : factors) w.insert(w.end(), e, g);
  return w;
}

EnvElement EnvElement::scalar(GRat c) {
  EnvElement e;
  if (!c.is_zero()) e.terms[Monomial::unit()] = std::move(c);
  return e;
}

int EnvElement::degree() const {
  int d = 0;
  for (auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

void EnvElement::add_term(const Monomial& m, const GRat& c) {
  if (c.is_zero()) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms[m] = c;
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

EnvElement& EnvElement::operator+=(const EnvElement& o) {
  for (auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

EnvElement& EnvElement::operator-=(const EnvElement& o) {
  for (auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

EnvElement& EnvElement::operator*=(const GRat& s) {
  if (s.is_zero()) {
    terms.clear();
    return *this;
  }
  for (auto& [m, c] : terms) c *= s;
  return *this;
}

std::string EnvElement::to_text(const GeneratorBasis& basis) const {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << " *";
    if (m.factors.empty()) os << " 1";
    for (auto& [g, e] : m.factors) {
      os << " " << basis.names[g];
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

PbwEngine::PbwEngine(const StructureConstants& sc, int degree_cap)
    : sc_(sc), cap_(degree_cap) {
  const int d = sc.dim();
  bracket_table_.assign(d, std::vector<std::vector<std::pair<GRat, int>>>(d));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (auto& [c, t] : sc.table(a, b)) {
        GRat v = c.eval(sc.params());
        if (!v.is_zero()) bracket_table_[a][b].emplace_back(v, t);
      }
}

EnvElement PbwEngine::gen(int g) const {
  EnvElement e;
  Monomial m;
  m.factors.emplace_back(g, 1);
  e.terms[m] = GRat(1);
  return e;
}

EnvElement PbwEngine::gen(const std::string& name) const {
  return gen(sc_.basis().index_of(name));
}

EnvElement PbwEngine::normal_order(const std::vector<int>& word) {
  if (static_cast<int>(word.size()) > cap_)
    throw DegreeCapExceeded(static_cast<int>(word.size()), cap_);
  for (int g : word)
    if (g < 0 || g >= sc_.dim()) throw std::out_of_range("generator index");
  return order_word(word);
}

EnvElement PbwEngine::order_word(const std::vector<int>& word) {
  auto cached = cache_.find(word);
  if (cached != cache_.end()) return cached->second;

  EnvElement result;
  int swap_at = -1;
  for (size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) {
      swap_at = static_cast<int>(i);
      break;
    }

  if (swap_at < 0) {
    result.add_term(Monomial::from_sorted_word(word), GRat(1));
  } else {
    std::vector<int> swapped = word;
    std::swap(swapped[swap_at], swapped[swap_at + 1]);
    result = order_word(swapped);
    // X_u X_v = X_v X_u + [X_u, X_v]
    std::vector<int> shorter;
    shorter.reserve(word.size() - 1);
    shorter.insert(shorter.end(), word.begin(), word.begin() + swap_at);
    shorter.push_back(0);  // placeholder for the bracket target
    shorter.insert(shorter.end(), word.begin() + swap_at + 2, word.end());
    for (auto& [coef, t] : bracket_table_[word[swap_at]][word[swap_at + 1]]) {
      shorter[swap_at] = t;
      EnvElement part = order_word(shorter);
      part *= coef;
      result += part;
    }
  }
  cache_[word] = result;
  return result;
}

EnvElement PbwEngine::product(const EnvElement& x, const EnvElement& y) {
  EnvElement result;
  for (auto& [mx, cx] : x.terms) {
    std::vector<int> wx = mx.word();
    for (auto& [my, cy] : y.terms) {
      std::vector<int> w = wx;
      std::vector<int> wy = my.word();
      w.insert(w.end(), wy.begin(), wy.end());
      EnvElement part = normal_order(w);
      part *= cx * cy;
      result += part;
    }
  }
  return result;
}

EnvElement PbwEngine::bracket(const EnvElement& x, const EnvElement& y) {
  EnvElement r = product(x, y);
  r -= product(y, x);
  return r;
}

CentralityReport verify_central(const EnvElement& c, PbwEngine& eng) {
  CentralityReport rep;
  for (int g = 0; g < eng.algebra().dim(); ++g) {
    ++rep.generators_checked;
    EnvElement res = eng.bracket(c, eng.gen(g));
    if (!res.is_zero()) {
      rep.central = false;
      rep.offending_generator = eng.algebra().basis().names[g];
      rep.first_residual = res;
      return rep;
    }
  }
  return rep;
}

}  // namespace quap
