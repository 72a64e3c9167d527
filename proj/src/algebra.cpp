#include "quap/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace quap {

int GeneratorBasis::index_of(const std::string& name) const {
  auto idx = find(name);
  if (!idx) throw std::invalid_argument("unknown generator label: " + name);
  return *idx;
}

std::optional<int> GeneratorBasis::find(const std::string& name) const {
  for (int i = 0; i < dim(); ++i)
    if (names[i] == name) return i;
  return std::nullopt;
}

Metric Metric::euclidean(int n) {
  Metric m;
  m.p = 0;
  m.q = n;
  m.entries.assign(n, 1);
  return m;
}

Metric Metric::lorentzian(int n) {
  Metric m;
  m.p = 1;
  m.q = n;
  m.entries.assign(n + 1, 1);
  m.entries[0] = -1;
  return m;
}

static Rat rat_int_pow(const Rat& base, int e) {
  if (e == 0) return Rat(1);
  Rat b = e > 0 ? base : Rat(1) / base;
  int n = e > 0 ? e : -e;
  Rat r(1);
  for (int i = 0; i < n; ++i) r *= b;
  return r;
}

GRat Coeff::eval(const Params& p) const {
  if (q.is_zero()) return GRat();
  if (ec % 2 || eb % 2 || eh % 2)
    throw std::logic_error("Coeff::eval on half-integer parameter exponent");
  GRat v = q;
  v.re *= rat_int_pow(p.c, ec / 2) * rat_int_pow(p.b, eb / 2) * rat_int_pow(p.hbar, eh / 2);
  v.im *= rat_int_pow(p.c, ec / 2) * rat_int_pow(p.b, eb / 2) * rat_int_pow(p.hbar, eh / 2);
  return v;
}

void StructureConstants::add(int a, int b, Coeff coeff, int target) {
  if (a < 0 || b < 0 || a >= dim() || b >= dim() || target < 0 || target >= dim())
    throw std::out_of_range("structure constant index");
  if (a == b) throw std::invalid_argument("diagonal bracket entry");
  if (coeff.is_zero()) return;
  auto accumulate = [&](int x, int y, const Coeff& c) {
    Entry& e = table_[{x, y}];
    for (auto& [cc, t] : e) {
      if (t == target) {
        if (!cc.same_degree(c))
          throw std::logic_error("mixed parameter degree on one table entry");
        cc.q += c.q;
        if (cc.q.is_zero()) {
          e.erase(std::remove_if(e.begin(), e.end(),
                                 [&](auto& pr) { return pr.second == target; }),
                  e.end());
          if (e.empty()) table_.erase({x, y});
        }
        return;
      }
    }
    e.emplace_back(c, target);
  };
  accumulate(a, b, coeff);
  accumulate(b, a, -coeff);
}

void StructureConstants::add(const std::string& a, const std::string& b, Coeff coeff,
                             const std::string& target) {
  add(basis_.index_of(a), basis_.index_of(b), std::move(coeff), basis_.index_of(target));
}

const StructureConstants::Entry& StructureConstants::table(int a, int b) const {
  static const Entry empty;
  auto it = table_.find({a, b});
  return it == table_.end() ? empty : it->second;
}

std::vector<GRat> StructureConstants::bracket(int a, int b) const {
  std::vector<GRat> out(dim(), GRat());
  for (auto& [c, t] : table(a, b)) out[t] += c.eval(params_);
  return out;
}

bool StructureConstants::has_same_entry_set(const StructureConstants& other) const {
  if (dim() != other.dim()) return false;
  for (int a = 0; a < dim(); ++a)
    for (int b = a + 1; b < dim(); ++b) {
      auto va = bracket(a, b);
      auto vb = other.bracket(a, b);
      if (va != vb) return false;
    }
  return true;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (coeff.size() != o.coeff.size()) throw std::invalid_argument("basis mismatch");
  for (size_t i = 0; i < coeff.size(); ++i) coeff[i] += o.coeff[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const GRat& s) {
  for (auto& c : coeff) c *= s;
  return *this;
}

AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y,
                          const StructureConstants& sc) {
  const int d = sc.dim();
  if (static_cast<int>(x.coeff.size()) != d || static_cast<int>(y.coeff.size()) != d)
    throw std::invalid_argument("basis mismatch");
  AlgebraElement out = AlgebraElement::zero(d);
  for (int a = 0; a < d; ++a) {
    if (x.coeff[a].is_zero()) continue;
    for (int b = 0; b < d; ++b) {
      if (y.coeff[b].is_zero()) continue;
      GRat s = x.coeff[a] * y.coeff[b];
      for (auto& [c, t] : sc.table(a, b)) out.coeff[t] += s * c.eval(sc.params());
    }
  }
  return out;
}

JacobiReport verify_jacobi(const StructureConstants& sc) {
  JacobiReport rep;
  const int d = sc.dim();

  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      auto ab = sc.bracket(a, b);
      auto ba = sc.bracket(b, a);
      for (int t = 0; t < d; ++t)
        if (ab[t] + ba[t] != GRat()) {
          rep.antisymmetric = false;
          if (rep.first_failure.empty())
            rep.first_failure = "antisymmetry at (" + sc.basis().names[a] + "," +
                                sc.basis().names[b] + ")";
        }
    }

  auto bracket_elem = [&](int a, const std::vector<GRat>& v) {
    std::vector<GRat> out(d, GRat());
    for (int b = 0; b < d; ++b) {
      if (v[b].is_zero()) continue;
      for (auto& [c, t] : sc.table(a, b)) out[t] += v[b] * c.eval(sc.params());
    }
    return out;
  };

  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b) {
      auto ab = sc.bracket(a, b);
      for (int c = b + 1; c < d; ++c) {
        ++rep.triples_checked;
        auto bc = sc.bracket(b, c);
        auto ca = sc.bracket(c, a);
        // [[a,b],c] + [[b,c],a] + [[c,a],b] = -[c,[a,b]] - [a,[b,c]] - [b,[c,a]]
        std::vector<GRat> s1 = bracket_elem(c, ab);
        std::vector<GRat> s2 = bracket_elem(a, bc);
        std::vector<GRat> s3 = bracket_elem(b, ca);
        for (int t = 0; t < d; ++t) {
          GRat total = s1[t] + s2[t] + s3[t];
          if (!total.is_zero()) {
            rep.jacobi_ok = false;
            if (rep.first_failure.empty())
              rep.first_failure = "jacobi at (" + sc.basis().names[a] + "," +
                                  sc.basis().names[b] + "," + sc.basis().names[c] + ")";
          }
        }
      }
    }
  return rep;
}

StructureConstants rescale_basis(const StructureConstants& sc, const BasisMap& map,
                                 Metric metric, Params params) {
  GeneratorBasis nb;
  std::vector<int> source(map.gens.size());
  std::vector<Coeff> scale(map.gens.size());
  std::vector<int> back(sc.dim(), -1);
  for (size_t i = 0; i < map.gens.size(); ++i) {
    nb.names.push_back(map.gens[i].name);
    nb.grading.push_back(map.gens[i].grading);
    source[i] = map.gens[i].source;
    scale[i] = map.gens[i].scale;
    if (back[map.gens[i].source] != -1)
      throw std::invalid_argument("rescale_basis sources must be distinct");
    back[map.gens[i].source] = static_cast<int>(i);
  }
  if (nb.dim() != sc.dim()) throw std::invalid_argument("rescale_basis must be a bijection");

  StructureConstants out(nb, std::move(metric), params);
  for (int a = 0; a < nb.dim(); ++a)
    for (int b = a + 1; b < nb.dim(); ++b) {
      for (auto& [c, t] : sc.table(source[a], source[b])) {
        int nt = back[t];
        Coeff nc = scale[a] * scale[b] * c / scale[nt];
        out.add(a, b, nc, nt);
      }
    }
  return out;
}

StructureConstants restrict_subalgebra(const StructureConstants& sc,
                                       const std::vector<std::string>& keep, Metric metric) {
  GeneratorBasis nb;
  std::vector<int> source;
  std::vector<int> back(sc.dim(), -1);
  for (auto& name : keep) {
    int s = sc.basis().index_of(name);
    nb.names.push_back(name);
    nb.grading.push_back(sc.basis().grading[s]);
    back[s] = static_cast<int>(source.size());
    source.push_back(s);
  }
  StructureConstants out(nb, std::move(metric), sc.params());
  for (int a = 0; a < nb.dim(); ++a)
    for (int b = a + 1; b < nb.dim(); ++b)
      for (auto& [c, t] : sc.table(source[a], source[b])) {
        if (back[t] == -1)
          throw std::invalid_argument("subset does not close: [" + nb.names[a] + "," +
                                      nb.names[b] + "] leaves the span");
        out.add(a, b, c, back[t]);
      }
  return out;
}

}  // namespace quap
