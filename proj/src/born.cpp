#include "quap/born.hpp"

#include <stdexcept>

namespace quap {

AlgebraElement GeneratorMap::apply(const AlgebraElement& x) const {
  const int d = dim();
  AlgebraElement out = AlgebraElement::zero(d);
  for (int g = 0; g < d; ++g) {
    if (x.coeff[g].is_zero()) continue;
    for (int t = 0; t < d; ++t) out.coeff[t] += x.coeff[g] * cols[g][t];
  }
  return out;
}

GeneratorMap GeneratorMap::compose(const GeneratorMap& inner) const {
  const int d = dim();
  GeneratorMap out;
  out.cols.assign(d, std::vector<GRat>(d, GRat()));
  for (int g = 0; g < d; ++g) {
    AlgebraElement img;
    img.coeff = inner.cols[g];
    AlgebraElement full = apply(img);
    out.cols[g] = full.coeff;
  }
  return out;
}

bool GeneratorMap::is_identity() const {
  const int d = dim();
  for (int g = 0; g < d; ++g)
    for (int t = 0; t < d; ++t)
      if (cols[g][t] != (g == t ? GRat(1) : GRat())) return false;
  return true;
}

static GeneratorMap identity_map(int d) {
  GeneratorMap m;
  m.cols.assign(d, std::vector<GRat>(d, GRat()));
  for (int g = 0; g < d; ++g) m.cols[g][g] = GRat(1);
  return m;
}

// In natural units the map is Q_i -> P_i, P_i -> -Q_i; away from them the
// swap acts on the dimensionless Q_i/lambda_q, P_i/lambda_p, which puts the
// ratio b/c on the generators.
GeneratorMap born_map(const StructureConstants& sc) {
  const auto& gb = sc.basis();
  GeneratorMap m = identity_map(gb.dim());
  Rat ratio = sc.params().b / sc.params().c;
  for (int i = 1;; ++i) {
    auto q = gb.find("Q_" + std::to_string(i));
    auto p = gb.find("P_" + std::to_string(i));
    if (!q || !p) break;
    m.cols[*q].assign(gb.dim(), GRat());
    m.cols[*p].assign(gb.dim(), GRat());
    m.cols[*q][*p] = GRat(ratio);              // Q_i -> (b/c) P_i
    m.cols[*p][*q] = GRat(Rat(-1) / ratio);    // P_i -> -(c/b) Q_i
  }
  return m;
}

GeneratorMap born_map_te(const StructureConstants& sc) {
  const auto& gb = sc.basis();
  GeneratorMap m = identity_map(gb.dim());
  auto t = gb.find("T");
  auto e = gb.find("E");
  if (!t || !e) throw std::invalid_argument("born_map_te needs T and E generators");
  Rat bc = sc.params().b * sc.params().c;
  m.cols[*t].assign(gb.dim(), GRat());
  m.cols[*e].assign(gb.dim(), GRat());
  m.cols[*t][*e] = GRat(bc);                   // T -> bc E
  m.cols[*e][*t] = GRat(Rat(-1) / bc);         // E -> -T/(bc)
  return m;
}

bool is_bracket_automorphism(const GeneratorMap& m, const StructureConstants& sc,
                             const std::vector<std::string>& span) {
  const int d = sc.dim();
  for (auto& xn : span)
    for (auto& yn : span) {
      int x = sc.basis().index_of(xn);
      int y = sc.basis().index_of(yn);
      AlgebraElement ex = AlgebraElement::generator(d, x);
      AlgebraElement ey = AlgebraElement::generator(d, y);
      AlgebraElement lhs = commutator(m.apply(ex), m.apply(ey), sc);
      AlgebraElement rhs = m.apply(commutator(ex, ey, sc));
      for (int t = 0; t < d; ++t)
        if (lhs.coeff[t] != rhs.coeff[t]) return false;
    }
  return true;
}

std::vector<std::vector<GRat>> reciprocity_form(const StructureConstants& sc,
                                                std::vector<int>& span_out) {
  const auto& gb = sc.basis();
  span_out.clear();
  span_out.push_back(gb.index_of("T"));
  span_out.push_back(gb.index_of("E"));
  std::vector<int> qs, ps;
  for (int i = 1;; ++i) {
    auto q = gb.find("Q_" + std::to_string(i));
    auto p = gb.find("P_" + std::to_string(i));
    if (!q || !p) break;
    qs.push_back(*q);
    ps.push_back(*p);
  }
  for (int q : qs) span_out.push_back(q);
  for (int p : ps) span_out.push_back(p);

  const int d = gb.dim();
  std::vector<std::vector<GRat>> g(d, std::vector<GRat>(d, GRat()));
  Rat c = sc.params().c, b = sc.params().b;
  g[span_out[0]][span_out[0]] = GRat(Rat(-1));
  g[span_out[1]][span_out[1]] = GRat(Rat(-1) / (b * b * c * c));
  for (int q : qs) g[q][q] = GRat(Rat(1) / (c * c));
  for (int p : ps) g[p][p] = GRat(Rat(1) / (b * b));
  return g;
}

bool preserves_form(const GeneratorMap& m, const StructureConstants& sc) {
  std::vector<int> span;
  auto g = reciprocity_form(sc, span);
  const int d = sc.dim();
  // (B^T G B)_{xy} = sum_{u,v} B_{u x} G_{u v} B_{v y}, on the span only
  for (int x : span)
    for (int y : span) {
      GRat acc;
      for (int u = 0; u < d; ++u) {
        if (m.cols[x][u].is_zero()) continue;
        for (int v = 0; v < d; ++v) acc += m.cols[x][u] * g[u][v] * m.cols[y][v];
      }
      if (acc != g[x][y]) return false;
    }
  return true;
}

}  // namespace quap
