#include "quap/casimir.hpp"

#include <stdexcept>

namespace quap {

namespace {

std::string zn(int a, int b) {
  return "Z(" + std::to_string(a) + "," + std::to_string(b) + ")";
}
std::string ap(int a) { return "A+(" + std::to_string(a) + ")"; }
std::string am(int a) { return "A-(" + std::to_string(a) + ")"; }

int eps4(int a, int b, int c, int d) {
  int idx[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

}  // namespace

ZIndexRange z_index_range(const StructureConstants& sc) {
  const auto& gb = sc.basis();
  int lo = gb.find(zn(0, 0)) || gb.find(ap(0)) ? 0 : 1;
  int hi = lo;
  while (gb.find(ap(hi + 1)) || gb.find(zn(hi + 1, hi + 1))) ++hi;
  return {lo, hi};
}

EnvElement u1_generator(PbwEngine& eng) {
  const auto& sc = eng.algebra();
  if (sc.basis().find("U")) return eng.gen("U");
  auto [lo, hi] = z_index_range(sc);
  EnvElement u;
  for (int a = lo; a <= hi; ++a) {
    EnvElement z = eng.gen(zn(a, a));
    z *= GRat(Rat(sc.metric().eta(a - lo, a - lo)));
    u += z;
  }
  return u;
}

EnvElement traceless_z(PbwEngine& eng, int a, int b) {
  const auto& sc = eng.algebra();
  auto [lo, hi] = z_index_range(sc);
  EnvElement z = eng.gen(zn(a, b));
  if (a == b) {
    EnvElement u = u1_generator(eng);
    u *= GRat(Rat(-sc.metric().eta(a - lo, a - lo), hi - lo + 1));
    z += u;
  }
  return z;
}

EnvElement w_generator(PbwEngine& eng, int a, int b) {
  EnvElement w = eng.product(eng.gen(ap(a)), eng.gen(am(b)));
  w -= eng.product(eng.gen("I"), eng.gen(zn(a, b)));
  return w;
}

namespace {

EnvElement cyclic_contraction(PbwEngine& eng, int m,
                              const std::function<EnvElement(int, int)>& factor) {
  const auto& sc = eng.algebra();
  auto [lo, hi] = z_index_range(sc);
  const int dim = hi - lo + 1;
  EnvElement total;
  std::vector<int> idx(m, lo);
  while (true) {
    GRat weight(1);
    for (int k = 0; k < m; ++k)
      weight *= GRat(Rat(sc.metric().eta(idx[k] - lo, idx[k] - lo)));
    EnvElement prod = factor(idx[0], idx[(1) % m]);
    for (int k = 1; k < m; ++k) prod = eng.product(prod, factor(idx[k], idx[(k + 1) % m]));
    prod *= weight;
    total += prod;

    int k = m - 1;
    while (k >= 0 && idx[k] == lo + dim - 1) idx[k--] = lo;
    if (k < 0) break;
    ++idx[k];
  }
  return total;
}

EnvElement quaplectic_casimir(PbwEngine& eng, int order) {
  if (order == 0 || order == 1) return eng.gen("I");
  if (order % 2) throw std::invalid_argument("quaplectic Casimir orders are 1, 2, 4, ...");
  int m = order / 2;
  if (m == 1) {
    // C_2 = eta^{ab} A_a^+ A_b^- - I U
    const auto& sc = eng.algebra();
    auto [lo, hi] = z_index_range(sc);
    EnvElement c;
    for (int a = lo; a <= hi; ++a) {
      EnvElement t = eng.product(eng.gen(ap(a)), eng.gen(am(a)));
      t *= GRat(Rat(sc.metric().eta(a - lo, a - lo)));
      c += t;
    }
    c -= eng.product(eng.gen("I"), u1_generator(eng));
    return c;
  }
  return cyclic_contraction(eng, m, [&](int a, int b) { return w_generator(eng, a, b); });
}

EnvElement oscillator_casimir(PbwEngine& eng, int order) {
  if (order == 0 || order == 1) return eng.gen("I");
  if (order != 2) throw std::invalid_argument("the oscillator algebra is rank 2");
  const auto& sc = eng.algebra();
  auto [lo, hi] = z_index_range(sc);
  EnvElement c;
  for (int a = lo; a <= hi; ++a) {
    EnvElement t = eng.product(eng.gen(ap(a)), eng.gen(am(a)));
    t *= GRat(Rat(sc.metric().eta(a - lo, a - lo)));
    c += t;
  }
  c -= eng.product(eng.gen("I"), eng.gen("U"));
  return c;
}

EnvElement unitary_casimir(PbwEngine& eng, int order) {
  if (order < 1) throw std::invalid_argument("unitary Casimir order must be >= 1");
  if (order == 1) return u1_generator(eng);
  return cyclic_contraction(eng, order, [&](int a, int b) { return eng.gen(zn(a, b)); });
}

// Translations of poincare(1,n) as a dimensionless four-vector:
// Xhat_0 = T, Xhat_i = Q_i / c.
EnvElement poincare_xhat(PbwEngine& eng, int a) {
  if (a == 0) return eng.gen("T");
  EnvElement q = eng.gen("Q_" + std::to_string(a));
  q *= GRat(Rat(1) / eng.algebra().params().c);
  return q;
}

// L_cd of poincare(1,3) in terms of the named generators, antisymmetric.
EnvElement poincare_L(PbwEngine& eng, int c, int d) {
  if (c == d) return EnvElement::zero();
  if (c > d) {
    EnvElement l = poincare_L(eng, d, c);
    l *= GRat(-1);
    return l;
  }
  if (c == 0) return eng.gen("K_" + std::to_string(d));
  // spatial pairs: J_1 = L_32, J_2 = L_13, J_3 = L_21
  if (c == 2 && d == 3) return eng.gen("J_1") * GRat(-1);
  if (c == 1 && d == 3) return eng.gen("J_2");
  if (c == 1 && d == 2) return eng.gen("J_3") * GRat(-1);
  throw std::invalid_argument("index out of range for poincare(1,3)");
}

EnvElement poincare_casimir(PbwEngine& eng, int order) {
  const auto& sc = eng.algebra();
  int n = sc.metric().dim() - 1;
  if (order == 2) {
    EnvElement c = eng.product(eng.gen("T"), eng.gen("T")) * GRat(-1);
    for (int i = 1; i <= n; ++i) {
      EnvElement q = eng.gen("Q_" + std::to_string(i));
      EnvElement t = eng.product(q, q);
      t *= GRat(Rat(1) / (sc.params().c * sc.params().c));
      c += t;
    }
    return c;
  }
  if (order == 4) {
    if (n != 3)
      throw std::invalid_argument("fourth-order Poincare invariant implemented for n = 3");
    // W^a = (1/2) eps^{abcd} Xhat_b L_cd with eps^{abcd} = -eps_{abcd}
    std::vector<EnvElement> w(4);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) {
            int e = -eps4(a, b, c, d);
            if (e == 0) continue;
            EnvElement t = eng.product(poincare_xhat(eng, b), poincare_L(eng, c, d));
            t *= GRat(Rat(e, 2));
            w[a] += t;
          }
    EnvElement c4;
    for (int a = 0; a < 4; ++a) {
      EnvElement t = eng.product(w[a], w[a]);
      t *= GRat(Rat(sc.metric().eta(a, a)));
      c4 += t;
    }
    return c4;
  }
  throw std::invalid_argument("poincare Casimir orders are 2 and 4");
}

}  // namespace

EnvElement build_casimir(PbwEngine& eng, PresetFamily family, int order) {
  switch (family) {
    case PresetFamily::QuaplecticCompact:
    case PresetFamily::QuaplecticComplex: {
      auto [lo, hi] = z_index_range(eng.algebra());
      int rank = hi - lo + 2;  // I plus traces up to order 2(rank-1)
      if (order > 2 * (rank - 1) && order % 2 == 0)
        throw std::invalid_argument("order exceeds the invariant count");
      return quaplectic_casimir(eng, order);
    }
    case PresetFamily::Oscillator:
      return oscillator_casimir(eng, order);
    case PresetFamily::UnitaryCompact:
    case PresetFamily::UnitaryNoncompact: {
      auto [lo, hi] = z_index_range(eng.algebra());
      if (order > hi - lo + 1) throw std::invalid_argument("order exceeds the invariant count");
      return unitary_casimir(eng, order);
    }
    case PresetFamily::Poincare:
      return poincare_casimir(eng, order);
    case PresetFamily::Heisenberg:
    case PresetFamily::HeisenbergSpace:
      if (order <= 1) return eng.gen("I");
      throw std::invalid_argument("the Heisenberg algebra has the single invariant I");
    default:
      throw std::invalid_argument("no Casimir builder for this preset");
  }
}

WRelationReport verify_w_relations(PbwEngine& eng) {
  WRelationReport rep;
  const auto& sc = eng.algebra();
  auto [lo, hi] = z_index_range(sc);
  auto eta = [&](int a, int b) { return GRat(Rat(sc.metric().eta(a - lo, b - lo))); };
  const GRat I = GRat::unit_i();

  for (int a = lo; a <= hi && rep.heisenberg_invariant; ++a)
    for (int b = lo; b <= hi && rep.heisenberg_invariant; ++b) {
      EnvElement w = w_generator(eng, a, b);
      for (int c = lo; c <= hi; ++c) {
        if (!eng.bracket(eng.gen(ap(c)), w).is_zero() ||
            !eng.bracket(eng.gen(am(c)), w).is_zero()) {
          rep.heisenberg_invariant = false;
          rep.first_failure = "[A(" + std::to_string(c) + "), W(" + std::to_string(a) + "," +
                              std::to_string(b) + ")] != 0";
          break;
        }
      }
    }

  // [Z_ab, W_cd] = i (eta_ad W_cb - eta_bc W_ad)
  for (int a = lo; a <= hi && rep.z_pattern_ok; ++a)
    for (int b = lo; b <= hi && rep.z_pattern_ok; ++b)
      for (int c = lo; c <= hi && rep.z_pattern_ok; ++c)
        for (int d = lo; d <= hi; ++d) {
          EnvElement lhs = eng.bracket(eng.gen(zn(a, b)), w_generator(eng, c, d));
          EnvElement rhs = w_generator(eng, c, b) * (I * eta(a, d));
          rhs -= w_generator(eng, a, d) * (I * eta(b, c));
          if (!(lhs == rhs)) {
            rep.z_pattern_ok = false;
            rep.first_failure = "[Z(" + std::to_string(a) + "," + std::to_string(b) +
                                "), W(" + std::to_string(c) + "," + std::to_string(d) +
                                ")] pattern mismatch";
            break;
          }
        }
  return rep;
}

PauliLubanskiReport verify_pauli_lubanski(PbwEngine& eng) {
  PauliLubanskiReport rep;
  EnvElement c4 = poincare_casimir(eng, 4);

  // Three-notation spin vector, written out by hand:
  //   W^0 = Qhat . J,   W^i = -(That J_i + eps_ijk Qhat_j K_k).
  // The audited expansion is eta_ab W^a W^b with the components grouped
  // before squaring.  Expanding with commuting factors and sigma'(K) = 0
  // reproduces the -J^2 E^2 + (P.J)^2 (+ boost terms) scalar form, up to the
  // overall eta convention; abstractly the boost cross terms must be kept.
  const Rat c = eng.algebra().params().c;
  auto qhat = [&](int i) {
    return eng.gen("Q_" + std::to_string(i)) * GRat(Rat(1) / c);
  };
  EnvElement w0;
  for (int i = 1; i <= 3; ++i) w0 += eng.product(qhat(i), eng.gen("J_" + std::to_string(i)));

  std::vector<EnvElement> wi(4);
  for (int i = 1; i <= 3; ++i)
    wi[i] -= eng.product(eng.gen("T"), eng.gen("J_" + std::to_string(i)));
  // eps_ijk Qhat_j K_k with eps_123 = +1
  auto add_eps = [&](int i, int j, int k, int sign) {
    wi[i] -= eng.product(qhat(j), eng.gen("K_" + std::to_string(k))) * GRat(sign);
  };
  add_eps(1, 2, 3, 1);
  add_eps(1, 3, 2, -1);
  add_eps(2, 3, 1, 1);
  add_eps(2, 1, 3, -1);
  add_eps(3, 1, 2, 1);
  add_eps(3, 2, 1, -1);

  EnvElement expansion = eng.product(w0, w0) * GRat(-1);
  for (int i = 1; i <= 3; ++i) expansion += eng.product(wi[i], wi[i]);

  rep.difference = c4 - expansion;
  rep.identity_ok = rep.difference.is_zero();
  rep.central_ok = verify_central(c4, eng).central;
  return rep;
}

}  // namespace quap
