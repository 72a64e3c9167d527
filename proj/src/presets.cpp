#include "quap/presets.hpp"

#include <functional>
#include <stdexcept>

#include "quap/contraction.hpp"

namespace quap {

namespace {

std::string idx1(const std::string& stem, int i) { return stem + "_" + std::to_string(i); }
std::string idx2(const std::string& stem, int a, int b) {
  return stem + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}
std::string Lname(int a, int b) { return idx2("L", a, b); }
std::string Mname(int a, int b) { return idx2("M", std::min(a, b), std::max(a, b)); }
std::string Zname(int a, int b) { return idx2("Z", a, b); }
std::string Apname(int a) { return "A+(" + std::to_string(a) + ")"; }
std::string Amname(int a) { return "A-(" + std::to_string(a) + ")"; }

StructureConstants build_heisenberg(int n, bool with_time, Params params) {
  GeneratorBasis gb;
  if (with_time) {
    gb.names.insert(gb.names.end(), {"T", "E"});
    gb.grading.insert(gb.grading.end(), {Grading::Translation, Grading::Translation});
  }
  for (int i = 1; i <= n; ++i) {
    gb.names.push_back(idx1("Q", i));
    gb.grading.push_back(Grading::Translation);
  }
  for (int i = 1; i <= n; ++i) {
    gb.names.push_back(idx1("P", i));
    gb.grading.push_back(Grading::Translation);
  }
  gb.names.push_back("I");
  gb.grading.push_back(Grading::Center);

  Metric metric = with_time ? Metric::lorentzian(n) : Metric::euclidean(n);
  StructureConstants sc(gb, metric, params);
  const Coeff hbar = cpow(1, 1, 0, 0, 1);
  for (int i = 1; i <= n; ++i) sc.add(idx1("Q", i), idx1("P", i), hbar, "I");
  if (with_time) sc.add("T", "E", -hbar, "I");
  return sc;
}

StructureConstants build_translation(int m, Params params) {
  GeneratorBasis gb;
  for (int i = 1; i <= m; ++i) {
    gb.names.push_back(idx1("X", i));
    gb.grading.push_back(Grading::Translation);
  }
  return StructureConstants(gb, Metric::euclidean(m), params);
}

// [Z_ab, Z_cd] = i (Z_cb eta_ad - Z_ad eta_bc) over index range lo..hi.
void add_unitary_sector(StructureConstants& sc, int lo, int hi) {
  const GRat I = GRat::unit_i();
  auto et = [&](int a, int b) { return sc.metric().eta(a - lo, b - lo); };
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      for (int c = lo; c <= hi; ++c)
        for (int d = lo; d <= hi; ++d) {
          if (std::make_pair(a, b) >= std::make_pair(c, d)) continue;
          if (et(a, d) != 0) sc.add(Zname(a, b), Zname(c, d), Coeff(I * GRat(et(a, d))), Zname(c, b));
          if (et(b, c) != 0) sc.add(Zname(a, b), Zname(c, d), Coeff(-(I * GRat(et(b, c)))), Zname(a, d));
        }
}

// Complex quaplectic basis {Z_ab, A_a^+, A_a^-, I}.  The printed complex
// table does not close under Jacobi as written; this is the audited
// variant, which is exactly the complexification of the real four-index
// table under Z_ab = (M_ab - i L_ab)/2, A_a^pm = (X_a -+ i Y_a)/sqrt(2):
//   [Z_ab, Z_cd]  = i (Z_cb eta_ad - Z_ad eta_bc)
//   [Z_ab, A_c^+] = -i eta_bc A_a^+
//   [Z_ab, A_c^-] = +i eta_ac A_b^-
//   [A_a^+, A_b^-] = i eta_ab I
StructureConstants build_quaplectic_complex(int n, bool lorentzian, Params params) {
  const int lo = lorentzian ? 0 : 1;
  const int hi = n;
  GeneratorBasis gb;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b) {
      gb.names.push_back(Zname(a, b));
      gb.grading.push_back(Grading::Homogeneous);
    }
  for (int a = lo; a <= hi; ++a) {
    gb.names.push_back(Apname(a));
    gb.grading.push_back(Grading::Translation);
  }
  for (int a = lo; a <= hi; ++a) {
    gb.names.push_back(Amname(a));
    gb.grading.push_back(Grading::Translation);
  }
  gb.names.push_back("I");
  gb.grading.push_back(Grading::Center);

  Metric metric = lorentzian ? Metric::lorentzian(n) : Metric::euclidean(n);
  StructureConstants sc(gb, metric, params);
  auto et = [&](int a, int b) { return metric.eta(a - lo, b - lo); };
  const GRat I = GRat::unit_i();

  add_unitary_sector(sc, lo, hi);
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b)
      for (int c = lo; c <= hi; ++c) {
        if (et(b, c) != 0) sc.add(Zname(a, b), Apname(c), Coeff(-(I * GRat(et(b, c)))), Apname(a));
        if (et(a, c) != 0) sc.add(Zname(a, b), Amname(c), Coeff(I * GRat(et(a, c))), Amname(b));
      }
  for (int a = lo; a <= hi; ++a)
    if (et(a, a) != 0) sc.add(Apname(a), Amname(a), Coeff(I * GRat(et(a, a))), "I");
  return sc;
}

StructureConstants build_unitary(int n, bool lorentzian, Params params) {
  const int lo = lorentzian ? 0 : 1;
  const int hi = n;
  GeneratorBasis gb;
  for (int a = lo; a <= hi; ++a)
    for (int b = lo; b <= hi; ++b) {
      gb.names.push_back(Zname(a, b));
      gb.grading.push_back(Grading::Homogeneous);
    }
  Metric metric = lorentzian ? Metric::lorentzian(n) : Metric::euclidean(n);
  StructureConstants sc(gb, metric, params);
  add_unitary_sector(sc, lo, hi);
  return sc;
}

StructureConstants build_oscillator(int n, Params params) {
  GeneratorBasis gb;
  gb.names.push_back("U");
  gb.grading.push_back(Grading::Homogeneous);
  for (int a = 0; a <= n; ++a) {
    gb.names.push_back(Apname(a));
    gb.grading.push_back(Grading::Translation);
  }
  for (int a = 0; a <= n; ++a) {
    gb.names.push_back(Amname(a));
    gb.grading.push_back(Grading::Translation);
  }
  gb.names.push_back("I");
  gb.grading.push_back(Grading::Center);

  Metric metric = Metric::lorentzian(n);
  StructureConstants sc(gb, metric, params);
  const GRat I = GRat::unit_i();
  for (int a = 0; a <= n; ++a) {
    sc.add("U", Apname(a), Coeff(-I), Apname(a));
    sc.add("U", Amname(a), Coeff(I), Amname(a));
    sc.add(Apname(a), Amname(a), Coeff(I * GRat(metric.eta(a, a))), "I");
  }
  return sc;
}

// Real four-index quaplectic table over {L_ab (a<b), M_ab (a<=b), X, Y, I}:
//   [L_ab, L_cd] = -L_bd n_ac + L_bc n_ad + L_ad n_bc - L_ac n_bd
//   [L_ab, M_cd] = -M_bd n_ac - M_bc n_ad + M_ad n_bc + M_ac n_bd
//   [M_ab, M_cd] = -L_bd n_ac - L_bc n_ad - L_ad n_bc - L_ac n_bd
//   [L_ab, X_c]  = -X_b n_ac + X_a n_bc      (Y likewise)
//   [M_ab, X_c]  = -(1/b)(Y_b n_ac + Y_a n_bc)
//   [M_ab, Y_c]  = +b  (X_b n_ac + X_a n_bc)
//   [X_a, Y_b]   = hbar n_ab I
// The 1/b and b factors come from the dimensional scales of X and Y; the
// velocity constant c does not enter in four notation.
StructureConstants build_quaplectic_real4(int n, Params params) {
  GeneratorBasis gb;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      gb.names.push_back(Lname(a, b));
      gb.grading.push_back(Grading::Homogeneous);
    }
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) {
      gb.names.push_back(Mname(a, b));
      gb.grading.push_back(Grading::Homogeneous);
    }
  for (int a = 0; a <= n; ++a) {
    gb.names.push_back(idx1("X", a));
    gb.grading.push_back(Grading::Translation);
  }
  for (int a = 0; a <= n; ++a) {
    gb.names.push_back(idx1("Y", a));
    gb.grading.push_back(Grading::Translation);
  }
  gb.names.push_back("I");
  gb.grading.push_back(Grading::Center);

  Metric metric = Metric::lorentzian(n);
  StructureConstants sc(gb, metric, params);
  auto et = [&](int a, int b) { return metric.eta(a, b); };

  // L_ab for arbitrary index order: L_ba = -L_ab, L_aa = 0.
  auto addL = [&](const std::string& x, const std::string& y, long num, int a, int b) {
    if (a == b || num == 0) return;
    if (a < b)
      sc.add(x, y, Coeff(GRat(num)), Lname(a, b));
    else
      sc.add(x, y, Coeff(GRat(-num)), Lname(b, a));
  };
  auto addM = [&](const std::string& x, const std::string& y, long num, int a, int b) {
    if (num == 0) return;
    sc.add(x, y, Coeff(GRat(num)), Mname(a, b));
  };

  std::vector<std::pair<int, int>> lpairs, mpairs;
  for (int a = 0; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) lpairs.emplace_back(a, b);
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) mpairs.emplace_back(a, b);

  for (size_t p = 0; p < lpairs.size(); ++p)
    for (size_t q = p + 1; q < lpairs.size(); ++q) {
      auto [a, b] = lpairs[p];
      auto [c, d] = lpairs[q];
      addL(Lname(a, b), Lname(c, d), -et(a, c), b, d);
      addL(Lname(a, b), Lname(c, d), et(a, d), b, c);
      addL(Lname(a, b), Lname(c, d), et(b, c), a, d);
      addL(Lname(a, b), Lname(c, d), -et(b, d), a, c);
    }

  for (auto [a, b] : lpairs)
    for (auto [c, d] : mpairs) {
      addM(Lname(a, b), Mname(c, d), -et(a, c), b, d);
      addM(Lname(a, b), Mname(c, d), -et(a, d), b, c);
      addM(Lname(a, b), Mname(c, d), et(b, c), a, d);
      addM(Lname(a, b), Mname(c, d), et(b, d), a, c);
    }

  for (size_t p = 0; p < mpairs.size(); ++p)
    for (size_t q = p + 1; q < mpairs.size(); ++q) {
      auto [a, b] = mpairs[p];
      auto [c, d] = mpairs[q];
      addL(Mname(a, b), Mname(c, d), -et(a, c), b, d);
      addL(Mname(a, b), Mname(c, d), -et(a, d), b, c);
      addL(Mname(a, b), Mname(c, d), -et(b, c), a, d);
      addL(Mname(a, b), Mname(c, d), -et(b, d), a, c);
    }

  const Coeff inv_b = cpow(1, 1, 0, -1, 0);
  const Coeff plus_b = cpow(1, 1, 0, 1, 0);
  for (int c = 0; c <= n; ++c) {
    for (auto [a, b] : lpairs) {
      if (et(a, c) != 0) {
        sc.add(Lname(a, b), idx1("X", c), Coeff(GRat(-et(a, c))), idx1("X", b));
        sc.add(Lname(a, b), idx1("Y", c), Coeff(GRat(-et(a, c))), idx1("Y", b));
      }
      if (et(b, c) != 0) {
        sc.add(Lname(a, b), idx1("X", c), Coeff(GRat(et(b, c))), idx1("X", a));
        sc.add(Lname(a, b), idx1("Y", c), Coeff(GRat(et(b, c))), idx1("Y", a));
      }
    }
    for (auto [a, b] : mpairs) {
      if (et(a, c) != 0) {
        sc.add(Mname(a, b), idx1("X", c), Coeff(GRat(-et(a, c))) * inv_b, idx1("Y", b));
        sc.add(Mname(a, b), idx1("Y", c), Coeff(GRat(et(a, c))) * plus_b, idx1("X", b));
      }
      if (et(b, c) != 0) {
        sc.add(Mname(a, b), idx1("X", c), Coeff(GRat(-et(b, c))) * inv_b, idx1("Y", a));
        sc.add(Mname(a, b), idx1("Y", c), Coeff(GRat(et(b, c))) * plus_b, idx1("X", a));
      }
    }
  }

  const Coeff hbar = cpow(1, 1, 0, 0, 1);
  for (int a = 0; a <= n; ++a)
    sc.add(idx1("X", a), idx1("Y", a), Coeff(GRat(et(a, a))) * hbar, "I");
  return sc;
}

// n-notation basis of C(1,n): dimensional rescaling plus relabeling of the
// four-index table.  For n = 3 the rotations use the vector names
// J_1 = L(3,2), J_2 = L(1,3), J_3 = L(2,1); otherwise the pairs J(i,j).
StructureConstants build_quaplectic_realn(int n, Params params) {
  StructureConstants four = build_quaplectic_real4(n, params);
  BasisMap map;
  auto src = [&](const std::string& s) { return four.basis().index_of(s); };
  auto homog = [&](const std::string& name, const std::string& source, Coeff scale) {
    map.gens.push_back({name, src(source), scale, Grading::Homogeneous});
  };
  auto trans = [&](const std::string& name, const std::string& source, Coeff scale) {
    map.gens.push_back({name, src(source), scale, Grading::Translation});
  };

  if (n == 3) {
    homog("J_1", Lname(2, 3), Coeff(GRat(-1)));
    homog("J_2", Lname(1, 3), Coeff(GRat(1)));
    homog("J_3", Lname(1, 2), Coeff(GRat(-1)));
  } else {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) homog(idx2("J", i, j), Lname(i, j), Coeff(GRat(1)));
  }
  for (int i = 1; i <= n; ++i) homog(idx1("K", i), Lname(0, i), Coeff(GRat(1)));
  for (int i = 1; i <= n; ++i) homog(idx1("N", i), Mname(0, i), Coeff(GRat(1)));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) homog(Mname(i, j), Mname(i, j), Coeff(GRat(1)));
  homog("R", Mname(0, 0), Coeff(GRat(Rat(1, 2))));
  trans("T", idx1("X", 0), Coeff(GRat(1), -1, 0, 0));
  for (int i = 1; i <= n; ++i) trans(idx1("Q", i), idx1("X", i), Coeff(GRat(1), 1, 0, 0));
  trans("E", idx1("Y", 0), Coeff(GRat(1), 1, 0, 0));
  for (int i = 1; i <= n; ++i) trans(idx1("P", i), idx1("Y", i), Coeff(GRat(1), -1, 0, 0));
  map.gens.push_back({"I", src("I"), Coeff(GRat(1)), Grading::Center});

  return rescale_basis(four, map, Metric::lorentzian(n), params);
}

StructureConstants build_poincare(int n, Params params) {
  StructureConstants full = build_quaplectic_realn(n, params);
  std::vector<std::string> keep;
  if (n == 3)
    for (int i = 1; i <= 3; ++i) keep.push_back(idx1("J", i));
  else
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) keep.push_back(idx2("J", i, j));
  for (int i = 1; i <= n; ++i) keep.push_back(idx1("K", i));
  keep.push_back("T");
  for (int i = 1; i <= n; ++i) keep.push_back(idx1("Q", i));
  return restrict_subalgebra(full, keep, Metric::lorentzian(n));
}

StructureConstants build_galilei(int n, Params params) {
  StructureConstants poin = build_poincare(n, params);
  ContractionScaling s = ContractionScaling::identity(poin, 'c');
  for (int i = 1; i <= n; ++i) s.set(poin, idx1("K", i), 1, idx1("G", i));
  return contract(poin, s, Metric::euclidean(n));
}

StructureConstants build_b_limit(int n, Params params) {
  StructureConstants four = build_quaplectic_real4(n, params);
  ContractionScaling s = ContractionScaling::identity(four, 'b');
  for (int a = 0; a <= n; ++a)
    for (int b = a; b <= n; ++b) s.set(four, Mname(a, b), 1, idx2("M0", a, b));
  return contract(four, s);
}

StructureConstants build_galilean_phase(int n, Params params) {
  StructureConstants full = build_quaplectic_realn(n, params);
  ContractionScaling sc_c = ContractionScaling::identity(full, 'c');
  for (int i = 1; i <= n; ++i) sc_c.set(full, idx1("K", i), 1, idx1("G", i));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) sc_c.set(full, Mname(i, j), 1);
  sc_c.set(full, "R", 1);
  StructureConstants half = contract(full, sc_c);

  ContractionScaling sc_b = ContractionScaling::identity(half, 'b');
  for (int i = 1; i <= n; ++i) sc_b.set(half, idx1("N", i), 1, idx1("F", i));
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) sc_b.set(half, Mname(i, j), 1, idx2("M0", i, j));
  sc_b.set(half, "R", 1, "R0");
  return contract(half, sc_b, Metric::euclidean(n));
}

}  // namespace

PresetId parse_preset(const std::string& name, int n_default) {
  auto fail = [&]() -> PresetId {
    throw std::invalid_argument("unknown preset: " + name);
  };
  std::string stem = name;
  std::string suffix;
  int n = n_default;
  bool lorentz_dims = false;

  auto parse_dim = [&](const std::string& s) {
    if (s == "n" || s == "m") return n_default;
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) fail();
    return v;
  };
  auto lp = name.find('(');
  if (lp != std::string::npos) {
    auto rp = name.find(')', lp);
    if (rp == std::string::npos) fail();
    std::string dims = name.substr(lp + 1, rp - lp - 1);
    stem = name.substr(0, lp);
    suffix = name.substr(rp + 1);
    auto comma = dims.find(',');
    if (comma == std::string::npos) {
      n = parse_dim(dims);
    } else {
      if (dims.substr(0, comma) != "1") fail();
      lorentz_dims = true;
      n = parse_dim(dims.substr(comma + 1));
    }
  }

  PresetFamily f;
  if (stem == "heisenberg")
    f = lorentz_dims ? PresetFamily::HeisenbergSpace : PresetFamily::Heisenberg;
  else if (stem == "translation")
    f = PresetFamily::Translation;
  else if (stem == "poincare")
    f = PresetFamily::Poincare;
  else if (stem == "galilei")
    f = PresetFamily::Galilei;
  else if (stem == "u")
    f = lorentz_dims ? PresetFamily::UnitaryNoncompact : PresetFamily::UnitaryCompact;
  else if (stem == "Os")
    f = PresetFamily::Oscillator;
  else if (stem == "B")
    f = PresetFamily::BLimit;
  else if (stem == "galilean-phase-limit")
    f = PresetFamily::GalileanPhase;
  else if (stem == "C" && !lorentz_dims)
    f = PresetFamily::QuaplecticCompact;
  else if (stem == "C" && lorentz_dims) {
    if (suffix == "-real-4")
      f = PresetFamily::QuaplecticReal4;
    else if (suffix == "-complex")
      f = PresetFamily::QuaplecticComplex;
    else if (suffix == "-real-n" || suffix.empty())
      f = PresetFamily::QuaplecticRealN;
    else
      fail();
  } else
    fail();
  if (!suffix.empty() && stem != "C") fail();
  return PresetId{f, n};
}

StructureConstants build_algebra(const PresetId& id, Params params) {
  const int n = id.n;
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  switch (id.family) {
    case PresetFamily::Heisenberg:
      return build_heisenberg(n, false, params);
    case PresetFamily::HeisenbergSpace:
      return build_heisenberg(n, true, params);
    case PresetFamily::Translation:
      return build_translation(n, params);
    case PresetFamily::Poincare:
      return build_poincare(n, params);
    case PresetFamily::Galilei:
      return build_galilei(n, params);
    case PresetFamily::UnitaryCompact:
      return build_unitary(n, false, params);
    case PresetFamily::UnitaryNoncompact:
      return build_unitary(n, true, params);
    default:
      break;
  }
  if (n > 4) throw std::invalid_argument("quaplectic presets support n <= 4");
  switch (id.family) {
    case PresetFamily::QuaplecticCompact:
      return build_quaplectic_complex(n, false, params);
    case PresetFamily::QuaplecticComplex:
      return build_quaplectic_complex(n, true, params);
    case PresetFamily::QuaplecticReal4:
      return build_quaplectic_real4(n, params);
    case PresetFamily::QuaplecticRealN:
      return build_quaplectic_realn(n, params);
    case PresetFamily::Oscillator:
      return build_oscillator(n, params);
    case PresetFamily::BLimit:
      return build_b_limit(n, params);
    case PresetFamily::GalileanPhase:
      return build_galilean_phase(n, params);
    default:
      throw std::logic_error("unhandled preset family");
  }
}

StructureConstants build_algebra(const std::string& preset, int n, Params params) {
  return build_algebra(parse_preset(preset, n), params);
}

bool is_complex_basis(PresetFamily f) {
  switch (f) {
    case PresetFamily::UnitaryCompact:
    case PresetFamily::UnitaryNoncompact:
    case PresetFamily::QuaplecticCompact:
    case PresetFamily::QuaplecticComplex:
    case PresetFamily::Oscillator:
      return true;
    default:
      return false;
  }
}

}  // namespace quap
