#include <doctest.h>

#include <set>

#include "quap/algebra.hpp"
#include "quap/born.hpp"
#include "quap/contraction.hpp"
#include "quap/pauli.hpp"
#include "quap/presets.hpp"

using namespace quap;

namespace {

const std::vector<std::string> kAllPresets = {
    "heisenberg(n)", "heisenberg(1,n)", "translation(m)",  "poincare(1,n)",
    "galilei(n)",    "u(n)",            "u(1,n)",          "C(n)",
    "C(1,n)-real-n", "C(1,n)-real-4",   "C(1,n)-complex",  "Os(1,n)",
    "B(1,n)",        "galilean-phase-limit(n)"};

GRat bracket_coeff(const StructureConstants& sc, const std::string& a, const std::string& b,
                   const std::string& target) {
  auto v = sc.bracket(sc.basis().index_of(a), sc.basis().index_of(b));
  return v[sc.basis().index_of(target)];
}

}  // namespace

TEST_CASE("generator labels are unique and graded") {
  for (auto& name : kAllPresets) {
    for (int n = 1; n <= 3; ++n) {
      auto sc = build_algebra(name, n);
      std::set<std::string> seen(sc.basis().names.begin(), sc.basis().names.end());
      CHECK(static_cast<int>(seen.size()) == sc.dim());
      int centers = 0;
      for (auto g : sc.basis().grading)
        if (g == Grading::Center) ++centers;
      bool heisenberg_like = sc.basis().find("I").has_value();
      CHECK(centers == (heisenberg_like ? 1 : 0));
    }
  }
}

TEST_CASE("antisymmetry and Jacobi close exactly for every preset, n <= 4") {
  for (auto& name : kAllPresets) {
    for (int n = 1; n <= 4; ++n) {
      CAPTURE(name);
      CAPTURE(n);
      auto sc = build_algebra(name, n);
      auto rep = verify_jacobi(sc);
      CHECK_MESSAGE(rep.antisymmetric, rep.first_failure);
      CHECK_MESSAGE(rep.jacobi_ok, rep.first_failure);
    }
  }
}

TEST_CASE("Jacobi holds away from default parameters") {
  Params p;
  p.c = Rat(3);
  p.b = Rat(5, 2);
  p.hbar = Rat(7, 3);
  for (auto& name : {"poincare(1,3)", "C(1,3)-real-n", "C(1,2)-real-4", "heisenberg(1,2)"}) {
    auto sc = build_algebra(name, 3, p);
    auto rep = verify_jacobi(sc);
    CHECK_MESSAGE(rep.jacobi_ok, name, ": ", rep.first_failure);
  }
}

TEST_CASE("a deliberately corrupted table fails the Jacobi scan") {
  auto sc = build_algebra("poincare(1,3)", 3);
  // flip the sign of [J_1, J_2]
  sc.add("J_1", "J_2", Coeff(GRat(-2)), "J_3");
  auto rep = verify_jacobi(sc);
  CHECK_FALSE(rep.jacobi_ok);
}

TEST_CASE("poincare(1,3) table entries") {
  Params p;
  p.c = Rat(3);
  auto sc = build_algebra("poincare(1,3)", 3, p);
  // velocity boost rows of the position-time Poincare table
  CHECK(bracket_coeff(sc, "K_1", "Q_1", "T") == GRat(Rat(3)));
  CHECK(bracket_coeff(sc, "K_1", "T", "Q_1") == GRat(Rat(1, 3)));
  CHECK(bracket_coeff(sc, "K_1", "Q_2", "T") == GRat());
  CHECK(bracket_coeff(sc, "J_1", "J_2", "J_3") == GRat(1));
  CHECK(bracket_coeff(sc, "K_1", "K_2", "J_3") == GRat(-1));
  CHECK(bracket_coeff(sc, "J_1", "Q_2", "Q_3") == GRat(1));
  CHECK(bracket_coeff(sc, "J_1", "K_2", "K_3") == GRat(1));
}

TEST_CASE("heisenberg tables") {
  Params p;
  p.hbar = Rat(7);
  auto sc = build_algebra("heisenberg(3)", 3, p);
  CHECK(bracket_coeff(sc, "Q_1", "P_1", "I") == GRat(Rat(7)));
  CHECK(bracket_coeff(sc, "Q_1", "P_2", "I") == GRat());
  auto sct = build_algebra("heisenberg(1,3)", 3, p);
  CHECK(bracket_coeff(sct, "T", "E", "I") == GRat(Rat(-7)));
  // [X, X] = 0 for every generator
  for (int g = 0; g < sct.dim(); ++g) {
    auto v = sct.bracket(g, g);
    for (auto& c : v) CHECK(c == GRat());
  }
}

TEST_CASE("C(1,3)-real-n reproduces the audited momentum/energy boost rows") {
  Params p;
  p.c = Rat(2);
  p.b = Rat(5);
  auto sc = build_algebra("C(1,3)-real-n", 3, p);
  CHECK(bracket_coeff(sc, "K_1", "E", "P_1") == GRat(Rat(2)));
  CHECK(bracket_coeff(sc, "K_1", "P_1", "E") == GRat(Rat(1, 2)));
  CHECK(bracket_coeff(sc, "N_1", "T", "P_1") == GRat(Rat(1, 5)));
  CHECK(bracket_coeff(sc, "N_1", "P_1", "T") == GRat(Rat(5)));
  CHECK(bracket_coeff(sc, "N_1", "Q_1", "E") == GRat(Rat(-1, 5)));
  CHECK(bracket_coeff(sc, "N_1", "E", "Q_1") == GRat(Rat(-5)));
  CHECK(bracket_coeff(sc, "N_1", "N_2", "J_3") == GRat(-1));
  CHECK(bracket_coeff(sc, "R", "T", "E") == GRat(Rat(1, 10)));
  CHECK(bracket_coeff(sc, "R", "E", "T") == GRat(Rat(-10)));
  CHECK(bracket_coeff(sc, "K_1", "R", "N_1") == GRat(1));
  CHECK(bracket_coeff(sc, "M(1,2)", "Q_1", "P_2") == GRat(Rat(-2, 5)));
  CHECK(bracket_coeff(sc, "M(1,2)", "P_1", "Q_2") == GRat(Rat(5, 2)));
  CHECK(bracket_coeff(sc, "Q_1", "P_1", "I") == GRat(1));
}

TEST_CASE("Poincare subalgebras close inside C(1,3)") {
  auto sc = build_algebra("C(1,3)-real-n", 3);
  // {J_i, K_i, Q_i, T}: position-time copy, already the poincare preset
  auto poin = build_algebra("poincare(1,3)", 3);
  std::vector<std::string> pos_time = {"J_1", "J_2", "J_3", "K_1", "K_2", "K_3",
                                       "T",   "Q_1", "Q_2", "Q_3"};
  auto restricted = restrict_subalgebra(sc, pos_time, Metric::lorentzian(3));
  CHECK(restricted.has_same_entry_set(poin));

  // {J_i, N_i, P_i, T}: force-boost copy closes with b replacing c
  std::vector<std::string> mom_time = {"J_1", "J_2", "J_3", "N_1", "N_2", "N_3",
                                       "T",   "P_1", "P_2", "P_3"};
  auto force = restrict_subalgebra(sc, mom_time, Metric::lorentzian(3));
  CHECK(bracket_coeff(force, "N_1", "P_1", "T") == GRat(1));
  CHECK(bracket_coeff(force, "N_1", "T", "P_1") == GRat(1));
  CHECK(bracket_coeff(force, "N_1", "N_2", "J_3") == GRat(-1));
  CHECK(verify_jacobi(force).jacobi_ok);
}

TEST_CASE("complex and real-4 quaplectic bases describe the same algebra") {
  // Scaled real generators inside the complex basis:
  //   Mt_ab = Z_ab + Z_ba, Lt_ab = i (Z_ab - Z_ba),
  //   Xt_a = A_a^+ + A_a^-,  Yt_a = i (A_a^+ - A_a^-).
  // Their brackets must match the real-4 table, with [Xt, Yt] = 2 eta I.
  const int n = 2;
  auto cx = build_algebra("C(1,2)-complex", n);
  auto re = build_algebra("C(1,2)-real-4", n);
  const int d = cx.dim();
  const GRat I = GRat::unit_i();

  auto zdx = [&](int a, int b) {
    return cx.basis().index_of("Z(" + std::to_string(a) + "," + std::to_string(b) + ")");
  };
  auto elem = [&](const std::string& which, int a, int b = 0) {
    AlgebraElement e = AlgebraElement::zero(d);
    if (which == "M") {
      e.coeff[zdx(a, b)] += GRat(1);
      e.coeff[zdx(b, a)] += GRat(1);
    } else if (which == "L") {
      e.coeff[zdx(a, b)] += I;
      e.coeff[zdx(b, a)] -= I;
    } else if (which == "X") {
      e.coeff[cx.basis().index_of("A+(" + std::to_string(a) + ")")] += GRat(1);
      e.coeff[cx.basis().index_of("A-(" + std::to_string(a) + ")")] += GRat(1);
    } else if (which == "Y") {
      e.coeff[cx.basis().index_of("A+(" + std::to_string(a) + ")")] += I;
      e.coeff[cx.basis().index_of("A-(" + std::to_string(a) + ")")] -= I;
    }
    return e;
  };

  auto real_elem = [&](const std::string& name, int a, int b) {
    if (name == "M" || name == "L")
      return std::string(1, name[0]) + "(" + std::to_string(std::min(a, b)) + "," +
             std::to_string(std::max(a, b)) + ")";
    return name + "_" + std::to_string(a);
  };
  (void)real_elem;

  // check [Mt_ab, Xt_c] = -eta_ac Yt_b - eta_bc Yt_a and [Xt_a, Yt_b] = 2 eta_ab I
  auto eta = [&](int a, int b) { return cx.metric().eta(a, b); };
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b)
      for (int c = 0; c <= n; ++c) {
        AlgebraElement lhs = commutator(elem("M", a, b), elem("X", c), cx);
        AlgebraElement rhs = AlgebraElement::zero(d);
        rhs += elem("Y", b) * GRat(Rat(-eta(a, c)));
        rhs += elem("Y", a) * GRat(Rat(-eta(b, c)));
        CHECK(lhs.coeff == rhs.coeff);

        AlgebraElement lhsl = commutator(elem("L", a, b), elem("X", c), cx);
        AlgebraElement rhsl = AlgebraElement::zero(d);
        rhsl += elem("X", a) * GRat(Rat(eta(b, c)));
        rhsl += elem("X", b) * GRat(Rat(-eta(a, c)));
        CHECK(lhsl.coeff == rhsl.coeff);
      }
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      AlgebraElement lhs = commutator(elem("X", a), elem("Y", b), cx);
      AlgebraElement rhs = AlgebraElement::zero(d);
      rhs.coeff[cx.basis().index_of("I")] = GRat(Rat(2 * eta(a, b)));
      CHECK(lhs.coeff == rhs.coeff);
    }
  CHECK(verify_jacobi(re).jacobi_ok);
}

TEST_CASE("commutator is bilinear and antisymmetric") {
  auto sc = build_algebra("C(3)", 3);
  const int d = sc.dim();
  AlgebraElement x = AlgebraElement::zero(d);
  x.coeff[sc.basis().index_of("Z(1,2)")] = GRat(Rat(2, 3));
  x.coeff[sc.basis().index_of("A+(1)")] = GRat(Rat(0), Rat(1));
  AlgebraElement y = AlgebraElement::generator(d, sc.basis().index_of("A-(2)"));
  AlgebraElement xy = commutator(x, y, sc);
  AlgebraElement yx = commutator(y, x, sc);
  for (int t = 0; t < d; ++t) CHECK(xy.coeff[t] == -yx.coeff[t]);
  CHECK(commutator(x, x, sc).is_zero());
}

TEST_CASE("galilei contraction reproduces the contracted table") {
  Params p;
  auto galilei = build_algebra("galilei(3)", 3, p);
  CHECK(bracket_coeff(galilei, "G_1", "Q_1", "T") == GRat(1));
  CHECK(bracket_coeff(galilei, "J_1", "G_2", "G_3") == GRat(1));
  CHECK(bracket_coeff(galilei, "J_1", "J_2", "J_3") == GRat(1));
  CHECK(bracket_coeff(galilei, "J_1", "Q_2", "Q_3") == GRat(1));
  // vanished rows
  CHECK(galilei.bracket(galilei.basis().index_of("G_1"), galilei.basis().index_of("G_2")) ==
        std::vector<GRat>(galilei.dim(), GRat()));
  CHECK(galilei.bracket(galilei.basis().index_of("G_1"), galilei.basis().index_of("T")) ==
        std::vector<GRat>(galilei.dim(), GRat()));
  CHECK(verify_jacobi(galilei).jacobi_ok);
}

TEST_CASE("identity scaling leaves the table unchanged") {
  auto sc = build_algebra("poincare(1,3)", 3);
  auto s = ContractionScaling::identity(sc, 'c');
  auto out = contract(sc, s);
  CHECK(out.has_same_entry_set(sc));
}

TEST_CASE("divergent scaling is reported with the offending pair") {
  auto sc = build_algebra("poincare(1,3)", 3);
  auto s = ContractionScaling::identity(sc, 'c');
  // scaling only T makes [K_1, Q_1] = c T diverge twice over
  s.set(sc, "T", 1);
  bool threw = false;
  try {
    contract(sc, s);
  } catch (const std::domain_error& e) {
    threw = true;
    CHECK(std::string(e.what()).find("divergent") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("b -> infinity contraction of the four-index table") {
  auto blim = build_algebra("B(1,3)", 3);
  CHECK(verify_jacobi(blim).jacobi_ok);
  // [M0_ab, Y_c] = X_b eta_ac + X_a eta_bc survives; [M0, X] and [M0, M0] vanish
  CHECK(bracket_coeff(blim, "M0(1,2)", "Y_1", "X_2") == GRat(1));
  CHECK(bracket_coeff(blim, "M0(0,0)", "Y_0", "X_0") == GRat(-2));
  CHECK(blim.bracket(blim.basis().index_of("M0(1,2)"), blim.basis().index_of("X_1")) ==
        std::vector<GRat>(blim.dim(), GRat()));
  CHECK(blim.bracket(blim.basis().index_of("M0(1,2)"), blim.basis().index_of("M0(1,3)")) ==
        std::vector<GRat>(blim.dim(), GRat()));
  // L rows unchanged
  CHECK(bracket_coeff(blim, "L(1,2)", "X_1", "X_2") == GRat(-1));
}

TEST_CASE("double contraction gives the galilean phase-space algebra") {
  auto lim = build_algebra("galilean-phase-limit(3)", 3);
  CHECK(verify_jacobi(lim).jacobi_ok);
  CHECK(bracket_coeff(lim, "G_1", "Q_1", "T") == GRat(1));
  CHECK(bracket_coeff(lim, "G_1", "E", "P_1") == GRat(1));
  CHECK(bracket_coeff(lim, "F_1", "P_1", "T") == GRat(1));
  CHECK(bracket_coeff(lim, "F_1", "E", "Q_1") == GRat(-1));
  CHECK(bracket_coeff(lim, "G_1", "F_1", "R0") == GRat(2));
  CHECK(bracket_coeff(lim, "G_1", "F_2", "M0(1,2)") == GRat(1));
  CHECK(bracket_coeff(lim, "R0", "E", "T") == GRat(-1));
  CHECK(bracket_coeff(lim, "Q_1", "P_1", "I") == GRat(1));
  CHECK(bracket_coeff(lim, "T", "E", "I") == GRat(-1));
  // [M0, M0] = 0 and M0 commutes with the whole Heisenberg sector; only the
  // rotations still act on it as on a symmetric tensor.
  for (auto other : {"M0(1,3)", "M0(2,2)", "T", "E", "Q_1", "P_2", "G_1", "F_3", "R0", "I"}) {
    auto v = lim.bracket(lim.basis().index_of("M0(1,2)"), lim.basis().index_of(other));
    for (auto& c : v) CHECK(c == GRat());
  }
  CHECK(bracket_coeff(lim, "J_3", "M0(1,1)", "M0(1,2)") == GRat(2));
}

TEST_CASE("born map is an involution of order four and a bracket automorphism") {
  auto sc = build_algebra("heisenberg(1,3)", 3);
  auto B = born_map(sc);
  auto B2 = B.compose(B);
  auto B4 = B2.compose(B2);
  CHECK_FALSE(B.is_identity());
  CHECK_FALSE(B2.is_identity());
  CHECK(B4.is_identity());

  std::vector<std::string> span = {"T", "E", "Q_1", "Q_2", "Q_3", "P_1", "P_2", "P_3", "I"};
  CHECK(is_bracket_automorphism(B, sc, span));

  // B(Q_1) = P_1, B(P_1) = -Q_1
  auto q1 = AlgebraElement::generator(sc.dim(), sc.basis().index_of("Q_1"));
  auto img = B.apply(q1);
  CHECK(img.coeff[sc.basis().index_of("P_1")] == GRat(1));
  auto p1 = AlgebraElement::generator(sc.dim(), sc.basis().index_of("P_1"));
  CHECK(B.apply(p1).coeff[sc.basis().index_of("Q_1")] == GRat(-1));
}

TEST_CASE("born map preserves the reciprocity quadratic form") {
  Params p;
  p.c = Rat(3);
  p.b = Rat(2);
  auto sc = build_algebra("C(1,3)-real-n", 3, p);
  CHECK(preserves_form(born_map(sc), sc));
  CHECK(preserves_form(born_map_te(sc), sc));
  auto te = born_map_te(sc);
  auto te2 = te.compose(te);
  auto te4 = te2.compose(te2);
  CHECK(te4.is_identity());
  std::vector<std::string> span = {"T", "E", "Q_1", "P_1", "I"};
  CHECK(is_bracket_automorphism(te, sc, span));
}

TEST_CASE("pauli identity check") {
  CHECK(pauli_identity_check({1, 0, 0}));
  CHECK(pauli_identity_check({1, 1, 0}));
  CHECK(pauli_identity_check({0.3, -1.7, 2.9}, 1.4));
}

TEST_CASE("unknown presets and out-of-range n are rejected") {
  CHECK_THROWS_AS(build_algebra("frobnicate(3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("C(1,5)-real-n", 5), std::invalid_argument);
  CHECK_THROWS_AS(build_algebra("heisenberg(0)", 0), std::invalid_argument);
}
