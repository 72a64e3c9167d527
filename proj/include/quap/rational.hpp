#ifndef QUAP_RATIONAL_HPP
#define QUAP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace quap {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

inline std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

/// Gaussian rational a + b*i with exact components.
struct GRat {
  Rat re;
  Rat im;

  GRat() = default;
  GRat(Rat r) : re(std::move(r)) {}
  GRat(long r) : re(r) {}
  GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

  static GRat unit_i() { return GRat(Rat(0), Rat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GRat operator-() const { return GRat(-re, -im); }
  GRat conj() const { return GRat(re, -im); }

  GRat& operator+=(const GRat& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GRat& operator-=(const GRat& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GRat operator+(GRat a, const GRat& b) { return a += b; }
  friend GRat operator-(GRat a, const GRat& b) { return a -= b; }
  friend GRat operator*(const GRat& a, const GRat& b) {
    return GRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  friend GRat operator/(const GRat& a, const GRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) throw std::domain_error("GRat division by zero");
    return GRat((a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n);
  }
  GRat& operator*=(const GRat& o) { return *this = *this * o; }
  GRat& operator/=(const GRat& o) { return *this = *this / o; }

  friend bool operator==(const GRat& a, const GRat& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GRat& a, const GRat& b) { return !(a == b); }
  friend bool operator<(const GRat& a, const GRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline std::string to_string(const GRat& g) {
  if (g.im == 0) return to_string(g.re);
  std::ostringstream os;
  os << "(" << g.re << (g.im >= 0 ? "+" : "") << g.im << "i)";
  return os.str();
}

/// Exact element of the Q(i)-module spanned by square roots of squarefree
/// integers: sum of coeff * sqrt(radicand).  Closed under multiplication,
/// which is all the ladder-coefficient identities need; used by the exact
/// test paths for Fock and Gel'fand-Tsetlin matrices.
struct Radical {
  // radicand (squarefree, positive) -> Gaussian rational coefficient
  std::map<Int, GRat> terms;

  Radical() = default;
  Radical(const GRat& c) {
    if (!c.is_zero()) terms[1] = c;
  }
  Radical(long v) : Radical(GRat(v)) {}

  /// c * sqrt(m) with m >= 0; factors perfect squares out of m.
  static Radical root(Int m, GRat c = GRat(1)) {
    if (m < 0) throw std::domain_error("Radical::root of negative integer");
    if (c.is_zero() || m == 0) return Radical();
    Int square = 1;
    for (Int p = 2; p * p <= m; ++p) {
      while (m % (p * p) == 0) {
        m /= p * p;
        square *= p;
      }
    }
    Radical r;
    r.terms[m] = c * GRat(Rat(square));
    return r;
  }

  bool is_zero() const { return terms.empty(); }
  bool is_rational() const {
    return terms.empty() || (terms.size() == 1 && terms.begin()->first == 1);
  }
  GRat rational_part() const {
    auto it = terms.find(1);
    return it == terms.end() ? GRat() : it->second;
  }

  void add_term(const Int& m, const GRat& c) {
    auto it = terms.find(m);
    if (it == terms.end()) {
      if (!c.is_zero()) terms[m] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }

  Radical operator-() const {
    Radical r;
    for (auto& [m, c] : terms) r.terms[m] = -c;
    return r;
  }
  Radical& operator+=(const Radical& o) {
    for (auto& [m, c] : o.terms) add_term(m, c);
    return *this;
  }
  Radical& operator-=(const Radical& o) {
    for (auto& [m, c] : o.terms) add_term(m, -c);
    return *this;
  }
  friend Radical operator+(Radical a, const Radical& b) { return a += b; }
  friend Radical operator-(Radical a, const Radical& b) { return a -= b; }
  friend Radical operator*(const Radical& a, const Radical& b) {
    Radical r;
    for (auto& [ma, ca] : a.terms)
      for (auto& [mb, cb] : b.terms) {
        Radical t = root(ma * mb, ca * cb);
        r += t;
      }
    return r;
  }
  Radical& operator*=(const Radical& o) { return *this = *this * o; }

  friend bool operator==(const Radical& a, const Radical& b) { return a.terms == b.terms; }
  friend bool operator!=(const Radical& a, const Radical& b) { return !(a == b); }

  double to_double_re() const {
    double s = 0;
    for (auto& [m, c] : terms) s += to_double(c.re) * std::sqrt(m.convert_to<double>());
    return s;
  }
  double to_double_im() const {
    double s = 0;
    for (auto& [m, c] : terms) s += to_double(c.im) * std::sqrt(m.convert_to<double>());
    return s;
  }
};

}  // namespace quap

#endif
