#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "qinv/rational.hpp"

namespace qinv {

inline constexpr int kNumVars = 4;

/// Exponent vector of a monomial in z0..z3, ordered graded-lex
/// (total degree first, then lexicographic in e0,e1,e2).
struct Monomial {
  std::array<std::uint8_t, kNumVars> e{};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }

  /// Packed comparison key; larger key = larger monomial in graded-lex.
  /// e3 is determined by (degree, e0, e1, e2) so it need not be packed.
  std::uint32_t key() const {
    return (static_cast<std::uint32_t>(degree()) << 24) |
           (static_cast<std::uint32_t>(e[0]) << 16) |
           (static_cast<std::uint32_t>(e[1]) << 8) |
           static_cast<std::uint32_t>(e[2]);
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kNumVars; ++i) {
      int s = a.e[i] + b.e[i];
      if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
      m.e[i] = static_cast<std::uint8_t>(s);
    }
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.key() < b.key(); }
};

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// Exact 4x4 rational matrix (row-major).
struct RatMat4 {
  std::array<Rational, 16> a{};

  static RatMat4 identity() {
    RatMat4 m;
    for (int i = 0; i < 4; ++i) m.at(i, i) = 1;
    return m;
  }

  Rational& at(int r, int c) { return a[static_cast<std::size_t>(r) * 4 + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<std::size_t>(r) * 4 + c]; }

  friend RatMat4 operator*(const RatMat4& x, const RatMat4& y) {
    RatMat4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        Rational s = 0;
        for (int k = 0; k < 4; ++k) s += x.at(i, k) * y.at(k, j);
        m.at(i, j) = s;
      }
    return m;
  }

  friend bool operator==(const RatMat4& x, const RatMat4& y) { return x.a == y.a; }

  Rational det() const;
  RatMat4 inverse() const;  // throws std::invalid_argument when singular
  RatMat4 transpose() const {
    RatMat4 m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m.at(i, j) = at(j, i);
    return m;
  }
};

/// Sparse multivariate polynomial in z0..z3 with exact rational coefficients.
///
/// Canonical form: terms sorted by descending graded-lex order with no zero
/// coefficients stored, so structural equality is mathematical equality.
/// Immutable in practice: every operation returns a new polynomial.
class MultiPoly {
 public:
  MultiPoly() = default;  // zero polynomial

  static MultiPoly constant(Rational c);
  static MultiPoly variable(int i);  // z_i, 0 <= i < 4
  static MultiPoly monomial(Monomial m, Rational c);
  /// Builds the canonical form from an arbitrary term list (merges duplicate
  /// monomials, drops zeros, sorts).
  static MultiPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Coefficient of a monomial (zero if absent).
  Rational coeff(const Monomial& m) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator-(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
  friend MultiPoly operator*(const Rational& c, const MultiPoly& p);

  MultiPoly pow(unsigned n) const;

  /// Exact partial derivative with respect to z_var.
  MultiPoly diff(int var) const;

  /// Exact composition with a linear map: returns z -> p(M z).
  MultiPoly subst_linear(const RatMat4& m) const;

  /// Floating evaluation by direct monomial summation over precomputed
  /// power tables. Relative error <= 1e-12 for |z_i| <= 10.
  std::complex<double> eval(const std::array<std::complex<double>, 4>& z) const;

  /// Exact evaluation at a rational point.
  Rational eval_exact(const std::array<Rational, 4>& z) const;

  friend bool operator==(const MultiPoly& x, const MultiPoly& y) {
    return x.terms_ == y.terms_;
  }

 private:
  std::vector<Term> terms_;
};

}  // namespace qinv
