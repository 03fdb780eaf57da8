#include "qinv/invariants.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qinv::invariants {

namespace {

MultiPoly zvar(int i) { return MultiPoly::variable(i); }

MultiPoly build_E(int j) {
  if (j == 0) return zvar(0) * zvar(1) * zvar(2) * zvar(3);
  MultiPoly s;
  for (int i = 0; i < 4; ++i) s += zvar(i).pow(static_cast<unsigned>(2 * j));
  return s;
}

MultiPoly build_F(int k) {
  MultiPoly s;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      s += (zvar(i) - zvar(j)).pow(static_cast<unsigned>(2 * k));
      s += (zvar(i) + zvar(j)).pow(static_cast<unsigned>(2 * k));
    }
  return Rational(1, 6) * s;
}

MultiPoly build_delta() {
  MultiPoly p = MultiPoly::constant(1);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) p = p * (zvar(i) - zvar(j)) * (zvar(i) + zvar(j));
  return p;
}

}  // namespace

const MultiPoly& E(int j) {
  if (j < 0 || j > 4) throw std::out_of_range("E: j must be in 0..4");
  static const std::vector<MultiPoly> table = [] {
    std::vector<MultiPoly> t;
    for (int i = 0; i <= 4; ++i) t.push_back(build_E(i));
    return t;
  }();
  return table[static_cast<std::size_t>(j)];
}

const MultiPoly& F(int k) {
  if (k < 1 || k > 12) throw std::out_of_range("F: k must be in 1..12");
  static const std::vector<MultiPoly> table = [] {
    std::vector<MultiPoly> t;
    for (int i = 1; i <= 12; ++i) t.push_back(build_F(i));
    return t;
  }();
  return table[static_cast<std::size_t>(k - 1)];
}

const MultiPoly& delta() {
  static const MultiPoly d = build_delta();
  return d;
}

const MultiPoly& gamma() {
  static const MultiPoly g = delta() * delta();
  return g;
}

const MultiPoly& gamma_dz(int i) {
  if (i < 0 || i >= 4) throw std::out_of_range("gamma_dz: index");
  static const std::array<MultiPoly, 4> table = {gamma().diff(0), gamma().diff(1),
                                                 gamma().diff(2), gamma().diff(3)};
  return table[static_cast<std::size_t>(i)];
}

MultiPoly gamma_via_newton() {
  std::vector<MultiPoly> e, p;
  e.push_back(MultiPoly::constant(1));
  p.push_back(MultiPoly());  // p_0 unused
  for (int m = 1; m <= 12; ++m) p.push_back(Rational(6) * F(m));
  for (int k = 1; k <= 12; ++k) {
    MultiPoly acc;
    for (int m = 1; m <= k; ++m) {
      MultiPoly term = e[static_cast<std::size_t>(k - m)] * p[static_cast<std::size_t>(m)];
      acc += (m % 2 == 1) ? term : -term;
    }
    e.push_back(Rational(1, k) * acc);
  }
  return e[12];
}

const MultiPoly& jacobian_F() {
  static const MultiPoly jac = [] {
    const int ks[4] = {1, 3, 4, 6};
    MultiPoly m[4][4];
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m[r][c] = F(ks[r]).diff(c);
    // 4x4 determinant by expansion over permutations of a 3x3 block
    auto det3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
      return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
             m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
             m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
    };
    return m[0][0] * det3(1, 2, 3, 1, 2, 3) - m[0][1] * det3(1, 2, 3, 0, 2, 3) +
           m[0][2] * det3(1, 2, 3, 0, 1, 3) - m[0][3] * det3(1, 2, 3, 0, 1, 2);
  }();
  return jac;
}

InvariantReport eval_invariants(const ACoords& z) {
  for (const auto& c : z)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("eval_invariants: non-finite input");
  InvariantReport r;
  r.E0 = E(0).eval(z);
  r.E1 = E(1).eval(z);
  r.E2 = E(2).eval(z);
  r.E3 = E(3).eval(z);
  r.F1 = F(1).eval(z);
  r.F3 = F(3).eval(z);
  r.F4 = F(4).eval(z);
  r.F6 = F(6).eval(z);
  r.delta = delta().eval(z);
  r.gamma = gamma().eval(z);
  return r;
}

ACoords state_L() {
  const double s3 = std::sqrt(3.0);
  const std::complex<double> w{0.5, 0.5 * s3};  // exp(i pi/3)
  return {std::complex<double>{1.0 / s3, 0.0}, w / s3, std::conj(w) / s3,
          std::complex<double>{0.0, 0.0}};
}

ACoords state_F() {
  const double s3 = std::sqrt(3.0);
  return {std::complex<double>{3.0 - s3, 0.0}, std::complex<double>{s3, s3},
          std::complex<double>{s3, -s3}, std::complex<double>{0.0, -(3.0 - s3)}};
}

}  // namespace qinv::invariants
