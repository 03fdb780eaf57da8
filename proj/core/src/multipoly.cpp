#include "qinv/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace qinv {

Rational RatMat4::det() const {
  // cofactor expansion along row 0, exact
  auto minor3 = [&](int r0, int r1, int r2, int c0, int c1, int c2) {
    return at(r0, c0) * (at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)) -
           at(r0, c1) * (at(r1, c0) * at(r2, c2) - at(r1, c2) * at(r2, c0)) +
           at(r0, c2) * (at(r1, c0) * at(r2, c1) - at(r1, c1) * at(r2, c0));
  };
  return at(0, 0) * minor3(1, 2, 3, 1, 2, 3) - at(0, 1) * minor3(1, 2, 3, 0, 2, 3) +
         at(0, 2) * minor3(1, 2, 3, 0, 1, 3) - at(0, 3) * minor3(1, 2, 3, 0, 1, 2);
}

RatMat4 RatMat4::inverse() const {
  Rational d = det();
  if (d.is_zero()) throw std::invalid_argument("RatMat4: singular matrix");
  // adjugate / det
  RatMat4 inv;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      int rows[3], cols[3], ri = 0, ci = 0;
      for (int k = 0; k < 4; ++k) {
        if (k != r) rows[ri++] = k;
        if (k != c) cols[ci++] = k;
      }
      Rational m3 =
          at(rows[0], cols[0]) * (at(rows[1], cols[1]) * at(rows[2], cols[2]) -
                                  at(rows[1], cols[2]) * at(rows[2], cols[1])) -
          at(rows[0], cols[1]) * (at(rows[1], cols[0]) * at(rows[2], cols[2]) -
                                  at(rows[1], cols[2]) * at(rows[2], cols[0])) +
          at(rows[0], cols[2]) * (at(rows[1], cols[0]) * at(rows[2], cols[1]) -
                                  at(rows[1], cols[1]) * at(rows[2], cols[0]));
      Rational cof = ((r + c) % 2 == 0) ? m3 : -m3;
      inv.at(c, r) = cof / d;  // transpose of cofactor matrix
    }
  }
  return inv;
}

namespace {

// Sorts descending graded-lex, merges equal monomials, drops zeros.
void canonicalize(std::vector<Term>& ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return a.mono.key() > b.mono.key(); });
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    Monomial m = ts[i].mono;
    Rational c = std::move(ts[i].coeff);
    ++i;
    while (i < ts.size() && ts[i].mono == m) {
      c += ts[i].coeff;
      ++i;
    }
    if (!c.is_zero()) ts[out++] = Term{m, std::move(c)};
  }
  ts.resize(out);
}

}  // namespace

MultiPoly MultiPoly::constant(Rational c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial{}, std::move(c)});
  return p;
}

MultiPoly MultiPoly::variable(int i) {
  if (i < 0 || i >= kNumVars) throw std::out_of_range("MultiPoly: variable index");
  Monomial m;
  m.e[static_cast<std::size_t>(i)] = 1;
  return monomial(m, 1);
}

MultiPoly MultiPoly::monomial(Monomial m, Rational c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.push_back(Term{m, std::move(c)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<Term> terms) {
  canonicalize(terms);
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

Rational MultiPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m.key(),
      [](const Term& t, std::uint32_t k) { return t.mono.key() > k; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p;
  p.terms_.reserve(terms_.size());
  for (const Term& t : terms_) p.terms_.push_back(Term{t.mono, -t.coeff});
  return p;
}

namespace {

// Merge of two canonical term lists (descending keys).
std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    std::uint32_t ka = a[i].mono.key(), kb = b[j].mono.key();
    if (ka > kb) {
      out.push_back(a[i++]);
    } else if (kb > ka) {
      out.push_back(b[j++]);
    } else {
      Rational c = a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(b[j]);
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  terms_ = merge_add(terms_, o.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  *this += -o;
  return *this;
}

MultiPoly operator+(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly p = x;
  p += y;
  return p;
}

MultiPoly operator-(const MultiPoly& x, const MultiPoly& y) {
  MultiPoly p = x;
  p -= y;
  return p;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  std::vector<Term> prod;
  prod.reserve(x.terms_.size() * y.terms_.size());
  for (const Term& a : x.terms_)
    for (const Term& b : y.terms_)
      prod.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
  return MultiPoly::from_terms(std::move(prod));
}

MultiPoly operator*(const Rational& c, const MultiPoly& p) {
  if (c.is_zero()) return {};
  MultiPoly q;
  q.terms_.reserve(p.terms_.size());
  for (const Term& t : p.terms_) q.terms_.push_back(Term{t.mono, c * t.coeff});
  return q;
}

MultiPoly MultiPoly::pow(unsigned n) const {
  MultiPoly r = constant(1), base = *this;
  while (n != 0) {
    if (n & 1u) r = r * base;
    n >>= 1u;
    if (n != 0) base = base * base;
  }
  return r;
}

MultiPoly MultiPoly::diff(int var) const {
  if (var < 0 || var >= kNumVars) throw std::out_of_range("MultiPoly: variable index");
  auto v = static_cast<std::size_t>(var);
  MultiPoly p;
  p.terms_.reserve(terms_.size());
  // Lowering one fixed exponent preserves the descending graded-lex order.
  for (const Term& t : terms_) {
    if (t.mono.e[v] == 0) continue;
    Term d{t.mono, Rational(static_cast<long>(t.mono.e[v])) * t.coeff};
    d.mono.e[v] -= 1;
    p.terms_.push_back(std::move(d));
  }
  return p;
}

std::complex<double> MultiPoly::eval(const std::array<std::complex<double>, 4>& z) const {
  if (terms_.empty()) return {0.0, 0.0};
  std::array<std::uint8_t, 4> maxe{};
  for (const Term& t : terms_)
    for (int i = 0; i < 4; ++i) maxe[static_cast<std::size_t>(i)] = std::max(maxe[static_cast<std::size_t>(i)], t.mono.e[static_cast<std::size_t>(i)]);
  std::array<std::vector<std::complex<double>>, 4> pw;
  for (std::size_t i = 0; i < 4; ++i) {
    pw[i].resize(maxe[i] + 1u);
    pw[i][0] = {1.0, 0.0};
    for (std::size_t e = 1; e <= maxe[i]; ++e) pw[i][e] = pw[i][e - 1] * z[i];
  }
  std::complex<double> s{0.0, 0.0};
  for (const Term& t : terms_) {
    std::complex<double> m = pw[0][t.mono.e[0]] * pw[1][t.mono.e[1]] *
                             pw[2][t.mono.e[2]] * pw[3][t.mono.e[3]];
    s += t.coeff.to_double() * m;
  }
  return s;
}

Rational MultiPoly::eval_exact(const std::array<Rational, 4>& z) const {
  if (terms_.empty()) return 0;
  std::array<std::uint8_t, 4> maxe{};
  for (const Term& t : terms_)
    for (std::size_t i = 0; i < 4; ++i) maxe[i] = std::max(maxe[i], t.mono.e[i]);
  std::array<std::vector<Rational>, 4> pw;
  for (std::size_t i = 0; i < 4; ++i) {
    pw[i].resize(maxe[i] + 1u);
    pw[i][0] = 1;
    for (std::size_t e = 1; e <= maxe[i]; ++e) pw[i][e] = pw[i][e - 1] * z[i];
  }
  Rational s = 0;
  for (const Term& t : terms_)
    s += t.coeff * pw[0][t.mono.e[0]] * pw[1][t.mono.e[1]] * pw[2][t.mono.e[2]] *
         pw[3][t.mono.e[3]];
  return s;
}

// ---------------------------------------------------------------------------
// Linear substitution. Denominators of the polynomial and of the matrix are
// cleared up front so the Horner recursion below runs entirely over integers;
// each homogeneous component of degree k is rescaled by 1/(D * d^k) at the end.
// ---------------------------------------------------------------------------

namespace {

struct IntTerm {
  Monomial mono;
  mpz_class c;
};

void int_canonicalize(std::vector<IntTerm>& ts) {
  std::sort(ts.begin(), ts.end(), [](const IntTerm& a, const IntTerm& b) {
    return a.mono.key() > b.mono.key();
  });
  std::size_t out = 0;
  for (std::size_t i = 0; i < ts.size();) {
    Monomial m = ts[i].mono;
    mpz_class c = std::move(ts[i].c);
    ++i;
    while (i < ts.size() && ts[i].mono == m) {
      c += ts[i].c;
      ++i;
    }
    if (c != 0) ts[out++] = IntTerm{m, std::move(c)};
  }
  ts.resize(out);
}

std::vector<IntTerm> int_merge_add(std::vector<IntTerm> a, std::vector<IntTerm> b) {
  std::vector<IntTerm> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    std::uint32_t ka = a[i].mono.key(), kb = b[j].mono.key();
    if (ka > kb) {
      out.push_back(std::move(a[i++]));
    } else if (kb > ka) {
      out.push_back(std::move(b[j++]));
    } else {
      mpz_class c = a[i].c + b[j].c;
      if (c != 0) out.push_back(IntTerm{a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) out.push_back(std::move(b[j]));
  return out;
}

// terms * (sum_j row[j] * z_j)
std::vector<IntTerm> int_mul_linear(const std::vector<IntTerm>& ts,
                                    const std::array<mpz_class, 4>& row) {
  std::vector<IntTerm> out;
  out.reserve(ts.size() * 2);
  for (const IntTerm& t : ts) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (row[j] == 0) continue;
      IntTerm nt{t.mono, t.c * row[j]};
      if (nt.mono.e[j] == 255) throw std::overflow_error("Monomial: exponent overflow");
      nt.mono.e[j] += 1;
      out.push_back(std::move(nt));
    }
  }
  int_canonicalize(out);
  return out;
}

// Horner substitution over the variables var..3. Exponents of variables
// below `var` are zero in every input term; accumulated results are
// polynomials in the substituted (output) coordinates.
std::vector<IntTerm> subst_rec(std::vector<IntTerm> ts, std::size_t var,
                               const std::array<std::array<mpz_class, 4>, 4>& n) {
  if (ts.empty()) return {};
  if (var == 4) return ts;  // constants only
  int maxe = 0;
  for (const IntTerm& t : ts) maxe = std::max(maxe, static_cast<int>(t.mono.e[var]));
  std::vector<std::vector<IntTerm>> buckets(static_cast<std::size_t>(maxe) + 1);
  for (IntTerm& t : ts) {
    std::size_t e = t.mono.e[var];
    t.mono.e[var] = 0;
    buckets[e].push_back(std::move(t));
  }
  std::vector<IntTerm> acc;
  for (int e = maxe; e >= 0; --e) {
    if (e < maxe) acc = int_mul_linear(acc, n[var]);
    auto& bucket = buckets[static_cast<std::size_t>(e)];
    if (!bucket.empty())
      acc = int_merge_add(std::move(acc), subst_rec(std::move(bucket), var + 1, n));
  }
  return acc;
}

}  // namespace

MultiPoly MultiPoly::subst_linear(const RatMat4& m) const {
  if (terms_.empty()) return {};

  // Clear coefficient denominators: P = D * p over integers.
  mpz_class cden = 1;
  for (const Term& t : terms_) mpz_lcm(cden.get_mpz_t(), cden.get_mpz_t(), t.coeff.den().get_mpz_t());

  // Clear matrix denominators: N = d * M over integers.
  mpz_class mden = 1;
  for (const Rational& x : m.a) mpz_lcm(mden.get_mpz_t(), mden.get_mpz_t(), x.den().get_mpz_t());
  std::array<std::array<mpz_class, 4>, 4> n;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const Rational& x = m.at(r, c);
      n[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          x.num() * (mden / x.den());
    }

  // Substitute each homogeneous component separately so the d^degree
  // scale factor is uniform within it.
  int maxdeg = degree();
  std::vector<std::vector<IntTerm>> parts(static_cast<std::size_t>(maxdeg) + 1);
  for (const Term& t : terms_) {
    mpz_class c = t.coeff.num() * (cden / t.coeff.den());
    parts[static_cast<std::size_t>(t.mono.degree())].push_back(IntTerm{t.mono, std::move(c)});
  }

  std::vector<Term> out;
  for (int k = 0; k <= maxdeg; ++k) {
    auto& part = parts[static_cast<std::size_t>(k)];
    if (part.empty()) continue;
    std::vector<IntTerm> sub = subst_rec(std::move(part), 0, n);
    mpz_class scale = cden;
    for (int i = 0; i < k; ++i) scale *= mden;
    out.reserve(out.size() + sub.size());
    for (IntTerm& t : sub) out.push_back(Term{t.mono, Rational(std::move(t.c), scale)});
  }
  return from_terms(std::move(out));
}

}  // namespace qinv
