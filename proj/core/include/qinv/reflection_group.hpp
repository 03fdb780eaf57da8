#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qinv/multipoly.hpp"

namespace qinv::reflection {

/// An exact invertible rational matrix acting on A. All elements arising
/// here have determinant +1 or -1; exact entries make equality decidable.
struct GroupElement {
  RatMat4 mat;

  static GroupElement identity() { return {RatMat4::identity()}; }
  Rational det() const { return mat.det(); }
  GroupElement inverse() const { return {mat.inverse()}; }

  /// Canonical entry string ("a/b,..."), used for exact de-duplication.
  std::string key() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return {a.mat * b.mat};
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) {
    return a.mat == b.mat;
  }
};

/// A finite set of group elements closed under multiplication and inverse,
/// in BFS discovery order (identity first). Immutable after construction.
struct GroupSet {
  std::vector<GroupElement> elements;
  std::vector<GroupElement> generators;

  std::size_t order() const { return elements.size(); }
  bool contains(const GroupElement& g) const;
};

/// Thrown when generate_closure does not terminate within its cap.
class ClosureCapExceeded : public std::runtime_error {
 public:
  explicit ClosureCapExceeded(std::size_t cap)
      : std::runtime_error("group closure not closed within cap " + std::to_string(cap)) {}
};

/// The reflection about the hyperplane orthogonal to lambda:
///   s_lambda a = a - (2 <lambda|a> / <lambda|lambda>) lambda.
/// Involutive with determinant -1. Throws on lambda = 0.
GroupElement reflection(const std::array<Rational, 4>& lambda);

/// Restriction to A of the qubit transposition (i, i+1), i in 1..3,
/// as a matrix in the u-basis. sigma_1|A = sigma_3|A = diag(1,1,1,-1);
/// sigma_2|A is the reflection s_alpha with alpha = (u0-u1-u2-u3)/2.
GroupElement sigma_restriction(int i);

/// nu = s_{u3} = diag(1,1,1,-1).
GroupElement nu();

/// tau = s_alpha = sigma_2|A.
GroupElement tau();

/// Reflections in u0-u1, u1-u2, u2-u3, u2+u3: generators of W.
std::vector<GroupElement> w_generators();

/// Breadth-first closure under multiplication with exact de-duplication.
/// Returns the full finite group when its order is <= cap; otherwise
/// throws ClosureCapExceeded.
GroupSet generate_closure(std::vector<GroupElement> gens, std::size_t cap = 10000);

/// Cached closures: W (order 192), W with nu adjoined (order 384), and the
/// full reflection group generated by W, nu, tau (order 1152; its quotient
/// by {+I, -I} has order 576).
const GroupSet& group_W();
const GroupSet& group_W_nu();
const GroupSet& group_W_tilde();

/// True iff p o M = p exactly for every element M of g.
bool is_invariant(const MultiPoly& p, const GroupSet& g);

/// True iff delta o M = det(M) * delta exactly for every element of g.
bool check_delta_equivariance(const GroupSet& g);

}  // namespace qinv::reflection
