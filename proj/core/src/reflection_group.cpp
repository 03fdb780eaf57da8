#include "qinv/reflection_group.hpp"

#include <atomic>
#include <deque>
#include <unordered_set>

#include "qinv/invariants.hpp"
#include "qinv/parallel.hpp"

namespace qinv::reflection {

std::string GroupElement::key() const {
  std::string k;
  k.reserve(64);
  for (const Rational& x : mat.a) {
    k += x.str();
    k += ',';
  }
  return k;
}

bool GroupSet::contains(const GroupElement& g) const {
  for (const GroupElement& e : elements)
    if (e == g) return true;
  return false;
}

GroupElement reflection(const std::array<Rational, 4>& lambda) {
  Rational n2 = 0;
  for (const Rational& x : lambda) n2 += x * x;
  if (n2.is_zero()) throw std::invalid_argument("reflection: zero vector");
  RatMat4 m = RatMat4::identity();
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      m.at(r, c) -= Rational(2) * lambda[static_cast<std::size_t>(r)] *
                    lambda[static_cast<std::size_t>(c)] / n2;
  return {m};
}

GroupElement sigma_restriction(int i) {
  if (i < 1 || i > 3) throw std::out_of_range("sigma_restriction: i must be 1..3");
  if (i == 1 || i == 3) return nu();
  return tau();
}

GroupElement nu() { return reflection({0, 0, 0, 1}); }

GroupElement tau() {
  return reflection({Rational(1, 2), Rational(-1, 2), Rational(-1, 2), Rational(-1, 2)});
}

std::vector<GroupElement> w_generators() {
  return {reflection({1, -1, 0, 0}), reflection({0, 1, -1, 0}),
          reflection({0, 0, 1, -1}), reflection({0, 0, 1, 1})};
}

GroupSet generate_closure(std::vector<GroupElement> gens, std::size_t cap) {
  GroupSet gs;
  gs.generators = std::move(gens);
  std::unordered_set<std::string> seen;
  std::deque<std::size_t> frontier;

  GroupElement id = GroupElement::identity();
  seen.insert(id.key());
  gs.elements.push_back(id);
  frontier.push_back(0);

  while (!frontier.empty()) {
    std::size_t idx = frontier.front();
    frontier.pop_front();
    for (const GroupElement& g : gs.generators) {
      GroupElement p = gs.elements[idx] * g;
      if (seen.insert(p.key()).second) {
        if (gs.elements.size() >= cap) throw ClosureCapExceeded(cap);
        gs.elements.push_back(p);
        frontier.push_back(gs.elements.size() - 1);
      }
    }
  }
  return gs;
}

const GroupSet& group_W() {
  static const GroupSet g = generate_closure(w_generators());
  return g;
}

const GroupSet& group_W_nu() {
  static const GroupSet g = [] {
    auto gens = w_generators();
    gens.push_back(nu());
    return generate_closure(gens);
  }();
  return g;
}

const GroupSet& group_W_tilde() {
  static const GroupSet g = [] {
    auto gens = w_generators();
    gens.push_back(nu());
    gens.push_back(tau());
    return generate_closure(gens);
  }();
  return g;
}

bool is_invariant(const MultiPoly& p, const GroupSet& g) {
  std::atomic<bool> ok{true};
  detail::parallel_for(g.elements.size(), [&](std::size_t i) {
    if (!ok.load(std::memory_order_relaxed)) return;
    if (!(p.subst_linear(g.elements[i].mat) == p))
      ok.store(false, std::memory_order_relaxed);
  });
  return ok.load();
}

bool check_delta_equivariance(const GroupSet& g) {
  const MultiPoly& d = invariants::delta();
  std::atomic<bool> ok{true};
  detail::parallel_for(g.elements.size(), [&](std::size_t i) {
    if (!ok.load(std::memory_order_relaxed)) return;
    const GroupElement& s = g.elements[i];
    if (!(d.subst_linear(s.mat) == s.det() * d))
      ok.store(false, std::memory_order_relaxed);
  });
  return ok.load();
}

}  // namespace qinv::reflection
