#pragma once

// Slow, obviously-correct reference computations for the tests. They use
// nothing from the library except the multiplication table of a group.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nimgroup/group.hpp"

namespace ref {

using Set = std::vector<bool>;

inline Set to_set(const nimgroup::ElementSet& s) {
  Set out(s.capacity(), false);
  s.for_each([&](nimgroup::Element x) { out[x] = true; });
  return out;
}

inline std::size_t count(const Set& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), true)); }

inline bool subset(const Set& a, const Set& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

/// Closure of s ∪ {e} under the operation, by repeated all-pairs products.
inline Set closure(const nimgroup::FiniteGroup& g, Set s) {
  const std::size_t n = g.order();
  s[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (!s[a]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (s[b] && !s[g.op(a, b)]) {
          s[g.op(a, b)] = true;
          grew = true;
        }
      }
    }
  }
  return s;
}

/// Every subgroup, by closing every subset of size <= 3 and every pair of
/// found subgroups until stable. Only meant for tiny groups.
inline std::set<Set> subgroups(const nimgroup::FiniteGroup& g) {
  const std::size_t n = g.order();
  std::set<Set> out;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      Set s(n, false);
      s[a] = s[b] = true;
      out.insert(closure(g, s));
    }
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Set> cur(out.begin(), out.end());
    for (const auto& x : cur) {
      for (const auto& y : cur) {
        Set u = x;
        for (std::size_t i = 0; i < n; ++i) u[i] = u[i] || y[i];
        if (out.insert(closure(g, u)).second) grew = true;
      }
    }
  }
  return out;
}

/// Proper subgroups not contained in a larger proper subgroup.
inline std::vector<Set> maximal(const nimgroup::FiniteGroup& g) {
  const auto all = subgroups(g);
  std::vector<Set> out;
  for (const auto& h : all) {
    if (count(h) == g.order()) continue;
    bool is_max = true;
    for (const auto& k : all) {
      if (k != h && count(k) < g.order() && subset(h, k)) is_max = false;
    }
    if (is_max) out.push_back(h);
  }
  return out;
}

/// All intersections of nonempty subfamilies of the maximal subgroups,
/// by sweeping every subfamily bitmask.
inline std::set<Set> intersection_sweep(const nimgroup::FiniteGroup& g) {
  const auto maxes = maximal(g);
  std::set<Set> out;
  const std::uint64_t total = std::uint64_t{1} << maxes.size();
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    Set cut(g.order(), true);
    for (std::size_t i = 0; i < maxes.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t e = 0; e < g.order(); ++e) cut[e] = cut[e] && maxes[i][e];
    }
    out.insert(cut);
  }
  return out;
}

/// Plain memoised game recursion straight from the rules.
class Game {
 public:
  Game(const nimgroup::FiniteGroup& g, bool gen) : g_(g), gen_(gen) {}

  unsigned value(const Set& p) {
    if (auto it = memo_.find(p); it != memo_.end()) return it->second;
    const std::size_t n = g_.order();
    if (gen_ && count(p) > 0 && count(closure(g_, p)) == n) return memo_[p] = 0;
    std::set<unsigned> seen;
    for (std::size_t x = 0; x < n; ++x) {
      if (p[x]) continue;
      Set q = p;
      q[x] = true;
      if (!gen_ && count(closure(g_, q)) == n) continue;
      seen.insert(value(q));
    }
    unsigned m = 0;
    while (seen.count(m)) ++m;
    return memo_[p] = m;
  }

  unsigned start() { return value(Set(g_.order(), false)); }
  const std::map<Set, unsigned>& memo() const { return memo_; }

 private:
  const nimgroup::FiniteGroup& g_;
  bool gen_;
  std::map<Set, unsigned> memo_;
};

inline nimgroup::ElementSet random_subset(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution pick(density);
  nimgroup::ElementSet s(n);
  for (nimgroup::Element x = 0; x < n; ++x) {
    if (pick(rng)) s.insert(x);
  }
  return s;
}

}  // namespace ref
