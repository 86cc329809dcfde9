#include "nimgroup/laws.hpp"

#include <algorithm>
#include <map>

#include "nimgroup/lattice.hpp"

namespace nimgroup {

bool LawPrediction::admits(unsigned nim) const {
  return std::find(allowed.begin(), allowed.end(), nim) != allowed.end();
}

std::string to_string(const LawPrediction& law) {
  if (!law.applies()) return law.law;
  std::string out = law.law + " {";
  for (std::size_t i = 0; i < law.allowed.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(law.allowed[i]);
  }
  return out + "}";
}

namespace {

bool commutes_within(const FiniteGroup& g, const ElementSet& h) {
  const auto xs = h.elements();
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (g.op(xs[i], xs[j]) != g.op(xs[j], xs[i])) return false;
    }
  }
  return true;
}

std::map<std::size_t, unsigned> factorize(std::size_t n) {
  std::map<std::size_t, unsigned> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

std::optional<LawPrediction> abelian_maximal_law(const FiniteGroup& g, GameKind game,
                                                 const SubgroupFamily& maxes) {
  if (g.is_abelian()) return std::nullopt;
  for (const auto& m : maxes.members) {
    if (!commutes_within(g, m)) return std::nullopt;
  }
  const auto f = factorize(g.order());
  const bool dng = game == GameKind::DNG;
  if (f.size() == 1) {
    const auto [p, alpha] = *f.begin();
    if (p == 2) return LawPrediction{"abelian-maximal p^a", {0}};
    if (dng) return LawPrediction{"abelian-maximal p^a", {1}};
    if (alpha > 2) return LawPrediction{"abelian-maximal p^a", {1, 2}};
    return std::nullopt;
  }
  if (f.size() != 2) return std::nullopt;
  const auto [p, alpha] = *f.begin();
  if (p == 2 && alpha != 1) return LawPrediction{"abelian-maximal p^a q^b", {0}};
  if (p != 2) return LawPrediction{"abelian-maximal p^a q^b", dng ? std::vector<unsigned>{1} : std::vector<unsigned>{1, 2}};
  return LawPrediction{"abelian-maximal p^a q^b", {3}};
}

}  // namespace

LawPrediction predict_nim(const FiniteGroup& g, GameKind game, std::optional<std::size_t> frobenius_p) {
  const bool dng = game == GameKind::DNG;
  if (g.order() == 1) return {"trivial", {dng ? 0u : 1u}};
  const auto maxes = maximal_subgroups(g);
  if (auto law = abelian_maximal_law(g, game, maxes)) return *law;
  if (frobenius_p) {
    if (dng) return {"frobenius", {0}};
    return {"frobenius", {(*frobenius_p - 1) % 4 == 0 ? 0u : 1u}};
  }
  if (g.order() % 2 == 1) return dng ? LawPrediction{"odd-order", {1}} : LawPrediction{"odd-order", {1, 2}};
  if (dng) {
    ElementSet phi = g.whole();
    for (const auto& m : maxes.members) phi &= m;
    if (phi.size() % 2 == 0) return {"even-frattini", {0}};
  }
  return {};
}

}  // namespace nimgroup
