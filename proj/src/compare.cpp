#include "nimgroup/compare.hpp"

#include <algorithm>

#include "nimgroup/error.hpp"

namespace nimgroup {

bool MethodComparison::agree() const {
  if (!oracle_nim || *oracle_nim != structure_nim || !parity_ok) return false;
  return std::all_of(classes.begin(), classes.end(), [](const ClassComparison& c) { return c.ok; });
}

MethodComparison compare_methods(const FiniteGroup& g, GameKind game, const OracleConfig& cfg, Exec exec) {
  MethodComparison out;
  out.game = game;
  std::optional<StructureAnalysis> sa;
  if (g.order() == 1) {
    out.structure_nim = game_nim_value(g, game);
  } else {
    sa = analyze_structure(g, game, exec);
    out.structure_nim = sa->nim;
  }

  std::optional<Oracle> oracle;
  try {
    oracle.emplace(g, game, cfg);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::StateCapExceeded) throw;
    out.note = e.what();
  }

  if (sa) {
    for (const auto& node : sa->digraph.nodes) {
      if (node.is_whole_group()) continue;
      out.classes.push_back({*node.subject, node.subject_order, node.type, std::nullopt, std::nullopt, true});
    }
  }
  if (!oracle) return out;

  out.oracle_nim = oracle->nim();
  if (sa) {
    const ParityReport parity = oracle->verify_parity_invariant(sa->family);
    out.parity_ok = parity.ok;
    for (auto& c : out.classes) {
      if (auto it = parity.buckets.find({c.id, 0}); it != parity.buckets.end()) c.oracle_even = it->second;
      if (auto it = parity.buckets.find({c.id, 1}); it != parity.buckets.end()) c.oracle_odd = it->second;
      c.ok = (!c.oracle_even || *c.oracle_even == c.type.a) && (!c.oracle_odd || *c.oracle_odd == c.type.b);
    }
  }
  out.states_explored = oracle->states_explored();
  return out;
}

}  // namespace nimgroup
