#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nimgroup/exec.hpp"
#include "nimgroup/group.hpp"
#include "nimgroup/lattice.hpp"

namespace nimgroup {

enum class GameKind { DNG, GEN };

const char* to_string(GameKind game);

/// (parity of |I|, nim-value of even positions, nim-value of odd positions).
struct TypeTriple {
  unsigned pty = 0;
  unsigned a = 0;
  unsigned b = 0;

  friend auto operator<=>(const TypeTriple&, const TypeTriple&) = default;
};

std::string to_string(const TypeTriple& t);

enum class NodeKind { Terminal, SemiTerminal, NonTerminal };

const char* to_string(NodeKind kind);

using NodeId = std::size_t;

struct StructureNode {
  NodeId id = 0;
  /// Member of the intersection family, or nullopt for the whole-group class of GEN.
  std::optional<MemberId> subject;
  std::size_t subject_order = 0;
  unsigned parity = 0;
  NodeKind kind = NodeKind::NonTerminal;
  std::vector<NodeId> options;
  TypeTriple type;
  std::set<TypeTriple> otype;
  std::set<TypeTriple> full_otype;
  /// Nodes of the original digraph merged into this one (simplified digraphs only).
  std::vector<NodeId> merged;

  bool is_whole_group() const noexcept { return !subject.has_value(); }
};

struct StructureDigraph {
  GameKind game = GameKind::DNG;
  std::size_t group_order = 0;
  std::vector<StructureNode> nodes;
  bool types_computed = false;

  std::size_t edge_count() const;
  /// Node holding the given member (node id == member id by construction).
  NodeId node_of(MemberId id) const { return id; }
  /// GEN only: the whole-group node, always the last one.
  std::optional<NodeId> whole_group_node() const;
};

/// One node per member of `fam` (ids coincide), plus the whole-group node for
/// GEN. Edges come from the subgroup itself as representative position.
StructureDigraph build_digraph(const FiniteGroup& g, const IntersectionFamily& fam, GameKind game,
                               Exec exec = Exec::Parallel);

/// Bottom-up mex recursion over decreasing subject order.
StructureDigraph compute_types(StructureDigraph d);

/// Nim-value of the game on g. DNG(Z1) = 0 and GEN(Z1) = 1.
unsigned game_nim_value(const FiniteGroup& g, GameKind game);

/// Result of running the whole structure pipeline on one group and game.
struct StructureAnalysis {
  IntersectionFamily family;
  StructureDigraph digraph;
  unsigned nim = 0;
};

/// Pipeline for |G| >= 2 (TrivialGroup otherwise).
StructureAnalysis analyze_structure(const FiniteGroup& g, GameKind game, Exec exec = Exec::Parallel);

/// Node whose class contains position p.
NodeId classify_position(const FiniteGroup& g, const IntersectionFamily& fam, const StructureDigraph& d,
                         const ElementSet& p);

/// Quotient by type equivalence (equal type and full option type).
StructureDigraph simplify_digraph(const StructureDigraph& d);

std::map<NodeKind, std::size_t> node_kind_census(const StructureDigraph& d);

unsigned mex(const std::set<unsigned>& values);

}  // namespace nimgroup
