#include "nimgroup/structure.hpp"

#include <algorithm>
#include <numeric>

#include "nimgroup/error.hpp"
#include "nimgroup/kernels.hpp"

namespace nimgroup {

const char* to_string(GameKind game) { return game == GameKind::DNG ? "DNG" : "GEN"; }

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Terminal: return "Terminal";
    case NodeKind::SemiTerminal: return "SemiTerminal";
    case NodeKind::NonTerminal: return "NonTerminal";
  }
  return "?";
}

std::string to_string(const TypeTriple& t) {
  return "(" + std::to_string(t.pty) + "," + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
}

unsigned mex(const std::set<unsigned>& values) {
  unsigned m = 0;
  for (unsigned v : values) {
    if (v != m) break;
    ++m;
  }
  return m;
}

std::size_t StructureDigraph::edge_count() const {
  std::size_t e = 0;
  for (const auto& node : nodes) e += node.options.size();
  return e;
}

std::optional<NodeId> StructureDigraph::whole_group_node() const {
  if (game != GameKind::GEN || nodes.empty() || !nodes.back().is_whole_group()) return std::nullopt;
  return nodes.back().id;
}

namespace {

void assign_kinds(StructureDigraph& d) {
  const auto whole = d.whole_group_node();
  for (auto& node : d.nodes) {
    if (node.is_whole_group() || (d.game == GameKind::DNG && node.options.empty())) {
      node.kind = NodeKind::Terminal;
    } else if (whole && std::binary_search(node.options.begin(), node.options.end(), *whole)) {
      node.kind = NodeKind::SemiTerminal;
    } else {
      node.kind = NodeKind::NonTerminal;
    }
  }
}

}  // namespace

StructureDigraph build_digraph(const FiniteGroup& g, const IntersectionFamily& fam, GameKind game,
                               Exec exec) {
  if (g.order() <= 1) throw Error(ErrorCode::TrivialGroup, "no structure digraph for the trivial group");
  StructureDigraph d;
  d.game = game;
  d.group_order = g.order();
  const std::size_t m = fam.size();
  const NodeId whole_id = m;
  for (MemberId id = 0; id < m; ++id) {
    StructureNode node;
    node.id = id;
    node.subject = id;
    node.subject_order = fam.member(id).size();
    node.parity = static_cast<unsigned>(node.subject_order % 2);
    d.nodes.push_back(std::move(node));
  }
  if (game == GameKind::GEN) {
    StructureNode node;
    node.id = whole_id;
    node.subject_order = g.order();
    node.parity = static_cast<unsigned>(g.order() % 2);
    d.nodes.push_back(std::move(node));
  }

  const auto& members = fam.family.members;
  const auto extensions = exec == Exec::Parallel ? kernels::one_step_extensions(g, members)
                                                 : kernels::one_step_extensions_serial(g, members);
  for (MemberId id = 0; id < m; ++id) {
    std::vector<NodeId>& opts = d.nodes[id].options;
    for (const ElementSet& t : extensions[id]) {
      if (t.size() == g.order()) {
        if (game == GameKind::GEN) opts.push_back(whole_id);
        continue;
      }
      const auto env = minimal_envelope(fam, t);
      if (!env) throw Error(ErrorCode::IllegalPosition, "proper subgroup without envelope: " + t.to_string());
      opts.push_back(d.node_of(*env));
    }
    std::sort(opts.begin(), opts.end());
    opts.erase(std::unique(opts.begin(), opts.end()), opts.end());
  }
  assign_kinds(d);
  return d;
}

StructureDigraph compute_types(StructureDigraph d) {
  std::vector<NodeId> order(d.nodes.size());
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId x, NodeId y) {
    return d.nodes[x].subject_order > d.nodes[y].subject_order;
  });
  std::vector<bool> done(d.nodes.size(), false);
  for (NodeId id : order) {
    StructureNode& node = d.nodes[id];
    node.otype.clear();
    if (node.is_whole_group()) {
      node.type = TypeTriple{node.parity, 0, 0};
    } else {
      std::set<unsigned> as, bs;
      for (NodeId o : node.options) {
        if (!done[o]) throw std::logic_error("structure digraph is not ordered by subject size");
        const TypeTriple& t = d.nodes[o].type;
        node.otype.insert(t);
        as.insert(t.a);
        bs.insert(t.b);
      }
      unsigned a = 0, b = 0;
      if (node.parity == 0) {
        a = mex(bs);
        as.insert(a);
        b = mex(as);
      } else {
        b = mex(as);
        bs.insert(b);
        a = mex(bs);
      }
      node.type = TypeTriple{node.parity, a, b};
    }
    node.full_otype = node.otype;
    node.full_otype.insert(node.type);
    done[id] = true;
  }
  d.types_computed = true;
  return d;
}

StructureAnalysis analyze_structure(const FiniteGroup& g, GameKind game, Exec exec) {
  if (g.order() <= 1) throw Error(ErrorCode::TrivialGroup, "no structure digraph for the trivial group");
  StructureAnalysis out;
  out.family = intersection_family(g, exec);
  out.digraph = compute_types(build_digraph(g, out.family, game, exec));
  out.nim = out.digraph.nodes[out.digraph.node_of(out.family.frattini_id)].type.a;
  return out;
}

unsigned game_nim_value(const FiniteGroup& g, GameKind game) {
  if (g.order() == 1) return game == GameKind::DNG ? 0 : 1;
  return analyze_structure(g, game).nim;
}

NodeId classify_position(const FiniteGroup& g, const IntersectionFamily& fam, const StructureDigraph& d,
                         const ElementSet& p) {
  if (p.capacity() != g.order()) throw Error(ErrorCode::IllegalPosition, "position from another group");
  const auto env = minimal_envelope(fam, p);
  if (env) return d.node_of(*env);
  if (const auto whole = d.whole_group_node()) return *whole;
  throw Error(ErrorCode::IllegalPosition, p.to_string() + " generates the group, not a DNG position");
}

StructureDigraph simplify_digraph(const StructureDigraph& d) {
  if (!d.types_computed) throw std::logic_error("simplify_digraph needs computed types");
  std::map<std::pair<TypeTriple, std::set<TypeTriple>>, NodeId> classes;
  std::vector<NodeId> class_of(d.nodes.size());
  StructureDigraph out;
  out.game = d.game;
  out.group_order = d.group_order;
  out.types_computed = true;
  for (const auto& node : d.nodes) {
    const auto key = std::make_pair(node.type, node.full_otype);
    auto [it, inserted] = classes.emplace(key, out.nodes.size());
    if (inserted) {
      StructureNode q = node;
      q.id = out.nodes.size();
      q.options.clear();
      q.merged.clear();
      out.nodes.push_back(std::move(q));
    }
    class_of[node.id] = it->second;
    out.nodes[it->second].merged.push_back(node.id);
  }
  for (const auto& node : d.nodes) {
    auto& opts = out.nodes[class_of[node.id]].options;
    for (NodeId o : node.options) {
      if (class_of[o] != class_of[node.id]) opts.push_back(class_of[o]);
    }
  }
  for (auto& q : out.nodes) {
    std::sort(q.options.begin(), q.options.end());
    q.options.erase(std::unique(q.options.begin(), q.options.end()), q.options.end());
  }
  // The whole-group node is last in d and has a unique type (no other node
  // has a == b), so it is also last in the quotient.
  assign_kinds(out);
  return out;
}

std::map<NodeKind, std::size_t> node_kind_census(const StructureDigraph& d) {
  if (d.game != GameKind::GEN) throw Error(ErrorCode::WrongGame, "node kinds are defined for GEN only");
  std::map<NodeKind, std::size_t> census{
      {NodeKind::Terminal, 0}, {NodeKind::SemiTerminal, 0}, {NodeKind::NonTerminal, 0}};
  for (const auto& node : d.nodes) ++census[node.kind];
  return census;
}

}  // namespace nimgroup
