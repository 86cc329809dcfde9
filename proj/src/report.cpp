#include "nimgroup/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "nimgroup/error.hpp"
#include "nimgroup/lattice.hpp"

namespace nimgroup {

using ojson = nlohmann::ordered_json;

GroupSummary summarize_group(const FiniteGroup& g, Exec exec) {
  GroupSummary s;
  s.name = g.name();
  s.order = g.order();
  if (g.order() == 1) {
    s.frattini_order = 1;
    return s;
  }
  const auto maxes = maximal_subgroups(g, exec);
  ElementSet phi = g.whole();
  for (const auto& m : maxes.members) {
    phi &= m;
    s.maximal_subgroup_orders.push_back(m.size());
  }
  std::sort(s.maximal_subgroup_orders.begin(), s.maximal_subgroup_orders.end());
  s.frattini_order = phi.size();
  return s;
}

std::vector<NodeRecord> node_records(const StructureDigraph& d) {
  std::vector<NodeRecord> out;
  out.reserve(d.nodes.size());
  for (const auto& node : d.nodes) {
    NodeRecord r;
    r.id = node.id;
    r.subgroup_order = node.subject_order;
    r.parity = node.parity;
    r.kind = to_string(node.kind);
    r.type = {node.type.pty, node.type.a, node.type.b};
    r.options.assign(node.options.begin(), node.options.end());
    out.push_back(std::move(r));
  }
  return out;
}

Analysis analyze(const FiniteGroup& g, GameKind game, Exec exec) {
  Analysis out;
  out.report.group = summarize_group(g, exec);
  out.report.game = game;
  if (g.order() == 1) {
    out.report.trivial_group = true;
    out.report.nim = game_nim_value(g, game);
    return out;
  }
  out.structure = analyze_structure(g, game, exec);
  out.simplified = simplify_digraph(out.structure->digraph);
  out.report.nim = out.structure->nim;
  out.report.nodes = node_records(out.structure->digraph);
  out.report.simplified_nodes = node_records(*out.simplified);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

ojson nodes_to_json(const std::vector<NodeRecord>& nodes) {
  ojson arr = ojson::array();
  for (const auto& n : nodes) {
    ojson j;
    j["id"] = n.id;
    j["subgroup_order"] = n.subgroup_order;
    j["parity"] = n.parity;
    j["kind"] = n.kind;
    j["type"] = n.type;
    j["options"] = n.options;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::vector<NodeRecord> nodes_from_json(const ojson& arr) {
  std::vector<NodeRecord> out;
  for (const auto& j : arr) {
    NodeRecord n;
    n.id = j.at("id").get<std::size_t>();
    n.subgroup_order = j.at("subgroup_order").get<std::size_t>();
    n.parity = j.at("parity").get<unsigned>();
    n.kind = j.at("kind").get<std::string>();
    n.type = j.at("type").get<std::array<unsigned, 3>>();
    n.options = j.at("options").get<std::vector<std::size_t>>();
    out.push_back(std::move(n));
  }
  return out;
}

}  // namespace

std::string export_json(const AnalysisReport& r) {
  ojson j;
  j["group"]["name"] = r.group.name;
  j["group"]["order"] = r.group.order;
  j["group"]["frattini_order"] = r.group.frattini_order;
  j["group"]["maximal_subgroup_orders"] = r.group.maximal_subgroup_orders;
  j["game"] = to_string(r.game);
  j["nim"] = r.nim;
  j["trivial_group"] = r.trivial_group;
  j["nodes"] = nodes_to_json(r.nodes);
  j["simplified_nodes"] = nodes_to_json(r.simplified_nodes);
  if (r.oracle) {
    j["oracle"]["nim"] = r.oracle->nim;
    j["oracle"]["agreed"] = r.oracle->agreed;
    j["oracle"]["states_explored"] = r.oracle->states_explored;
  } else {
    j["oracle"] = nullptr;
  }
  return j.dump(2) + "\n";
}

AnalysisReport parse_report_json(std::string_view text) {
  try {
    const ojson j = ojson::parse(text);
    AnalysisReport r;
    const auto& g = j.at("group");
    r.group.name = g.at("name").get<std::string>();
    r.group.order = g.at("order").get<std::size_t>();
    r.group.frattini_order = g.at("frattini_order").get<std::size_t>();
    r.group.maximal_subgroup_orders = g.at("maximal_subgroup_orders").get<std::vector<std::size_t>>();
    const auto game = j.at("game").get<std::string>();
    if (game == "DNG") {
      r.game = GameKind::DNG;
    } else if (game == "GEN") {
      r.game = GameKind::GEN;
    } else {
      throw Error(ErrorCode::ParseError, "unknown game '" + game + "'");
    }
    r.nim = j.at("nim").get<unsigned>();
    r.trivial_group = j.at("trivial_group").get<bool>();
    r.nodes = nodes_from_json(j.at("nodes"));
    r.simplified_nodes = nodes_from_json(j.at("simplified_nodes"));
    if (const auto& o = j.at("oracle"); !o.is_null()) {
      r.oracle = OracleRecord{o.at("nim").get<unsigned>(), o.at("agreed").get<bool>(),
                              o.at("states_explored").get<std::uint64_t>()};
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("report JSON: ") + e.what());
  }
}

std::string export_dot(const StructureDigraph& d, std::string_view title) {
  std::ostringstream out;
  out << "digraph " << std::quoted(std::string(title)) << " {\n";
  out << "  rankdir=TB;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& node : d.nodes) {
    out << "  n" << node.id << " [label=\"I=" << node.subject_order << "|pty=" << node.type.pty << "|(a,b)=("
        << node.type.a << "," << node.type.b << ")|" << to_string(node.kind) << "\"];\n";
  }
  for (const auto& node : d.nodes) {
    for (NodeId o : node.options) out << "  n" << node.id << " -> n" << o << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_report(const AnalysisReport& r, bool simplified) {
  std::ostringstream out;
  out << to_string(r.game) << "(" << r.group.name << ") = *" << r.nim << "\n";
  out << "  order " << r.group.order << ", frattini order " << r.group.frattini_order << ", maximal subgroup orders [";
  for (std::size_t i = 0; i < r.group.maximal_subgroup_orders.size(); ++i) {
    out << (i ? " " : "") << r.group.maximal_subgroup_orders[i];
  }
  out << "]\n";
  if (r.trivial_group) {
    out << "  trivial group: no structure digraph\n";
  } else {
    const auto& nodes = simplified ? r.simplified_nodes : r.nodes;
    std::size_t edges = 0;
    for (const auto& n : nodes) edges += n.options.size();
    out << "  " << (simplified ? "simplified digraph" : "structure digraph") << ": " << nodes.size() << " nodes, "
        << edges << " edges\n";
    out << "  " << std::left << std::setw(6) << "node" << std::setw(6) << "|I|" << std::setw(14) << "kind"
        << std::setw(10) << "type" << "options\n";
    for (const auto& n : nodes) {
      const std::string type =
          "(" + std::to_string(n.type[0]) + "," + std::to_string(n.type[1]) + "," + std::to_string(n.type[2]) + ")";
      out << "  " << std::setw(6) << n.id << std::setw(6) << n.subgroup_order << std::setw(14) << n.kind
          << std::setw(10) << type;
      for (std::size_t i = 0; i < n.options.size(); ++i) out << (i ? " " : "") << n.options[i];
      out << "\n";
    }
  }
  if (r.oracle) {
    out << "  oracle: *" << r.oracle->nim << " (" << (r.oracle->agreed ? "agrees" : "DISAGREES") << ", "
        << r.oracle->states_explored << " states)\n";
  }
  return out.str();
}

}  // namespace nimgroup
