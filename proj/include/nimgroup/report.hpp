#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nimgroup/exec.hpp"
#include "nimgroup/group.hpp"
#include "nimgroup/structure.hpp"

namespace nimgroup {

struct GroupSummary {
  std::string name;
  std::size_t order = 0;
  std::size_t frattini_order = 0;
  /// Sorted ascending, one entry per maximal subgroup.
  std::vector<std::size_t> maximal_subgroup_orders;

  friend bool operator==(const GroupSummary&, const GroupSummary&) = default;
};

struct NodeRecord {
  std::size_t id = 0;
  std::size_t subgroup_order = 0;
  unsigned parity = 0;
  std::string kind;
  std::array<unsigned, 3> type{};
  std::vector<std::size_t> options;

  friend bool operator==(const NodeRecord&, const NodeRecord&) = default;
};

struct OracleRecord {
  unsigned nim = 0;
  bool agreed = false;
  std::uint64_t states_explored = 0;

  friend bool operator==(const OracleRecord&, const OracleRecord&) = default;
};

struct AnalysisReport {
  GroupSummary group;
  GameKind game = GameKind::DNG;
  unsigned nim = 0;
  bool trivial_group = false;
  std::vector<NodeRecord> nodes;
  std::vector<NodeRecord> simplified_nodes;
  std::optional<OracleRecord> oracle;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// Everything one analysis produces: the report plus the digraphs it was built from.
struct Analysis {
  AnalysisReport report;
  /// Empty for the trivial group.
  std::optional<StructureAnalysis> structure;
  std::optional<StructureDigraph> simplified;
};

GroupSummary summarize_group(const FiniteGroup& g, Exec exec = Exec::Parallel);
std::vector<NodeRecord> node_records(const StructureDigraph& d);

/// Full structure pipeline. The trivial group yields an empty digraph and the
/// fixed values DNG 0, GEN 1.
Analysis analyze(const FiniteGroup& g, GameKind game, Exec exec = Exec::Parallel);

/// Pretty-printed JSON with a fixed key order.
std::string export_json(const AnalysisReport& report);
/// Inverse of export_json; throws Error(ParseError) on malformed input.
AnalysisReport parse_report_json(std::string_view text);

/// DOT digraph with one box per node and one edge per option.
std::string export_dot(const StructureDigraph& d, std::string_view title = "structure");

/// Human-readable multi-line summary of one analysis.
std::string format_report(const AnalysisReport& report, bool simplified = false);

}  // namespace nimgroup
