#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nimgroup/oracle.hpp"
#include "nimgroup/structure.hpp"

namespace nimgroup {

/// Structure-method type of one class against the values the oracle observed
/// on positions of that class.
struct ClassComparison {
  MemberId id = 0;
  std::size_t subgroup_order = 0;
  TypeTriple type;
  std::optional<unsigned> oracle_even;
  std::optional<unsigned> oracle_odd;
  bool ok = true;
};

struct MethodComparison {
  GameKind game = GameKind::DNG;
  unsigned structure_nim = 0;
  /// Unset when the oracle refused the group.
  std::optional<unsigned> oracle_nim;
  std::uint64_t states_explored = 0;
  bool parity_ok = true;
  std::vector<ClassComparison> classes;
  /// Reason the oracle did not run, if it did not.
  std::string note;

  bool verified() const noexcept { return oracle_nim.has_value(); }
  /// Oracle ran, nim-values match and every class matches.
  bool agree() const;
};

/// Runs both methods. StateCapExceeded from the oracle is caught and reported
/// through `note`; other errors propagate.
MethodComparison compare_methods(const FiniteGroup& g, GameKind game, const OracleConfig& cfg = {},
                                 Exec exec = Exec::Parallel);

}  // namespace nimgroup
