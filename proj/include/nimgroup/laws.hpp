#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nimgroup/group.hpp"
#include "nimgroup/structure.hpp"

namespace nimgroup {

/// A closed-form prediction of a nim-value, if one is known for the group.
struct LawPrediction {
  /// Short name of the rule that applied, or "structure" when none did.
  std::string law = "structure";
  /// Values the rule allows; empty when no rule applies.
  std::vector<unsigned> allowed;

  bool applies() const noexcept { return !allowed.empty(); }
  bool admits(unsigned nim) const;
};

/// Rules, first match wins:
///  - "trivial": DNG 0, GEN 1.
///  - "abelian-maximal p^a q^b" / "abelian-maximal p^a": nonabelian groups whose
///    maximal subgroups are all abelian, by the prime shape of the order.
///  - "frobenius": F_p given by `frobenius_p`; DNG 0, GEN 0 if 4 | p-1 else 1.
///  - "odd-order": DNG 1, GEN 1 or 2.
///  - "even-frattini": DNG 0.
LawPrediction predict_nim(const FiniteGroup& g, GameKind game, std::optional<std::size_t> frobenius_p = std::nullopt);

std::string to_string(const LawPrediction& law);

}  // namespace nimgroup
