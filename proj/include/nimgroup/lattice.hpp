#pragma once

#include <cstddef>
#include <optional>
#include <unordered_map>
#include <vector>

#include "nimgroup/element_set.hpp"
#include "nimgroup/exec.hpp"
#include "nimgroup/group.hpp"

namespace nimgroup {

inline constexpr std::size_t kDefaultSubgroupCap = 100'000;

/// Deduplicated subgroups of one group, in canonical order (size, then bytes).
struct SubgroupFamily {
  std::size_t group_order = 0;
  std::vector<ElementSet> members;
};

using MemberId = std::size_t;

/// All intersections of nonempty sets of maximal subgroups.
///
/// `contains[a][b]` is true iff member a ⊆ member b. The whole group is never
/// a member.
struct IntersectionFamily {
  std::size_t group_order = 0;
  SubgroupFamily family;
  std::vector<MemberId> maximal_ids;
  MemberId frattini_id = 0;
  std::vector<std::vector<bool>> contains;

  std::size_t size() const noexcept { return family.members.size(); }
  const ElementSet& member(MemberId id) const { return family.members.at(id); }
  std::optional<MemberId> find(const ElementSet& s) const;

 private:
  friend IntersectionFamily intersection_family(const FiniteGroup&, Exec);
  std::unordered_map<ElementSet, MemberId> index_;
};

/// Every subgroup: cyclic subgroups joined with each other until nothing new appears.
SubgroupFamily all_subgroups(const FiniteGroup& g, std::size_t cap = kDefaultSubgroupCap,
                             Exec exec = Exec::Parallel);

SubgroupFamily maximal_subgroups(const FiniteGroup& g, Exec exec = Exec::Parallel);
SubgroupFamily maximal_subgroups(const SubgroupFamily& all);

/// Intersection of all maximal subgroups; the whole group when |G| = 1.
ElementSet frattini(const FiniteGroup& g, Exec exec = Exec::Parallel);

IntersectionFamily intersection_family(const FiniteGroup& g, Exec exec = Exec::Parallel);

/// The ⊆-least member containing `s`, i.e. the intersection of the maximal
/// subgroups that contain it. nullopt when no maximal subgroup contains `s`,
/// which happens exactly when `s` generates the whole group.
std::optional<MemberId> minimal_envelope(const IntersectionFamily& fam, const ElementSet& s);

}  // namespace nimgroup
