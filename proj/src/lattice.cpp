#include "nimgroup/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "nimgroup/error.hpp"
#include "nimgroup/kernels.hpp"

namespace nimgroup {

std::optional<MemberId> IntersectionFamily::find(const ElementSet& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SubgroupFamily all_subgroups(const FiniteGroup& g, std::size_t cap, Exec exec) {
  const std::size_t n = g.order();
  std::unordered_set<ElementSet> seen;
  std::vector<ElementSet> cyclic;
  for (Element x = 0; x < n; ++x) {
    ElementSet c = subgroup_generated(g, ElementSet::of(n, {x}));
    if (seen.insert(c).second) cyclic.push_back(std::move(c));
  }
  std::sort(cyclic.begin(), cyclic.end(), CanonicalLess{});

  std::vector<ElementSet> members = cyclic;
  if (members.size() > cap) {
    throw Error(ErrorCode::SubgroupBlowup, "more than " + std::to_string(cap) + " subgroups");
  }
  std::vector<ElementSet> partners;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ElementSet base = members[i];
    partners.clear();
    for (const auto& c : cyclic) {
      if (!c.is_subset_of(base)) partners.push_back(c);
    }
    auto joined = exec == Exec::Parallel ? kernels::join_each(g, base, partners)
                                         : kernels::join_each_serial(g, base, partners);
    for (auto& j : joined) {
      if (seen.insert(j).second) {
        members.push_back(std::move(j));
        if (members.size() > cap) {
          throw Error(ErrorCode::SubgroupBlowup, "more than " + std::to_string(cap) + " subgroups");
        }
      }
    }
  }
  std::sort(members.begin(), members.end(), CanonicalLess{});
  return SubgroupFamily{n, std::move(members)};
}

SubgroupFamily maximal_subgroups(const SubgroupFamily& all) {
  const std::size_t n = all.group_order;
  if (n <= 1) throw Error(ErrorCode::TrivialGroup, "the trivial group has no maximal subgroups");
  std::vector<const ElementSet*> proper;
  for (const auto& m : all.members) {
    if (m.size() < n) proper.push_back(&m);
  }
  SubgroupFamily out{n, {}};
  for (std::size_t i = 0; i < proper.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < proper.size() && maximal; ++j) {
      if (proper[j]->size() > proper[i]->size() && proper[i]->is_subset_of(*proper[j])) maximal = false;
    }
    if (maximal) out.members.push_back(*proper[i]);
  }
  return out;
}

SubgroupFamily maximal_subgroups(const FiniteGroup& g, Exec exec) {
  if (g.order() <= 1) throw Error(ErrorCode::TrivialGroup, "the trivial group has no maximal subgroups");
  return maximal_subgroups(all_subgroups(g, kDefaultSubgroupCap, exec));
}

ElementSet frattini(const FiniteGroup& g, Exec exec) {
  if (g.order() == 1) return g.whole();
  const auto maxes = maximal_subgroups(g, exec);
  ElementSet phi = g.whole();
  for (const auto& m : maxes.members) phi &= m;
  return phi;
}

IntersectionFamily intersection_family(const FiniteGroup& g, Exec exec) {
  const auto maxes = maximal_subgroups(g, exec);
  std::unordered_set<ElementSet> seen(maxes.members.begin(), maxes.members.end());
  std::vector<ElementSet> members = maxes.members;
  // Every intersection of maximal subgroups is reached by intersecting an
  // existing member with one more maximal subgroup.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (const auto& m : maxes.members) {
      ElementSet cut = members[i] & m;
      if (seen.insert(cut).second) members.push_back(std::move(cut));
    }
  }
  std::sort(members.begin(), members.end(), CanonicalLess{});

  IntersectionFamily fam;
  fam.group_order = g.order();
  fam.family = SubgroupFamily{g.order(), std::move(members)};
  const auto& ms = fam.family.members;
  for (MemberId id = 0; id < ms.size(); ++id) fam.index_.emplace(ms[id], id);
  for (const auto& m : maxes.members) fam.maximal_ids.push_back(fam.index_.at(m));
  std::sort(fam.maximal_ids.begin(), fam.maximal_ids.end());

  ElementSet phi = g.whole();
  for (const auto& m : maxes.members) phi &= m;
  fam.frattini_id = fam.index_.at(phi);

  fam.contains.assign(ms.size(), std::vector<bool>(ms.size(), false));
  for (MemberId a = 0; a < ms.size(); ++a) {
    for (MemberId b = 0; b < ms.size(); ++b) fam.contains[a][b] = ms[a].is_subset_of(ms[b]);
  }
  return fam;
}

std::optional<MemberId> minimal_envelope(const IntersectionFamily& fam, const ElementSet& s) {
  // s ⊆ M iff <s> ⊆ M for a subgroup M, so the raw set is tested directly.
  std::optional<ElementSet> cut;
  for (MemberId id : fam.maximal_ids) {
    const ElementSet& m = fam.member(id);
    if (!s.is_subset_of(m)) continue;
    if (cut) {
      *cut &= m;
    } else {
      cut = m;
    }
  }
  if (!cut) return std::nullopt;
  return fam.find(*cut);
}

}  // namespace nimgroup
