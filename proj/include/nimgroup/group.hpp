#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nimgroup/element_set.hpp"
#include "nimgroup/exec.hpp"

namespace nimgroup {

/// Largest group order accepted anywhere in the library.
inline constexpr std::size_t kMaxOrder = 1024;

/// A finite group given by its Cayley table.
///
/// Instances only come out of validate_group (directly or through
/// build_group), so every FiniteGroup satisfies the group axioms. The
/// identity is always element 0.
class FiniteGroup {
 public:
  std::size_t order() const noexcept { return n_; }
  Element identity() const noexcept { return 0; }
  Element op(Element a, Element b) const noexcept { return table_[a * n_ + b]; }
  Element inverse(Element a) const noexcept { return inverse_[a]; }

  const std::string& name() const noexcept { return name_; }
  const std::string& label(Element a) const { return labels_.at(a); }
  std::span<const std::string> labels() const noexcept { return labels_; }
  std::span<const Element> table() const noexcept { return table_; }

  bool is_abelian() const noexcept;

  /// Element whose label is `text`, or nullopt.
  std::optional<Element> find_label(std::string_view text) const;

  ElementSet empty_set() const { return ElementSet(n_); }
  ElementSet whole() const { return ElementSet::full(n_); }

 private:
  friend FiniteGroup validate_group(std::size_t, std::vector<Element>, std::optional<Element>,
                                    std::vector<std::string>, std::string, Exec);

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> labels_;
  std::string name_;
};

/// Checks a raw row-major Cayley table and returns it as a group.
///
/// Runs the range, Latin-square, identity, inverse and full O(n^3)
/// associativity checks, in that order. If `claimed_identity` is absent the
/// identity is searched for. The identity is relabelled to index 0 (it swaps
/// places with whatever was at 0). Empty `labels` means decimal indices of the
/// relabelled elements.
FiniteGroup validate_group(std::size_t n, std::vector<Element> table,
                           std::optional<Element> claimed_identity = std::nullopt,
                           std::vector<std::string> labels = {}, std::string name = "table",
                           Exec exec = Exec::Parallel);

/// Parses the Cayley table text format: n, then n*n indices, nothing else.
FiniteGroup parse_cayley_table(std::string_view text, std::string name = "table");

ElementSet subgroup_generated(const FiniteGroup& g, const ElementSet& s);
bool is_generating(const FiniteGroup& g, const ElementSet& s);
std::size_t element_order(const FiniteGroup& g, Element x);

/// True if `s` contains the identity and is closed under the operation.
bool is_subgroup(const FiniteGroup& g, const ElementSet& s);

}  // namespace nimgroup
