#pragma once

// Data-parallel inner loops. Every kernel has a serial reference version with
// the same contract; the tests compare the two and bench/ times them.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nimgroup/element_set.hpp"

namespace nimgroup {

class FiniteGroup;

namespace kernels {

using Triple = std::array<std::uint32_t, 3>;

/// Lexicographically smallest (i, j, k) with (ij)k != i(jk), if any.
std::optional<Triple> find_nonassociative(std::span<const Element> table, std::size_t n);
std::optional<Triple> find_nonassociative_serial(std::span<const Element> table, std::size_t n);

/// result[i] = <base ∪ others[i]>.
std::vector<ElementSet> join_each(const FiniteGroup& g, const ElementSet& base,
                                  std::span<const ElementSet> others);
std::vector<ElementSet> join_each_serial(const FiniteGroup& g, const ElementSet& base,
                                         std::span<const ElementSet> others);

/// For every subgroup H in `subgroups`, the distinct subgroups <H ∪ {x}> for
/// x outside H, in order of the smallest x producing each. One x per right
/// coset Hx is tried, since <H ∪ {x}> only depends on that coset.
std::vector<std::vector<ElementSet>> one_step_extensions(const FiniteGroup& g,
                                                         std::span<const ElementSet> subgroups);
std::vector<std::vector<ElementSet>> one_step_extensions_serial(const FiniteGroup& g,
                                                                std::span<const ElementSet> subgroups);

}  // namespace kernels
}  // namespace nimgroup
