#include "nimgroup/kernels.hpp"

#include <omp.h>

#include <limits>

#include "nimgroup/group.hpp"

namespace nimgroup::kernels {

namespace {

// First violating (j, k) for a fixed row i, or nullopt.
std::optional<Triple> scan_row(std::span<const Element> t, std::size_t n, std::size_t i) {
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t ij = t[i * n + j];
    for (std::size_t k = 0; k < n; ++k) {
      if (t[ij * n + k] != t[i * n + t[j * n + k]]) {
        return Triple{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                      static_cast<std::uint32_t>(k)};
      }
    }
  }
  return std::nullopt;
}

std::vector<ElementSet> extensions_of(const FiniteGroup& g, const ElementSet& h) {
  const std::size_t n = g.order();
  std::vector<ElementSet> out;
  ElementSet covered = h;
  const auto members = h.elements();
  for (Element x = 0; x < n; ++x) {
    if (covered.contains(x)) continue;
    for (Element m : members) covered.insert(g.op(m, x));
    ElementSet joined = subgroup_generated(g, h.with(x));
    bool seen = false;
    for (const auto& e : out) {
      if (e == joined) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(std::move(joined));
  }
  return out;
}

}  // namespace

std::optional<Triple> find_nonassociative_serial(std::span<const Element> table, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (auto w = scan_row(table, n, i)) return w;
  }
  return std::nullopt;
}

std::optional<Triple> find_nonassociative(std::span<const Element> table, std::size_t n) {
  // Smallest failing row wins, so the witness matches the serial scan.
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto rows = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 4) reduction(min : best)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    if (static_cast<std::size_t>(i) < best && scan_row(table, n, static_cast<std::size_t>(i))) {
      best = static_cast<std::size_t>(i);
    }
  }
  if (best == std::numeric_limits<std::size_t>::max()) return std::nullopt;
  return scan_row(table, n, best);
}

std::vector<ElementSet> join_each_serial(const FiniteGroup& g, const ElementSet& base,
                                         std::span<const ElementSet> others) {
  std::vector<ElementSet> out;
  out.reserve(others.size());
  for (const auto& o : others) out.push_back(subgroup_generated(g, base | o));
  return out;
}

std::vector<ElementSet> join_each(const FiniteGroup& g, const ElementSet& base,
                                  std::span<const ElementSet> others) {
  std::vector<ElementSet> out(others.size());
  const auto count = static_cast<std::ptrdiff_t>(others.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = subgroup_generated(g, base | others[static_cast<std::size_t>(i)]);
  }
  return out;
}

std::vector<std::vector<ElementSet>> one_step_extensions_serial(const FiniteGroup& g,
                                                                std::span<const ElementSet> subgroups) {
  std::vector<std::vector<ElementSet>> out;
  out.reserve(subgroups.size());
  for (const auto& h : subgroups) out.push_back(extensions_of(g, h));
  return out;
}

std::vector<std::vector<ElementSet>> one_step_extensions(const FiniteGroup& g,
                                                         std::span<const ElementSet> subgroups) {
  std::vector<std::vector<ElementSet>> out(subgroups.size());
  const auto count = static_cast<std::ptrdiff_t>(subgroups.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = extensions_of(g, subgroups[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace nimgroup::kernels
