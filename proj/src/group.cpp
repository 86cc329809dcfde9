#include "nimgroup/group.hpp"

#include <charconv>
#include <sstream>
#include <utility>

#include "nimgroup/error.hpp"
#include "nimgroup/kernels.hpp"

namespace nimgroup {

bool FiniteGroup::is_abelian() const noexcept {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (table_[i * n_ + j] != table_[j * n_ + i]) return false;
    }
  }
  return true;
}

std::optional<Element> FiniteGroup::find_label(std::string_view text) const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (labels_[i] == text) return static_cast<Element>(i);
  }
  return std::nullopt;
}

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << '(' << i << ',' << j << ',' << k << ')';
  return os.str();
}

}  // namespace

FiniteGroup validate_group(std::size_t n, std::vector<Element> table,
                           std::optional<Element> claimed_identity, std::vector<std::string> labels,
                           std::string name, Exec exec) {
  if (n == 0) throw Error(ErrorCode::BadParameter, "group order must be positive");
  if (n > kMaxOrder) {
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  }
  if (table.size() != n * n) {
    throw Error(ErrorCode::BadTableFormat, "table has " + std::to_string(table.size()) +
                                               " entries, expected " + std::to_string(n * n));
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::BadParameter, "label count does not match order");
  }

  for (std::size_t i = 0; i < n * n; ++i) {
    if (table[i] >= n) {
      throw Error(ErrorCode::NotLatinSquare,
                  "entry at (" + std::to_string(i / n) + "," + std::to_string(i % n) +
                      ") is out of range");
    }
  }
  std::vector<char> seen(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t j = 0; j < n; ++j) {
      if (std::exchange(seen[table[i * n + j]], 1)) {
        throw Error(ErrorCode::NotLatinSquare, "row " + std::to_string(i) + " repeats an entry");
      }
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (std::exchange(seen[table[i * n + j]], 1)) {
        throw Error(ErrorCode::NotLatinSquare, "column " + std::to_string(j) + " repeats an entry");
      }
    }
  }

  auto is_identity = [&](std::size_t e) {
    for (std::size_t j = 0; j < n; ++j) {
      if (table[e * n + j] != j || table[j * n + e] != j) return false;
    }
    return true;
  };
  std::optional<std::size_t> identity;
  if (claimed_identity) {
    if (*claimed_identity >= n || !is_identity(*claimed_identity)) {
      throw Error(ErrorCode::NoIdentity,
                  "claimed identity " + std::to_string(*claimed_identity) + " is not an identity");
    }
    identity = *claimed_identity;
  } else {
    for (std::size_t e = 0; e < n && !identity; ++e) {
      if (is_identity(e)) identity = e;
    }
    if (!identity) throw Error(ErrorCode::NoIdentity, "no two-sided identity element");
  }

  // Relabel so the identity sits at index 0: swap labels e <-> 0.
  const std::size_t e = *identity;
  if (e != 0) {
    auto relabel = [e](std::size_t x) -> std::size_t { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<Element> swapped(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        swapped[relabel(i) * n + relabel(j)] = static_cast<Element>(relabel(table[i * n + j]));
      }
    }
    table = std::move(swapped);
    if (!labels.empty()) std::swap(labels[0], labels[e]);
  }

  std::vector<Element> inverse(n);
  for (std::size_t i = 0; i < n; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      if (table[i * n + j] == 0 && table[j * n + i] == 0) {
        inverse[i] = static_cast<Element>(j);
        found = true;
      }
    }
    if (!found) throw Error(ErrorCode::MissingInverse, "element " + std::to_string(i) + " has no two-sided inverse");
  }

  const auto witness = exec == Exec::Parallel ? kernels::find_nonassociative(table, n)
                                              : kernels::find_nonassociative_serial(table, n);
  if (witness) {
    const auto [i, j, k] = *witness;
    throw NotAssociativeError(*witness, "(xy)z != x(yz) at " + triple(i, j, k));
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  }

  FiniteGroup g;
  g.n_ = n;
  g.table_ = std::move(table);
  g.inverse_ = std::move(inverse);
  g.labels_ = std::move(labels);
  g.name_ = std::move(name);
  return g;
}

FiniteGroup parse_cayley_table(std::string_view text, std::string name) {
  std::vector<std::size_t> tokens;
  std::size_t pos = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\n' || c == '\t' || c == '\r'; };
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    if (text[pos] == '#') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
      continue;
    }
    const std::size_t start = pos;
    while (pos < text.size() && !is_space(text[pos])) ++pos;
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec != std::errc{} || ptr != text.data() + pos) {
      throw Error(ErrorCode::BadTableFormat,
                  "token '" + std::string(text.substr(start, pos - start)) + "' is not a non-negative integer");
    }
    tokens.push_back(value);
  }
  if (tokens.empty()) throw Error(ErrorCode::BadTableFormat, "empty table text");
  const std::size_t n = tokens[0];
  if (n == 0) throw Error(ErrorCode::BadTableFormat, "order must be positive");
  if (n > kMaxOrder) {
    throw Error(ErrorCode::OrderCapExceeded,
                "order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxOrder));
  }
  if (tokens.size() - 1 < n * n) {
    throw Error(ErrorCode::BadTableFormat, "expected " + std::to_string(n * n) + " entries, got " +
                                               std::to_string(tokens.size() - 1));
  }
  if (tokens.size() - 1 > n * n) throw Error(ErrorCode::BadTableFormat, "trailing tokens after table");
  std::vector<Element> table;
  table.reserve(n * n);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    if (tokens[i] >= n) {
      throw Error(ErrorCode::NotLatinSquare, "entry " + std::to_string(tokens[i]) + " out of range");
    }
    table.push_back(static_cast<Element>(tokens[i]));
  }
  return validate_group(n, std::move(table), std::nullopt, {}, std::move(name));
}

ElementSet subgroup_generated(const FiniteGroup& g, const ElementSet& s) {
  const std::size_t n = g.order();
  ElementSet h(n);
  h.insert(g.identity());
  std::vector<Element> members{g.identity()};
  std::vector<Element> gens;
  // Each new generator triggers a sweep of every member against every
  // generator; the set closed under right multiplication by the generators
  // is the generated subgroup.
  s.for_each([&](Element x) {
    if (h.contains(x)) return;
    gens.push_back(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Element gen : gens) {
        const Element y = g.op(members[i], gen);
        if (!h.contains(y)) {
          h.insert(y);
          members.push_back(y);
        }
      }
    }
  });
  return h;
}

bool is_generating(const FiniteGroup& g, const ElementSet& s) {
  return subgroup_generated(g, s).size() == g.order();
}

std::size_t element_order(const FiniteGroup& g, Element x) {
  std::size_t k = 1;
  Element y = x;
  while (y != g.identity()) {
    y = g.op(y, x);
    ++k;
  }
  return k;
}

bool is_subgroup(const FiniteGroup& g, const ElementSet& s) {
  if (!s.contains(g.identity())) return false;
  bool closed = true;
  s.for_each([&](Element a) {
    if (!closed) return;
    s.for_each([&](Element b) {
      if (closed && !s.contains(g.op(a, b))) closed = false;
    });
  });
  return closed;
}

}  // namespace nimgroup
