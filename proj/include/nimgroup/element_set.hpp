#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace nimgroup {

using Element = std::uint32_t;

/// Bitset over the element indices [0, capacity) of one group.
///
/// Used both for game positions and for subgroups. The population count is
/// cached and kept in step with every mutation. Sets of different capacity
/// never compare equal.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t capacity);

  static ElementSet full(std::size_t capacity);
  static ElementSet of(std::size_t capacity, std::initializer_list<Element> elems);
  static ElementSet of(std::size_t capacity, std::span<const Element> elems);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  bool contains(Element x) const noexcept {
    return (words_[x >> 6] >> (x & 63)) & 1u;
  }
  void insert(Element x);
  void erase(Element x);

  ElementSet with(Element x) const {
    ElementSet r = *this;
    r.insert(x);
    return r;
  }

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

  bool is_subset_of(const ElementSet& other) const noexcept;

  /// Smallest element, or capacity() if empty.
  Element first() const noexcept;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Element>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<Element> elements() const;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  /// "{0,2,4}" using element indices.
  std::string to_string() const;

  friend bool operator==(const ElementSet& a, const ElementSet& b) noexcept {
    return a.capacity_ == b.capacity_ && a.words_ == b.words_;
  }

  std::size_t hash() const noexcept;

 private:
  void recount() noexcept;

  std::size_t capacity_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical ordering: by size, then by the little-endian byte image of the bitset.
bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept;

struct CanonicalLess {
  bool operator()(const ElementSet& a, const ElementSet& b) const noexcept {
    return canonical_less(a, b);
  }
};

}  // namespace nimgroup

template <>
struct std::hash<nimgroup::ElementSet> {
  std::size_t operator()(const nimgroup::ElementSet& s) const noexcept { return s.hash(); }
};
