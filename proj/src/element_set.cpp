#include "nimgroup/element_set.hpp"

#include <algorithm>
#include <stdexcept>

#include "nimgroup/error.hpp"

namespace nimgroup {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotPrimitiveRoot: return "NotPrimitiveRoot";
    case ErrorCode::BadAction: return "BadAction";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::MissingInverse: return "MissingInverse";
    case ErrorCode::BadTableFormat: return "BadTableFormat";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SubgroupBlowup: return "SubgroupBlowup";
    case ErrorCode::TrivialGroup: return "TrivialGroup";
    case ErrorCode::IllegalPosition: return "IllegalPosition";
    case ErrorCode::WrongGame: return "WrongGame";
    case ErrorCode::StateCapExceeded: return "StateCapExceeded";
  }
  return "Unknown";
}

ElementSet::ElementSet(std::size_t capacity)
    : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

ElementSet ElementSet::full(std::size_t capacity) {
  ElementSet s(capacity);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (capacity % 64 != 0) s.words_.back() = (std::uint64_t{1} << (capacity % 64)) - 1;
  s.size_ = capacity;
  return s;
}

ElementSet ElementSet::of(std::size_t capacity, std::initializer_list<Element> elems) {
  return of(capacity, std::span<const Element>(elems.begin(), elems.size()));
}

ElementSet ElementSet::of(std::size_t capacity, std::span<const Element> elems) {
  ElementSet s(capacity);
  for (Element x : elems) s.insert(x);
  return s;
}

void ElementSet::insert(Element x) {
  if (x >= capacity_) throw std::out_of_range("ElementSet::insert: element outside capacity");
  std::uint64_t& w = words_[x >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if ((w & bit) == 0) {
    w |= bit;
    ++size_;
  }
}

void ElementSet::erase(Element x) {
  if (x >= capacity_) return;
  std::uint64_t& w = words_[x >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (x & 63);
  if ((w & bit) != 0) {
    w &= ~bit;
    --size_;
  }
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  if (other.capacity_ != capacity_) throw std::invalid_argument("ElementSet: capacity mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  recount();
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  if (other.capacity_ != capacity_) throw std::invalid_argument("ElementSet: capacity mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  recount();
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  if (other.capacity_ != capacity_ || size_ > other.size_) return false;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

Element ElementSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Element>(w * 64 + std::countr_zero(words_[w]));
  }
  return static_cast<Element>(capacity_);
}

std::vector<Element> ElementSet::elements() const {
  std::vector<Element> out;
  out.reserve(size_);
  for_each([&](Element x) { out.push_back(x); });
  return out;
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  bool first_elem = true;
  for_each([&](Element x) {
    if (!first_elem) out += ',';
    out += std::to_string(x);
    first_elem = false;
  });
  out += '}';
  return out;
}

std::size_t ElementSet::hash() const noexcept {
  // splitmix64 finaliser folded over the words
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ capacity_;
  for (std::uint64_t w : words_) {
    std::uint64_t z = w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

void ElementSet::recount() noexcept {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  size_ = c;
}

bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto wa = a.words();
  const auto wb = b.words();
  const std::size_t nw = std::min(wa.size(), wb.size());
  for (std::size_t w = 0; w < nw; ++w) {
    if (wa[w] == wb[w]) continue;
    for (int byte = 0; byte < 8; ++byte) {
      const auto ba = static_cast<unsigned>((wa[w] >> (8 * byte)) & 0xff);
      const auto bb = static_cast<unsigned>((wb[w] >> (8 * byte)) & 0xff);
      if (ba != bb) return ba < bb;
    }
  }
  return wa.size() < wb.size();
}

}  // namespace nimgroup
