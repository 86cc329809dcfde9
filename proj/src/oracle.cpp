#include "nimgroup/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>

#include "nimgroup/error.hpp"

namespace nimgroup {

std::uint64_t default_max_states() {
  if (const char* env = std::getenv("NIMGROUP_MAX_STATES")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultMaxStates;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

PositionTable::PositionTable(std::size_t words_per_key)
    : words_(std::max<std::size_t>(words_per_key, 1)), keys_(64 * words_, 0), values_(64, kEmpty) {}

std::size_t PositionTable::slot_of(std::span<const std::uint64_t> key) const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull;
  for (std::uint64_t w : key) h = mix(h ^ w);
  const std::size_t mask = values_.size() - 1;
  std::size_t slot = static_cast<std::size_t>(h) & mask;
  while (values_[slot] != kEmpty && !std::equal(key.begin(), key.end(), keys_.begin() + slot * words_)) {
    slot = (slot + 1) & mask;
  }
  return slot;
}

std::optional<unsigned> PositionTable::find(std::span<const std::uint64_t> key) const {
  const std::size_t slot = slot_of(key);
  if (values_[slot] == kEmpty) return std::nullopt;
  return values_[slot];
}

void PositionTable::insert(std::span<const std::uint64_t> key, unsigned value) {
  if ((count_ + 1) * 2 > values_.size()) grow();
  const std::size_t slot = slot_of(key);
  if (values_[slot] == kEmpty) {
    ++count_;
    std::copy(key.begin(), key.end(), keys_.begin() + slot * words_);
  }
  values_[slot] = static_cast<std::uint16_t>(value);
}

void PositionTable::grow() {
  std::vector<std::uint64_t> old_keys = std::move(keys_);
  std::vector<std::uint16_t> old_values = std::move(values_);
  values_.assign(old_values.size() * 2, kEmpty);
  keys_.assign(values_.size() * words_, 0);
  for (std::size_t slot = 0; slot < old_values.size(); ++slot) {
    if (old_values[slot] == kEmpty) continue;
    std::span<const std::uint64_t> key(&old_keys[slot * words_], words_);
    const std::size_t dst = slot_of(key);
    std::copy(key.begin(), key.end(), keys_.begin() + dst * words_);
    values_[dst] = old_values[slot];
  }
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t state_bound_of(const FiniteGroup& g) {
  if (g.order() == 1) return 1;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  for (const auto& m : maximal_subgroups(g).members) {
    if (m.size() >= 63) return kMax;
    const std::uint64_t term = std::uint64_t{1} << m.size();
    if (total > kMax - term) return kMax;
    total += term;
  }
  return total;
}

}  // namespace

Oracle::Oracle(const FiniteGroup& g, GameKind game, OracleConfig cfg)
    : g_(&g), game_(game), cfg_(std::move(cfg)), memo_((g.order() + 63) / 64) {
  bound_ = state_bound_of(g);
  if (bound_ > cfg_.max_states) {
    throw Error(ErrorCode::StateCapExceeded,
                "position bound " +
                    (bound_ == std::numeric_limits<std::uint64_t>::max() ? std::string(">= 2^64")
                                                                         : std::to_string(bound_)) +
                    " exceeds max_states " + std::to_string(cfg_.max_states) + " for " + g.name());
  }
  if (cfg_.move_order.empty()) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), Element{0});
  } else {
    order_ = cfg_.move_order;
    std::vector<Element> sorted = order_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted.size() != g.order() || sorted[i] != i) {
        throw Error(ErrorCode::BadParameter, "move_order must be a permutation of the elements");
      }
    }
  }
  intern(g.whole());
}

Oracle::SubgroupId Oracle::intern(ElementSet h) {
  const auto it = subgroup_ids_.find(h);
  if (it != subgroup_ids_.end()) return it->second;
  const auto id = static_cast<SubgroupId>(subgroups_.size());
  subgroup_ids_.emplace(h, id);
  subgroups_.push_back(std::move(h));
  joins_.resize(subgroups_.size() * g_->order(), -1);
  return id;
}

Oracle::SubgroupId Oracle::join(SubgroupId h, Element x) {
  const std::size_t slot = static_cast<std::size_t>(h) * g_->order() + x;
  if (joins_[slot] >= 0) return static_cast<SubgroupId>(joins_[slot]);
  SubgroupId result = h;
  if (!subgroups_[h].contains(x)) result = intern(subgroup_generated(*g_, subgroups_[h].with(x)));
  joins_[slot] = static_cast<std::int32_t>(result);
  return result;
}

unsigned Oracle::solve(ElementSet& p, SubgroupId h) {
  if (const auto v = memo_.find(p.words())) return *v;
  // Interned id 0 is the whole group.
  std::bitset<kMaxOrder + 2> seen;
  for (Element x : order_) {
    if (p.contains(x)) continue;
    const SubgroupId h2 = join(h, x);
    if (h2 == 0) {
      // GEN: generating move ends the game (value 0). DNG: illegal.
      if (game_ == GameKind::GEN) seen.set(0);
      continue;
    }
    p.insert(x);
    seen.set(solve(p, h2));
    p.erase(x);
  }
  unsigned value = 0;
  while (seen.test(value)) ++value;
  memo_.insert(p.words(), value);
  return value;
}

bool Oracle::is_position(const ElementSet& p) const {
  if (p.capacity() != g_->order()) return false;
  if (game_ == GameKind::GEN) return true;
  // DNG: p must not generate, except the empty start on the trivial group.
  if (g_->order() == 1) return p.empty();
  return !is_generating(*g_, p);
}

bool Oracle::is_over(const ElementSet& p) const { return legal_moves(p).empty(); }

std::vector<Element> Oracle::legal_moves(const ElementSet& p) const {
  if (!is_position(p)) throw Error(ErrorCode::IllegalPosition, p.to_string() + " is not a position");
  std::vector<Element> moves;
  if (game_ == GameKind::GEN) {
    if (!p.empty() && is_generating(*g_, p)) return moves;
    for (Element x = 0; x < g_->order(); ++x) {
      if (!p.contains(x)) moves.push_back(x);
    }
    return moves;
  }
  for (Element x = 0; x < g_->order(); ++x) {
    if (!p.contains(x) && !is_generating(*g_, p.with(x))) moves.push_back(x);
  }
  return moves;
}

unsigned Oracle::grundy(const ElementSet& p) {
  if (!is_position(p)) throw Error(ErrorCode::IllegalPosition, p.to_string() + " is not a position");
  ElementSet generated = subgroup_generated(*g_, p);
  if (game_ == GameKind::GEN && !p.empty() && generated.size() == g_->order()) return 0;
  ElementSet work = p;
  return solve(work, intern(std::move(generated)));
}

unsigned Oracle::nim() { return grundy(g_->empty_set()); }

unsigned Oracle::option_value(const ElementSet& p, Element x) {
  const auto moves = legal_moves(p);
  if (std::find(moves.begin(), moves.end(), x) == moves.end()) {
    throw Error(ErrorCode::IllegalPosition, "element " + std::to_string(x) + " is not a legal move");
  }
  return grundy(p.with(x));
}

std::optional<Element> Oracle::best_move(const ElementSet& p) {
  std::optional<Element> best;
  unsigned best_value = std::numeric_limits<unsigned>::max();
  for (Element x : legal_moves(p)) {
    const unsigned v = grundy(p.with(x));
    if (v < best_value) {
      best_value = v;
      best = x;
      if (v == 0) break;
    }
  }
  return best;
}

std::vector<LabeledPosition> Oracle::labeled_positions() {
  nim();
  std::vector<LabeledPosition> out;
  out.reserve(memo_.size());
  const std::size_t n = g_->order();
  memo_.for_each([&](std::span<const std::uint64_t> key, unsigned value) {
    ElementSet s(n);
    for (std::size_t w = 0; w < key.size(); ++w) {
      std::uint64_t bits = key[w];
      while (bits != 0) {
        s.insert(static_cast<Element>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    out.push_back({std::move(s), value});
  });
  std::sort(out.begin(), out.end(),
            [](const LabeledPosition& a, const LabeledPosition& b) { return canonical_less(a.position, b.position); });
  return out;
}

ParityReport Oracle::verify_parity_invariant(const IntersectionFamily& fam) {
  ParityReport report;
  std::map<std::pair<MemberId, unsigned>, LabeledPosition> first_seen;
  for (auto& lp : labeled_positions()) {
    ++report.positions_checked;
    const auto env = minimal_envelope(fam, lp.position);
    if (!env) continue;  // generating sets only occur as GEN terminals, all valued 0
    const auto key = std::make_pair(*env, static_cast<unsigned>(lp.position.size() % 2));
    const auto [it, inserted] = first_seen.emplace(key, lp);
    if (inserted) {
      report.buckets[key] = lp.grundy;
    } else if (it->second.grundy != lp.grundy && report.ok) {
      report.ok = false;
      report.violation = ParityViolation{key.first, key.second, it->second, lp};
    }
  }
  return report;
}

// ---------------------------------------------------------------------------

unsigned grundy(const FiniteGroup& g, GameKind game, const ElementSet& p, const OracleConfig& cfg) {
  return Oracle(g, game, cfg).grundy(p);
}

unsigned bruteforce_nim(const FiniteGroup& g, GameKind game, const OracleConfig& cfg) {
  return Oracle(g, game, cfg).nim();
}

std::vector<LabeledPosition> enumerate_labeled_positions(const FiniteGroup& g, GameKind game,
                                                         const OracleConfig& cfg) {
  return Oracle(g, game, cfg).labeled_positions();
}

std::optional<Element> best_move(const FiniteGroup& g, GameKind game, const ElementSet& p,
                                 const OracleConfig& cfg) {
  return Oracle(g, game, cfg).best_move(p);
}

ParityReport verify_parity_invariant(const FiniteGroup& g, GameKind game, const IntersectionFamily& fam,
                                     const OracleConfig& cfg) {
  return Oracle(g, game, cfg).verify_parity_invariant(fam);
}

}  // namespace nimgroup
