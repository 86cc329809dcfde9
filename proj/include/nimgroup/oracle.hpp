#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nimgroup/element_set.hpp"
#include "nimgroup/group.hpp"
#include "nimgroup/lattice.hpp"
#include "nimgroup/structure.hpp"

namespace nimgroup {

inline constexpr std::uint64_t kDefaultMaxStates = std::uint64_t{1} << 24;

/// kDefaultMaxStates, or the value of NIMGROUP_MAX_STATES when set and valid.
std::uint64_t default_max_states();

struct OracleConfig {
  std::uint64_t max_states = default_max_states();
  /// Order in which moves are tried; empty means ascending element index.
  std::vector<Element> move_order;
};

struct LabeledPosition {
  ElementSet position;
  unsigned grundy = 0;
};

struct ParityViolation {
  MemberId class_id = 0;
  unsigned parity = 0;
  LabeledPosition first;
  LabeledPosition second;
};

struct ParityReport {
  bool ok = true;
  std::optional<ParityViolation> violation;
  /// (class member id, position parity) -> grundy value shared by that bucket.
  std::map<std::pair<MemberId, unsigned>, unsigned> buckets;
  std::size_t positions_checked = 0;
};

/// Open-addressing map from position bitsets to grundy values.
class PositionTable {
 public:
  explicit PositionTable(std::size_t words_per_key);

  std::optional<unsigned> find(std::span<const std::uint64_t> key) const;
  void insert(std::span<const std::uint64_t> key, unsigned value);
  std::size_t size() const noexcept { return count_; }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t slot = 0; slot < values_.size(); ++slot) {
      if (values_[slot] != kEmpty) f(std::span<const std::uint64_t>(&keys_[slot * words_], words_), values_[slot]);
    }
  }

 private:
  static constexpr std::uint16_t kEmpty = 0xffff;
  std::size_t slot_of(std::span<const std::uint64_t> key) const;
  void grow();

  std::size_t words_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint16_t> values_;
};

/// Brute-force Sprague-Grundy evaluation of GEN/DNG by direct play.
///
/// Independent of the structure-class machinery: positions are explicit
/// element sets and each one is solved by the mex recursion over its
/// options. The group must outlive the oracle. Not thread-safe; use one
/// oracle per analysis.
class Oracle {
 public:
  /// Throws StateCapExceeded when the sum over maximal subgroups M of
  /// 2^|M| exceeds cfg.max_states.
  Oracle(const FiniteGroup& g, GameKind game, OracleConfig cfg = {});

  const FiniteGroup& group() const noexcept { return *g_; }
  GameKind game() const noexcept { return game_; }
  /// The precomputed bound sum_M 2^|M| (saturating).
  std::uint64_t state_bound() const noexcept { return bound_; }
  std::size_t states_explored() const noexcept { return memo_.size(); }

  /// Nim-value of position p; IllegalPosition if p is not a position.
  unsigned grundy(const ElementSet& p);
  /// Nim-value of the empty starting position.
  unsigned nim();

  bool is_position(const ElementSet& p) const;
  /// True once no further move is possible from p.
  bool is_over(const ElementSet& p) const;
  std::vector<Element> legal_moves(const ElementSet& p) const;
  /// Grundy value of the position reached by playing x at p.
  unsigned option_value(const ElementSet& p, Element x);

  /// A move to a zero position if one exists, else the move with the smallest
  /// resulting value; ties go to the lowest element index. nullopt if no move.
  std::optional<Element> best_move(const ElementSet& p);

  /// Every memoised position with its value, in canonical order. Solves the
  /// starting position first.
  std::vector<LabeledPosition> labeled_positions();

  /// Checks that positions in one structure class with equal parity share a
  /// grundy value, over every memoised position.
  ParityReport verify_parity_invariant(const IntersectionFamily& fam);

 private:
  using SubgroupId = std::uint32_t;

  SubgroupId intern(ElementSet h);
  SubgroupId join(SubgroupId h, Element x);
  unsigned solve(ElementSet& p, SubgroupId h);

  const FiniteGroup* g_;
  GameKind game_;
  OracleConfig cfg_;
  std::uint64_t bound_ = 0;
  std::vector<Element> order_;
  PositionTable memo_;

  std::vector<ElementSet> subgroups_;
  std::unordered_map<ElementSet, SubgroupId> subgroup_ids_;
  std::vector<std::int32_t> joins_;
};

unsigned grundy(const FiniteGroup& g, GameKind game, const ElementSet& p, const OracleConfig& cfg = {});
unsigned bruteforce_nim(const FiniteGroup& g, GameKind game, const OracleConfig& cfg = {});
std::vector<LabeledPosition> enumerate_labeled_positions(const FiniteGroup& g, GameKind game,
                                                         const OracleConfig& cfg = {});
std::optional<Element> best_move(const FiniteGroup& g, GameKind game, const ElementSet& p,
                                 const OracleConfig& cfg = {});
ParityReport verify_parity_invariant(const FiniteGroup& g, GameKind game, const IntersectionFamily& fam,
                                     const OracleConfig& cfg = {});

}  // namespace nimgroup
