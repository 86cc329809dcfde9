#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "nimgroup/oracle.hpp"

namespace nimgroup {

struct PlayOptions {
  /// Engine against a human, or two humans sharing the input stream.
  bool vs_engine = true;
  bool engine_first = false;
};

/// Element named by `token`: a label, or a decimal index when no label matches.
std::optional<Element> parse_move(const FiniteGroup& g, std::string_view token);

/// Interactive game on `in`/`out`. Illegal or unparseable moves re-prompt;
/// "quit" or end of input abandons the game. Returns 0.
int play_session(Oracle& oracle, const PlayOptions& opts, std::istream& in, std::ostream& out);

struct PlayRecord {
  std::vector<Element> moves;
  /// 0 if the first mover made the last move, else 1.
  unsigned winner = 0;
};

using MoveChooser = std::function<Element(const ElementSet& position, const std::vector<Element>& legal)>;

/// Plays the engine against `opponent` to the end. The last mover wins in both games.
PlayRecord self_play(Oracle& engine, const MoveChooser& opponent, bool engine_first);

}  // namespace nimgroup
