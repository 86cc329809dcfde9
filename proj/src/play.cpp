#include "nimgroup/play.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <string>

namespace nimgroup {

std::optional<Element> parse_move(const FiniteGroup& g, std::string_view token) {
  if (auto x = g.find_label(token)) return x;
  Element value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value >= g.order()) return std::nullopt;
  return value;
}

namespace {

std::string show(const FiniteGroup& g, const ElementSet& p) {
  std::string out = "{";
  bool first = true;
  p.for_each([&](Element x) {
    if (!first) out += ", ";
    out += g.label(x);
    first = false;
  });
  return out + "}";
}

std::string show(const FiniteGroup& g, const std::vector<Element>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + g.label(xs[i]);
  return out;
}

}  // namespace

int play_session(Oracle& oracle, const PlayOptions& opts, std::istream& in, std::ostream& out) {
  const FiniteGroup& g = oracle.group();
  ElementSet position = g.empty_set();
  std::vector<Element> transcript;
  const char* names[2] = {"player 1", "player 2"};
  if (opts.vs_engine) {
    names[opts.engine_first ? 0 : 1] = "engine";
    names[opts.engine_first ? 1 : 0] = "you";
  }
  out << to_string(oracle.game()) << "(" << g.name() << "): the player who makes the last move wins.\n";

  unsigned turn = 0;
  while (true) {
    const auto legal = oracle.legal_moves(position);
    if (legal.empty()) break;
    out << "position " << show(g, position) << "\n";
    const bool engine_turn = opts.vs_engine && ((turn == 0) == opts.engine_first);
    Element move = 0;
    if (engine_turn) {
      move = *oracle.best_move(position);
      out << "engine plays " << g.label(move) << "\n";
    } else {
      out << "legal moves: " << show(g, legal) << "\n";
      while (true) {
        out << names[turn] << "> " << std::flush;
        std::string token;
        if (!(in >> token) || token == "quit") {
          out << "\ngame abandoned after " << transcript.size() << " moves\n";
          return 0;
        }
        const auto x = parse_move(g, token);
        if (x && std::binary_search(legal.begin(), legal.end(), *x)) {
          move = *x;
          break;
        }
        out << "illegal move '" << token << "'\n";
      }
    }
    position.insert(move);
    transcript.push_back(move);
    turn ^= 1u;
  }
  const unsigned winner = turn ^ 1u;
  out << "final position " << show(g, position) << "\n";
  out << "moves: " << show(g, transcript) << "\n";
  out << names[winner] << (opts.vs_engine && names[winner] == std::string("you") ? " win\n" : " wins\n");
  return 0;
}

PlayRecord self_play(Oracle& engine, const MoveChooser& opponent, bool engine_first) {
  PlayRecord rec;
  ElementSet position = engine.group().empty_set();
  unsigned turn = 0;
  while (true) {
    const auto legal = engine.legal_moves(position);
    if (legal.empty()) break;
    const bool engine_turn = (turn == 0) == engine_first;
    const Element move = engine_turn ? *engine.best_move(position) : opponent(position, legal);
    position.insert(move);
    rec.moves.push_back(move);
    turn ^= 1u;
  }
  rec.winner = turn ^ 1u;
  return rec;
}

}  // namespace nimgroup
