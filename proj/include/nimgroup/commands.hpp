#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nimgroup/error.hpp"
#include "nimgroup/structure.hpp"

namespace nimgroup {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitGroup = 2;
inline constexpr int kExitResource = 3;

/// Exit status for an error escaping a command.
int exit_code_for(const Error& e);

/// "dng", "gen" or "both" to the games to run; throws Error(ParseError) otherwise.
std::vector<GameKind> parse_games(const std::string& text);

/// Specs of the small test corpus: Z2..Z12, D3..D5, Q8, Z2xZ2, Z2xZ4, Z3xZ3.
std::vector<std::string> corpus_small();

/// `path` itself for a single game, else "<stem>.<game><ext>".
std::string output_path(const std::string& path, GameKind game, bool several);

struct AnalyzeOptions {
  std::string spec;
  std::string game = "both";
  std::optional<std::string> dot;
  std::optional<std::string> json;
  bool simplified = false;
  /// Also run the brute-force oracle and record it in the report.
  bool oracle = false;
};

struct CompareOptions {
  std::string spec;
  std::string game = "both";
  std::optional<std::uint64_t> max_states;
};

struct BatchOptions {
  /// "frobenius", "corpus:small" or "specs".
  std::string family = "corpus:small";
  std::vector<std::size_t> p_list{5, 7, 11, 13, 19};
  std::vector<std::string> specs;
  std::string game = "both";
  std::optional<std::string> json;
};

struct PlayCommandOptions {
  std::string spec;
  std::string game = "gen";
  /// "engine" or "human".
  std::string vs = "engine";
  bool engine_first = false;
  std::optional<std::uint64_t> max_states;
};

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err);
int cmd_batch(const BatchOptions& opts, std::ostream& out, std::ostream& err);
int cmd_play(const PlayCommandOptions& opts, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nimgroup
