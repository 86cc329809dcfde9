#include "nimgroup/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "nimgroup/compare.hpp"
#include "nimgroup/group_spec.hpp"
#include "nimgroup/laws.hpp"
#include "nimgroup/oracle.hpp"
#include "nimgroup/play.hpp"
#include "nimgroup/report.hpp"

namespace nimgroup {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::BadParameter:
    case ErrorCode::NotPrime:
    case ErrorCode::NotPrimitiveRoot:
    case ErrorCode::BadAction:
    case ErrorCode::NotAssociative:
    case ErrorCode::NoIdentity:
    case ErrorCode::NotLatinSquare:
    case ErrorCode::MissingInverse:
    case ErrorCode::BadTableFormat:
      return kExitGroup;
    case ErrorCode::OrderCapExceeded:
    case ErrorCode::SubgroupBlowup:
    case ErrorCode::StateCapExceeded:
      return kExitResource;
    default:
      return kExitUsage;
  }
}

std::vector<GameKind> parse_games(const std::string& text) {
  if (text == "dng") return {GameKind::DNG};
  if (text == "gen") return {GameKind::GEN};
  if (text == "both") return {GameKind::DNG, GameKind::GEN};
  throw Error(ErrorCode::ParseError, "unknown game '" + text + "' (expected dng, gen or both)");
}

std::vector<std::string> corpus_small() {
  std::vector<std::string> out;
  for (int n = 2; n <= 12; ++n) out.push_back("cyclic:" + std::to_string(n));
  for (int n = 3; n <= 5; ++n) out.push_back("dihedral:" + std::to_string(n));
  out.push_back("q8");
  out.push_back("product:cyclic:2,cyclic:2");
  out.push_back("product:cyclic:2,cyclic:4");
  out.push_back("product:cyclic:3,cyclic:3");
  return out;
}

std::string output_path(const std::string& path, GameKind game, bool several) {
  if (!several) return path;
  std::string suffix = game == GameKind::DNG ? ".dng" : ".gen";
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash) || dot == 0) return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

namespace {

struct LoadedGroup {
  GroupSpec spec;
  FiniteGroup group;
};

LoadedGroup load(const std::string& text, std::ostream& err) {
  GroupSpec spec = parse_group_spec(text);
  FiniteGroup g = build_group(spec);
  for (const auto& w : group_warnings(spec)) err << "warning: " << w << "\n";
  return {std::move(spec), std::move(g)};
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path, std::ios::binary);
  if (f) f << content;
  if (!f) {
    err << "error: cannot write '" << path << "'\n";
    return false;
  }
  return true;
}

std::string game_title(GameKind game, const FiniteGroup& g) {
  return std::string(to_string(game)) + "(" + g.name() + ")";
}

std::optional<std::size_t> frobenius_prime(const GroupSpec& spec) {
  if (const auto* f = std::get_if<spec::Frobenius>(&spec.value)) return f->p;
  return std::nullopt;
}

}  // namespace

int cmd_analyze(const AnalyzeOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto games = parse_games(opts.game);
    const LoadedGroup loaded = load(opts.spec, err);
    const FiniteGroup& g = loaded.group;
    for (GameKind game : games) {
      Analysis a = analyze(g, game);
      if (opts.oracle) {
        try {
          Oracle oracle(g, game);
          const unsigned nim = oracle.nim();
          a.report.oracle = OracleRecord{nim, nim == a.report.nim, oracle.states_explored()};
        } catch (const Error& e) {
          if (e.code() != ErrorCode::StateCapExceeded) throw;
          err << "note: oracle skipped: " << e.what() << "\n";
        }
      }
      out << format_report(a.report, opts.simplified);
      const bool several = games.size() > 1;
      if (opts.dot) {
        std::string dot;
        if (a.structure) {
          dot = export_dot(opts.simplified ? *a.simplified : a.structure->digraph, game_title(game, g));
        } else {
          dot = export_dot(StructureDigraph{game, g.order(), {}, true}, game_title(game, g));
        }
        if (!write_file(output_path(*opts.dot, game, several), dot, err)) return kExitUsage;
      }
      if (opts.json && !write_file(output_path(*opts.json, game, several), export_json(a.report), err)) {
        return kExitUsage;
      }
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int cmd_compare(const CompareOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto games = parse_games(opts.game);
    const LoadedGroup loaded = load(opts.spec, err);
    const FiniteGroup& g = loaded.group;
    OracleConfig cfg;
    if (opts.max_states) cfg.max_states = *opts.max_states;
    int code = kExitOk;
    for (GameKind game : games) {
      const MethodComparison c = compare_methods(g, game, cfg);
      out << "compare " << game_title(game, g) << "\n";
      out << "  structure  *" << c.structure_nim << "\n";
      if (c.verified()) {
        out << "  oracle     *" << *c.oracle_nim << " (" << c.states_explored << " states)\n";
      } else {
        out << "  oracle     UNVERIFIED: " << c.note << "\n";
      }
      if (!c.classes.empty()) {
        out << "  " << std::left << std::setw(7) << "class" << std::setw(6) << "|I|" << std::setw(10) << "type"
            << std::setw(6) << "even" << std::setw(6) << "odd" << "status\n";
        for (const auto& cls : c.classes) {
          const auto show = [](const std::optional<unsigned>& v) { return v ? std::to_string(*v) : std::string("-"); };
          out << "  " << std::setw(7) << cls.id << std::setw(6) << cls.subgroup_order << std::setw(10)
              << to_string(cls.type) << std::setw(6) << show(cls.oracle_even) << std::setw(6)
              << show(cls.oracle_odd) << (!c.verified() ? "unverified" : cls.ok ? "ok" : "MISMATCH") << "\n";
        }
      }
      if (!c.verified()) {
        out << "  result: UNVERIFIED\n";
        code = kExitResource;
      } else if (c.agree()) {
        out << "  result: agree\n";
      } else {
        out << "  result: DISAGREE" << (c.parity_ok ? "" : " (parity invariant violated)") << "\n";
        code = kExitResource;
      }
    }
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

namespace {

struct GameCell {
  unsigned nim = 0;
  LawPrediction law;
};

struct BatchRow {
  std::string spec;
  std::string name;
  std::size_t order = 0;
  std::size_t frattini_order = 0;
  std::optional<GameCell> dng;
  std::optional<GameCell> gen;
  std::string error;

  bool mismatch() const {
    const auto bad = [](const std::optional<GameCell>& c) { return c && c->law.applies() && !c->law.admits(c->nim); };
    return bad(dng) || bad(gen);
  }
};

BatchRow run_row(const std::string& text, const std::vector<GameKind>& games) {
  BatchRow row;
  row.spec = text;
  try {
    const GroupSpec spec = parse_group_spec(text);
    const FiniteGroup g = build_group(spec);
    row.name = g.name();
    row.order = g.order();
    row.frattini_order = summarize_group(g, Exec::Serial).frattini_order;
    for (GameKind game : games) {
      const unsigned nim = g.order() == 1 ? game_nim_value(g, game) : analyze_structure(g, game, Exec::Serial).nim;
      GameCell cell{nim, predict_nim(g, game, frobenius_prime(spec))};
      (game == GameKind::DNG ? row.dng : row.gen) = std::move(cell);
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

int cmd_batch(const BatchOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<std::string> specs;
  std::vector<GameKind> games;
  try {
    games = parse_games(opts.game);
    if (opts.family == "frobenius") {
      for (std::size_t p : opts.p_list) specs.push_back("frobenius:" + std::to_string(p));
    } else if (opts.family == "corpus:small") {
      specs = corpus_small();
    } else if (opts.family == "specs") {
      specs = opts.specs;
    } else {
      throw Error(ErrorCode::ParseError, "unknown family '" + opts.family + "'");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }

  std::vector<BatchRow> rows(specs.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(specs.size()); ++i) {
    rows[i] = run_row(specs[i], games);
  }

  const auto cell_text = [](const std::optional<GameCell>& c) { return c ? "*" + std::to_string(c->nim) : std::string("-"); };
  const auto law_text = [](const std::optional<GameCell>& c) { return c ? to_string(c->law) : std::string("-"); };
  out << std::left << std::setw(10) << "group" << std::setw(7) << "order" << std::setw(7) << "|Phi|";
  if (opts.game != "gen") out << std::setw(5) << "DNG" << std::setw(30) << "law";
  if (opts.game != "dng") out << std::setw(5) << "GEN" << std::setw(30) << "law";
  out << "check\n";
  for (const auto& row : rows) {
    if (!row.error.empty()) {
      out << std::setw(10) << row.spec << "error: " << row.error << "\n";
      continue;
    }
    out << std::setw(10) << row.name << std::setw(7) << row.order << std::setw(7) << row.frattini_order;
    if (opts.game != "gen") out << std::setw(5) << cell_text(row.dng) << std::setw(30) << law_text(row.dng);
    if (opts.game != "dng") out << std::setw(5) << cell_text(row.gen) << std::setw(30) << law_text(row.gen);
    out << (row.mismatch() ? "MISMATCH" : "ok") << "\n";
  }

  if (opts.json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json j;
      j["spec"] = row.spec;
      if (!row.error.empty()) {
        j["error"] = row.error;
        arr.push_back(std::move(j));
        continue;
      }
      j["group"] = row.name;
      j["order"] = row.order;
      j["frattini_order"] = row.frattini_order;
      for (const auto& [key, cell] : {std::pair{"dng", &row.dng}, std::pair{"gen", &row.gen}}) {
        if (!*cell) continue;
        j[key]["nim"] = (*cell)->nim;
        j[key]["law"] = (*cell)->law.law;
        j[key]["allowed"] = (*cell)->law.allowed;
      }
      j["mismatch"] = row.mismatch();
      arr.push_back(std::move(j));
    }
    std::ofstream f(*opts.json, std::ios::binary);
    f << arr.dump(2) << "\n";
    if (!f) {
      err << "error: cannot write '" << *opts.json << "'\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

int cmd_play(const PlayCommandOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    const auto games = parse_games(opts.game);
    if (games.size() != 1) throw Error(ErrorCode::ParseError, "play needs --game dng or --game gen");
    if (opts.vs != "engine" && opts.vs != "human") {
      throw Error(ErrorCode::ParseError, "unknown opponent '" + opts.vs + "' (expected engine or human)");
    }
    const LoadedGroup loaded = load(opts.spec, err);
    OracleConfig cfg;
    if (opts.max_states) cfg.max_states = *opts.max_states;
    // Two humans never ask the oracle for values, so the state guard is moot.
    if (opts.vs == "human") cfg.max_states = std::numeric_limits<std::uint64_t>::max();
    Oracle oracle(loaded.group, games.front(), cfg);
    return play_session(oracle, PlayOptions{opts.vs == "engine", opts.engine_first}, in, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace nimgroup
