#include "stratarg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stratarg/agents.hpp"
#include "stratarg/audit.hpp"
#include "stratarg/corpus.hpp"
#include "stratarg/formats.hpp"

namespace stratarg {

namespace {

constexpr int exit_yes = 0;
constexpr int exit_no = 1;
constexpr int exit_error = 2;

std::string brace(const ArgumentationFramework& af, ArgSet s) {
  std::string out = "{";
  bool first = true;
  for (ArgIndex i : s) {
    if (!first) out += ",";
    out += af.id(i);
    first = false;
  }
  return out + "}";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse_error, "cannot write '" + path + "'");
  out << content;
}

template <typename T, typename Parse>
T parse_or_throw(const std::string& text, Parse parse, const char* what) {
  auto v = parse(text);
  if (!v) throw Error(ErrorKind::invalid_params, std::string("unknown ") + what + " '" + text + "'");
  return *v;
}

std::string render_move(const ArgumentationFramework& af, const Move& m) {
  std::string line = "move " + std::string(to_string(m.player));
  for (ArgIndex i : m.args) line += " " + af.id(i);
  return line;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strategic argumentation engine", "stratarg"};
  app.require_subcommand(1);
  int jobs = 1;
  app.add_option("--jobs", jobs, "Worker threads for subset scans")->check(CLI::PositiveNumber);
  app.fallthrough();

  // semantics
  std::string af_ref, sem_text = "grounded";
  bool enumerate = false;
  auto* semantics_cmd = app.add_subcommand("semantics", "Grounded labeling or stable extensions");
  semantics_cmd->add_option("--af", af_ref, "Framework file or fixture:<name>")->required();
  semantics_cmd->add_option("--sem", sem_text, "grounded|stable");
  semantics_cmd->add_flag("--enumerate", enumerate, "List every stable extension");

  // verify
  std::string aim_text, focal, side_text;
  bool strict_empty = false;
  auto* verify_cmd = app.add_subcommand("verify", "Aim verification");
  verify_cmd->add_option("--af", af_ref)->required();
  verify_cmd->add_option("--sem", sem_text)->required();
  verify_cmd->add_option("--aim", aim_text)->required();
  verify_cmd->add_option("--focal", focal)->required();
  verify_cmd->add_option("--side", side_text)->required();
  verify_cmd->add_flag("--strict-empty", strict_empty, "Proponent aims fail without extensions");

  // move
  std::string split_ref, policy_text = "lex", trace_path, revealed_text, turn_text;
  bool all_minimal = false;
  auto* move_cmd = app.add_subcommand("move", "Pick a minimal effective move");
  move_cmd->add_option("--split", split_ref)->required();
  move_cmd->add_option("--policy", policy_text, "lex|random:<seed>|optimal");
  move_cmd->add_flag("--all-minimal", all_minimal, "List every minimal move");
  move_cmd->add_option("--trace", trace_path, "Replay this trace prefix first");
  move_cmd->add_option("--revealed", revealed_text, "Comma-separated revealed arguments");
  move_cmd->add_option("--turn", turn_text, "p|o (with --revealed)");

  // play
  std::string agent_p = "lex", agent_o = "lex", out_path;
  auto* play_cmd = app.add_subcommand("play", "Honest self-play");
  play_cmd->add_option("--split", split_ref)->required();
  play_cmd->add_option("--agent-p", agent_p);
  play_cmd->add_option("--agent-o", agent_o);
  play_cmd->add_option("--out", out_path);

  // search-seq
  std::string winner_text, standard_text = "legacy";
  std::size_t bound = default_search_bound;
  auto* seq_cmd = app.add_subcommand("search-seq", "Winning sequence under a standard");
  seq_cmd->add_option("--split", split_ref)->required();
  seq_cmd->add_option("--winner", winner_text)->required();
  seq_cmd->add_option("--standard", standard_text)->required();
  seq_cmd->add_option("--out", out_path);
  seq_cmd->add_option("--bound", bound, "Search bound on total arguments");

  // search-strat
  std::string adversary_text = "all";
  auto* strat_cmd = app.add_subcommand("search-strat", "Winning strategy with minimal moves");
  strat_cmd->add_option("--split", split_ref)->required();
  strat_cmd->add_option("--side", side_text)->required();
  strat_cmd->add_option("--adversary", adversary_text, "all|minimal");
  strat_cmd->add_option("--bound", bound);

  // value
  auto* value_cmd = app.add_subcommand("value", "Game value under optimal play");
  value_cmd->add_option("--split", split_ref)->required();
  value_cmd->add_option("--standard", standard_text);
  value_cmd->add_option("--bound", bound);

  // audit
  bool advisory = false, as_json = false, revealed_only = false;
  auto* audit_cmd = app.add_subcommand("audit", "Audit a recorded trace");
  audit_cmd->add_option("--split", split_ref)->required();
  audit_cmd->add_option("--trace", trace_path)->required();
  audit_cmd->add_option("--standard", standard_text)->required();
  audit_cmd->add_flag("--advisory", advisory, "Show self-injury advisories");
  audit_cmd->add_flag("--revealed-only", revealed_only, "Self-injury against revealed arguments");
  audit_cmd->add_flag("--json", as_json, "Structured report");

  // gen
  GeneratorParams params;
  std::string gen_sem = "grounded", gen_aim = "existential";
  auto* gen_cmd = app.add_subcommand("gen", "Random split framework");
  gen_cmd->add_option("--n-common", params.n_common)->required();
  gen_cmd->add_option("--n-p", params.n_p)->required();
  gen_cmd->add_option("--n-o", params.n_o)->required();
  gen_cmd->add_option("--p-att", params.attack_probability)->required();
  gen_cmd->add_option("--seed", params.seed)->required();
  gen_cmd->add_flag("--acyclic", params.acyclic_only);
  gen_cmd->add_flag("--self-attacks", params.self_attacks);
  gen_cmd->add_option("--sem", gen_sem);
  gen_cmd->add_option("--aim", gen_aim);
  gen_cmd->add_option("--out", out_path);

  // fixture
  std::string fixture_name;
  auto* fixture_cmd = app.add_subcommand("fixture", "Emit a built-in framework");
  fixture_cmd->add_option("--name", fixture_name)->required();
  fixture_cmd->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_yes;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_error;
  }

#ifdef _OPENMP
  omp_set_num_threads(jobs);
#endif
  const Execution exec = jobs > 1 ? Execution::parallel : Execution::serial;

  try {
    if (semantics_cmd->parsed()) {
      const Semantics sem = parse_or_throw<Semantics>(sem_text, parse_semantics, "semantics");
      const SplitFramework split = load_split(af_ref);
      const ArgumentationFramework& af = split.framework();
      if (sem == Semantics::grounded) {
        Labeling l = grounded_labeling(af);
        out << "accepted " << brace(af, l.accepted) << "\n";
        out << "rejected " << brace(af, l.rejected) << "\n";
        out << "undecided " << brace(af, l.undecided) << "\n";
      } else {
        auto exts = stable_extensions(af);
        out << "extensions " << exts.size() << "\n";
        if (enumerate) {
          for (Extension e : exts) out << "extension " << brace(af, e) << "\n";
        }
      }
      return exit_yes;
    }

    if (verify_cmd->parsed()) {
      const Semantics sem = parse_or_throw<Semantics>(sem_text, parse_semantics, "semantics");
      const Aim aim = parse_or_throw<Aim>(aim_text, parse_aim, "aim");
      const Side side = parse_or_throw<Side>(side_text, parse_side, "side");
      const SplitFramework split = load_split(af_ref);
      const ArgumentationFramework& af = split.framework();
      AimOptions options;
      options.strict_empty = strict_empty;
      AimCounts c = aim_counts(af, sem, focal, options.enumeration_bound);
      bool holds = verify_aim(af, sem, aim, focal, side, options);
      out << "counts accepted=" << c.n_accepted << " rejected=" << c.n_rejected
          << " undecided=" << c.n_undecided_status << " total=" << c.n_total << "\n";
      out << "aim " << to_string(aim) << " " << to_string(side) << " "
          << (holds ? "holds" : "fails") << "\n";
      return holds ? exit_yes : exit_no;
    }

    if (move_cmd->parsed()) {
      const MovePolicy policy = parse_or_throw<MovePolicy>(policy_text, parse_policy, "policy");
      auto split = std::make_shared<const SplitFramework>(load_split(split_ref));
      GameState state = GameState::initial(split);
      if (!trace_path.empty()) {
        GameTrace trace = to_trace(parse_trace(read_file(trace_path)), *split);
        state = replay(trace);
      } else if (!revealed_text.empty() || !turn_text.empty()) {
        std::vector<ArgumentId> ids;
        std::stringstream in(revealed_text);
        for (std::string id; std::getline(in, id, ',');) {
          if (!id.empty()) ids.push_back(id);
        }
        const Side turn = turn_text.empty() ? Side::proponent
                                            : parse_or_throw<Side>(turn_text, parse_side, "side");
        state = state.with(split->common() | split->framework().set_of(ids), turn);
      }
      const ArgumentationFramework& af = state.split().framework();
      if (all_minimal) {
        auto moves = minimal_moves(state, exec);
        for (const Move& m : moves) out << render_move(af, m) << "\n";
        if (moves.empty()) out << "none\n";
        return moves.empty() ? exit_no : exit_yes;
      }
      auto move = honest_move(state, policy);
      out << (move ? render_move(af, *move) : std::string("none")) << "\n";
      return move ? exit_yes : exit_no;
    }

    if (play_cmd->parsed()) {
      const MovePolicy pp = parse_or_throw<MovePolicy>(agent_p, parse_policy, "policy");
      const MovePolicy po = parse_or_throw<MovePolicy>(agent_o, parse_policy, "policy");
      auto split = std::make_shared<const SplitFramework>(load_split(split_ref));
      GameTrace trace = play_match(split, pp, po);
      const std::string text = serialize_trace(to_document(trace, split_ref));
      if (!out_path.empty()) write_file(out_path, text);
      out << text;
      return exit_yes;
    }

    if (seq_cmd->parsed()) {
      const Side winner = parse_or_throw<Side>(winner_text, parse_side, "side");
      const Standard standard = parse_or_throw<Standard>(standard_text, parse_standard, "standard");
      auto split = std::make_shared<const SplitFramework>(load_split(split_ref));
      auto trace = winning_sequence(split, winner, standard, bound);
      if (!trace) {
        out << "none\n";
        return exit_no;
      }
      const std::string text = serialize_trace(to_document(*trace, split_ref));
      if (!out_path.empty()) write_file(out_path, text);
      out << text;
      return exit_yes;
    }

    if (strat_cmd->parsed()) {
      const Side side = parse_or_throw<Side>(side_text, parse_side, "side");
      Adversary adversary;
      if (adversary_text == "all") {
        adversary = Adversary::all_effective;
      } else if (adversary_text == "minimal") {
        adversary = Adversary::minimal_only;
      } else {
        throw Error(ErrorKind::invalid_params, "unknown adversary '" + adversary_text + "'");
      }
      auto split = std::make_shared<const SplitFramework>(load_split(split_ref));
      auto strategy = winning_strategy(split, side, adversary, bound);
      if (!strategy) {
        out << "none\n";
        return exit_no;
      }
      const ArgumentationFramework& af = split->framework();
      out << "strategy " << to_string(side) << "\n";
      for (const auto& [revealed, move] : strategy->moves) {
        out << "at " << brace(af, revealed) << " play " << brace(af, move.args) << "\n";
      }
      return exit_yes;
    }

    if (value_cmd->parsed()) {
      const Standard standard = parse_or_throw<Standard>(standard_text, parse_standard, "standard");
      auto split = std::make_shared<const SplitFramework>(load_split(split_ref));
      out << "winner " << to_string(game_value(GameState::initial(split), standard, bound)) << "\n";
      return exit_yes;
    }

    if (audit_cmd->parsed()) {
      const Standard standard = parse_or_throw<Standard>(standard_text, parse_standard, "standard");
      const SplitFramework split = load_split(split_ref);
      GameTrace trace = to_trace(parse_trace(read_file(trace_path)), split);
      AuditReport report = audit_trace(
          trace, standard, revealed_only ? InjuryScope::revealed_only : InjuryScope::full_pool);
      if (as_json) {
        out << to_json(report, *trace.split).dump(2) << "\n";
      } else {
        out << render_text(report, *trace.split, advisory);
      }
      return report.compliant() ? exit_yes : exit_no;
    }

    if (gen_cmd->parsed()) {
      params.semantics = parse_or_throw<Semantics>(gen_sem, parse_semantics, "semantics");
      params.aim = parse_or_throw<Aim>(gen_aim, parse_aim, "aim");
      const std::string text = serialize_saf(random_split(params));
      if (!out_path.empty()) {
        write_file(out_path, text);
      } else {
        out << text;
      }
      return exit_yes;
    }

    if (fixture_cmd->parsed()) {
      const std::string text = serialize_saf(fixture(fixture_name));
      if (!out_path.empty()) {
        write_file(out_path, text);
      } else {
        out << text;
      }
      return exit_yes;
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_error;
  }
  return exit_error;
}

}  // namespace stratarg
