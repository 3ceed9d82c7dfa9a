#include "stratarg/formats.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

namespace stratarg {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string strip_comments(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool comment = false;
  for (char c : text) {
    if (c == '%') comment = true;
    if (c == '\n') comment = false;
    if (!comment) out.push_back(c);
  }
  return out;
}

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::parse_error, what); }

std::string checked_id(std::string_view token) {
  if (!is_valid_argument_id(token)) fail("malformed argument id '" + std::string(token) + "'");
  return std::string(token);
}

std::vector<std::string> split_words(std::string_view line) {
  std::vector<std::string> words;
  std::istringstream in{std::string(line)};
  for (std::string w; in >> w;) words.push_back(w);
  return words;
}

}  // namespace

SplitFramework parse_saf(std::string_view text) {
  static const std::regex statement(R"(^\s*([a-z]+)\s*\(([^()]*)\)\s*$)");
  const std::string body = strip_comments(text);

  std::vector<ArgumentId> arguments;
  std::vector<Attack> attacks;
  std::map<ArgumentId, std::string> owners;
  std::optional<ArgumentId> focal;
  std::optional<Semantics> sem;
  std::optional<Aim> aim;

  std::size_t start = 0;
  while (true) {
    const std::size_t dot = body.find('.', start);
    std::string_view chunk = trim(std::string_view(body).substr(
        start, dot == std::string::npos ? std::string::npos : dot - start));
    if (dot == std::string::npos) {
      if (!chunk.empty()) fail("statement without terminating '.': '" + std::string(chunk) + "'");
      break;
    }
    start = dot + 1;
    if (chunk.empty()) fail("empty statement");

    std::smatch m;
    std::string stmt(chunk);
    if (!std::regex_match(stmt, m, statement)) fail("malformed statement '" + stmt + "'");
    const std::string name = m[1];
    std::vector<std::string> args;
    {
      std::string inner = m[2];
      std::size_t from = 0;
      while (true) {
        std::size_t comma = inner.find(',', from);
        args.emplace_back(trim(std::string_view(inner).substr(
            from, comma == std::string::npos ? std::string::npos : comma - from)));
        if (comma == std::string::npos) break;
        from = comma + 1;
      }
    }
    auto arity = [&](std::size_t n) {
      if (args.size() != n) fail(name + " expects " + std::to_string(n) + " argument(s)");
    };

    if (name == "arg") {
      arity(1);
      arguments.push_back(checked_id(args[0]));
    } else if (name == "att") {
      arity(2);
      attacks.push_back({checked_id(args[0]), checked_id(args[1])});
    } else if (name == "own") {
      arity(2);
      const std::string id = checked_id(args[0]);
      if (args[1] != "common" && args[1] != "p" && args[1] != "o") {
        fail("ownership must be common, p or o");
      }
      if (!owners.emplace(id, args[1]).second) fail("ownership of '" + id + "' given twice");
    } else if (name == "focal") {
      arity(1);
      if (focal) fail("focal given twice");
      focal = checked_id(args[0]);
    } else if (name == "sem") {
      arity(1);
      if (sem) fail("sem given twice");
      sem = parse_semantics(args[0]);
      if (!sem) fail("unknown semantics '" + args[0] + "'");
    } else if (name == "aim") {
      arity(1);
      if (aim) fail("aim given twice");
      aim = parse_aim(args[0]);
      if (!aim) fail("unknown aim '" + args[0] + "'");
    } else {
      fail("unknown directive '" + name + "'");
    }
  }
  if (!focal) fail("missing focal(...) statement");

  std::vector<ArgumentId> common, proponent, opponent;
  std::vector<ArgumentId> sorted = arguments;
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [id, role] : owners) {
    if (!std::binary_search(sorted.begin(), sorted.end(), id)) {
      fail("own(...) names undeclared argument '" + id + "'");
    }
  }
  for (const auto& id : arguments) {
    auto it = owners.find(id);
    const std::string role = it == owners.end() ? "common" : it->second;
    (role == "p" ? proponent : role == "o" ? opponent : common).push_back(id);
  }
  try {
    return SplitFramework::from_ids(common, proponent, opponent, attacks, *focal,
                                    sem.value_or(Semantics::grounded),
                                    aim.value_or(Aim::existential));
  } catch (const Error& e) {
    fail(e.what());
  }
}

std::string serialize_saf(const SplitFramework& split) {
  const ArgumentationFramework& af = split.framework();
  std::ostringstream out;
  for (const auto& id : af.ids()) out << "arg(" << id << ").\n";
  for (auto [a, b] : af.attack_pairs()) out << "att(" << af.id(a) << "," << af.id(b) << ").\n";
  for (ArgIndex i = 0; i < af.size(); ++i) {
    if (split.pool(Side::proponent).contains(i)) out << "own(" << af.id(i) << ",p).\n";
    if (split.pool(Side::opponent).contains(i)) out << "own(" << af.id(i) << ",o).\n";
  }
  out << "focal(" << af.id(split.focal()) << ").\n";
  out << "sem(" << to_string(split.semantics()) << ").\n";
  out << "aim(" << to_string(split.aim()) << ").\n";
  return out.str();
}

TraceDocument parse_trace(std::string_view text) {
  TraceDocument doc;
  bool have_game = false;
  bool have_winner = false;
  std::istringstream in{strip_comments(text)};
  std::size_t line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto words = split_words(line);
    if (words.empty()) continue;
    const std::string where = "trace line " + std::to_string(line_no) + ": ";
    const std::string& key = words[0];
    if (have_winner) fail(where + "content after the winner line");
    if (!have_game) {
      if (key != "game" || words.size() != 2) fail(where + "expected 'game <ref>'");
      doc.game = words[1];
      have_game = true;
    } else if (key == "semantics") {
      if (words.size() != 2) fail(where + "expected 'semantics <s>'");
      auto s = parse_semantics(words[1]);
      if (!s) fail(where + "unknown semantics '" + words[1] + "'");
      doc.semantics = *s;
    } else if (key == "aim") {
      if (words.size() != 2) fail(where + "expected 'aim <a>'");
      auto a = parse_aim(words[1]);
      if (!a) fail(where + "unknown aim '" + words[1] + "'");
      doc.aim = *a;
    } else if (key == "move") {
      if (words.size() < 2 || (words[1] != "P" && words[1] != "O")) {
        fail(where + "expected 'move P|O <id>...'");
      }
      TraceMove move{words[1] == "P" ? Side::proponent : Side::opponent, {}};
      for (std::size_t i = 2; i < words.size(); ++i) move.args.push_back(checked_id(words[i]));
      doc.moves.push_back(std::move(move));
    } else if (key == "winner") {
      if (words.size() != 2 || (words[1] != "P" && words[1] != "O")) {
        fail(where + "expected 'winner P|O'");
      }
      doc.winner = words[1] == "P" ? Side::proponent : Side::opponent;
      have_winner = true;
    } else {
      fail(where + "unknown keyword '" + key + "'");
    }
  }
  if (!have_game) fail("trace has no game line");
  if (!have_winner) fail("trace has no winner line");
  return doc;
}

std::string serialize_trace(const TraceDocument& doc) {
  std::ostringstream out;
  out << "game " << doc.game << "\n";
  out << "semantics " << to_string(doc.semantics) << "\n";
  out << "aim " << to_string(doc.aim) << "\n";
  for (const TraceMove& m : doc.moves) {
    std::vector<ArgumentId> ids = m.args;
    std::sort(ids.begin(), ids.end());
    out << "move " << to_string(m.player);
    for (const auto& id : ids) out << " " << id;
    out << "\n";
  }
  out << "winner " << to_string(doc.winner) << "\n";
  return out.str();
}

TraceDocument to_document(const GameTrace& trace, std::string game_ref) {
  const SplitFramework& split = *trace.split;
  TraceDocument doc;
  doc.game = std::move(game_ref);
  doc.semantics = split.semantics();
  doc.aim = split.aim();
  for (const Move& m : trace.moves) {
    doc.moves.push_back({m.player, split.framework().ids_of(m.args)});
  }
  doc.winner = trace.winner;
  return doc;
}

GameTrace to_trace(const TraceDocument& doc, const SplitFramework& split) {
  auto bound = std::make_shared<const SplitFramework>(split.with_rules(doc.semantics, doc.aim));
  GameTrace trace{bound, {}, doc.winner};
  for (const TraceMove& m : doc.moves) {
    trace.moves.push_back({m.player, bound->framework().set_of(m.args)});
  }
  return trace;
}

nlohmann::json to_json(const AuditReport& report, const SplitFramework& split) {
  using nlohmann::json;
  const ArgumentationFramework& af = split.framework();
  auto ids = [&](ArgSet s) { return json(af.ids_of(s & af.all())); };

  json per_move = json::array();
  for (const MoveRecord& r : report.per_move) {
    json rec{{"index", r.index},
             {"player", std::string(to_string(r.player))},
             {"args", ids(r.args)},
             {"effective", r.effective}};
    rec["minimal"] = r.minimal ? json(*r.minimal) : json("not-required");
    rec["witness_subset"] = r.witness ? ids(*r.witness) : json(nullptr);
    rec["min_effective_size"] = r.min_effective_size ? json(*r.min_effective_size) : json(nullptr);
    per_move.push_back(std::move(rec));
  }
  json advisories = json::array();
  for (const SelfInjury& s : report.advisories) {
    json pairs = json::array();
    for (auto [a, b] : s.attacked_own) pairs.push_back({af.id(a), af.id(b)});
    advisories.push_back({{"index", s.index},
                          {"player", std::string(to_string(s.player))},
                          {"kind", "self_injury"},
                          {"attacked_own", std::move(pairs)}});
  }
  json violations = json::array();
  for (const Violation& v : report.violations) {
    violations.push_back(
        {{"kind", std::string(to_string(v.kind))}, {"index", v.index}, {"detail", v.detail}});
  }
  return json{{"standard", std::string(to_string(report.standard))},
              {"claimed_winner", std::string(to_string(report.claimed_winner))},
              {"per_move", std::move(per_move)},
              {"end_check",
               {{"evaluated", report.end_check.evaluated},
                {"loser_had_no_move", report.end_check.loser_had_no_move}}},
              {"advisories", std::move(advisories)},
              {"violations", std::move(violations)},
              {"verdict", report.compliant() ? "compliant" : "violation"}};
}

}  // namespace stratarg
