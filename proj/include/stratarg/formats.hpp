#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stratarg/audit.hpp"
#include "stratarg/split.hpp"

namespace stratarg {

// Split framework files (.saf):
//   arg(<id>).  att(<a>,<b>).  own(<id>,common|p|o).  focal(<id>).
//   sem(grounded|stable).  aim(<aim>).   '%' comments to end of line.
// Serialization is canonical: arguments, attacks and ownership in id order.

SplitFramework parse_saf(std::string_view text);
std::string serialize_saf(const SplitFramework& split);

struct TraceMove {
  Side player = Side::proponent;
  std::vector<ArgumentId> args;

  friend bool operator==(const TraceMove&, const TraceMove&) = default;
};

/// On-disk form of a trace (.trace); ids are kept as text so a trace can be
/// read before the framework it refers to.
struct TraceDocument {
  std::string game;
  Semantics semantics = Semantics::grounded;
  Aim aim = Aim::existential;
  std::vector<TraceMove> moves;
  Side winner = Side::proponent;

  friend bool operator==(const TraceDocument&, const TraceDocument&) = default;
};

TraceDocument parse_trace(std::string_view text);
std::string serialize_trace(const TraceDocument& doc);

TraceDocument to_document(const GameTrace& trace, std::string game_ref);
/// Binds a document to `split`, with the document's semantics and aim taking
/// precedence. Unknown ids throw `unknown_argument`.
GameTrace to_trace(const TraceDocument& doc, const SplitFramework& split);

nlohmann::json to_json(const AuditReport& report, const SplitFramework& split);

}  // namespace stratarg
