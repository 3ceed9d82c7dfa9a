#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "stratarg/corpus.hpp"
#include "stratarg/game.hpp"

namespace testing {

using namespace stratarg;

inline ArgumentationFramework two_cycle() { return ArgumentationFramework({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }

inline ArgumentationFramework three_cycle() {
  return ArgumentationFramework({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
}

inline std::shared_ptr<const SplitFramework> shared(SplitFramework s) {
  return std::make_shared<const SplitFramework>(std::move(s));
}

inline std::shared_ptr<const SplitFramework> fixture_ptr(std::string_view name) {
  return shared(fixture(name));
}

inline ArgSet set(const SplitFramework& s, std::initializer_list<std::string_view> ids) {
  return s.framework().set_of(ids);
}

inline GameState state_at(const std::shared_ptr<const SplitFramework>& s,
                          std::initializer_list<std::string_view> revealed, Side turn) {
  return GameState(s, s->common() | s->framework().set_of(revealed), turn);
}

inline Move move_of(const SplitFramework& s, Side player, std::initializer_list<std::string_view> ids) {
  return Move{player, s.framework().set_of(ids)};
}

inline std::vector<std::string> names(const ArgumentationFramework& af, ArgSet s) {
  return af.ids_of(s);
}

inline std::vector<std::vector<std::string>> names(const ArgumentationFramework& af,
                                                   const std::vector<Move>& moves) {
  std::vector<std::vector<std::string>> out;
  for (const auto& m : moves) out.push_back(af.ids_of(m.args));
  return out;
}

using Names = std::vector<std::string>;
using NameLists = std::vector<std::vector<std::string>>;

constexpr Side P = Side::proponent;
constexpr Side O = Side::opponent;

}  // namespace testing
