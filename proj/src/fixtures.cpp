#include "stratarg/corpus.hpp"

#include <fstream>
#include <sstream>

#include "stratarg/formats.hpp"

namespace stratarg {

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"saf8", "safmulti", "saf16", "ah", "choice"};
  return names;
}

SplitFramework fixture(std::string_view name) {
  if (name == "saf8") {
    return SplitFramework::from_ids(
        {}, {"A", "C"}, {"B1", "B2", "D"},
        {{"B1", "A"}, {"C", "B1"}, {"D", "C"}, {"B2", "D"}}, "A");
  }
  if (name == "safmulti") {
    return SplitFramework::from_ids(
        {}, {"A", "C", "E", "G", "H"}, {"B", "D", "F"},
        {{"B", "A"}, {"C", "B"}, {"G", "B"}, {"D", "C"}, {"E", "D"}, {"H", "D"}, {"F", "C"},
         {"F", "E"}},
        "A");
  }
  if (name == "saf16") {
    return SplitFramework::from_ids(
        {}, {"A", "C1", "C2", "F"}, {"B1", "B2", "D1", "D2", "E"},
        {{"B1", "A"}, {"B2", "A"}, {"C1", "B1"}, {"C2", "B2"}, {"D1", "C1"}, {"D2", "C2"},
         {"F", "B1"}, {"E", "B2"}, {"E", "C1"}, {"E", "C2"}, {"E", "D1"}, {"E", "D2"}},
        "A");
  }
  if (name == "ah") {
    return SplitFramework::from_ids(
        {}, {"A", "C", "F", "G", "H"}, {"B", "D", "E"},
        {{"B", "A"}, {"C", "B"}, {"D", "C"}, {"E", "A"}, {"F", "B"}, {"G", "E"}, {"H", "E"},
         {"H", "F"}},
        "A");
  }
  if (name == "choice") {
    return SplitFramework::from_ids(
        {}, {"A", "D"}, {"B", "C"}, {{"B", "A"}, {"B", "C"}, {"C", "A"}, {"C", "B"}, {"D", "C"}},
        "A", Semantics::grounded);
  }
  throw Error(ErrorKind::unknown_fixture, "unknown fixture '" + std::string(name) + "'");
}

SplitFramework load_split(std::string_view ref) {
  constexpr std::string_view prefix = "fixture:";
  if (ref.starts_with(prefix)) return fixture(ref.substr(prefix.size()));
  std::ifstream in{std::string(ref)};
  if (!in) throw Error(ErrorKind::parse_error, "cannot open '" + std::string(ref) + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_saf(text.str());
}

}  // namespace stratarg
