#include "stablekac/format.hpp"

#include <sstream>

#include "stablekac/errors.hpp"

namespace stablekac {

std::string partition_display(const Partition& lambda) { return "(" + partition_text(lambda) + ")"; }

std::string bipartition_text(const Bipartition& b) {
  return "[" + partition_display(b.left) + "," + partition_display(b.right) + "]";
}

std::string kelement_text(const KElement& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, m] : x.terms()) {
    const Integer a = m < 0 ? Integer(-m) : m;
    if (first)
      os << (m < 0 ? "-" : "");
    else
      os << (m < 0 ? " - " : " + ");
    if (a != 1) os << a.str();
    os << bipartition_text(b);
    first = false;
  }
  return os.str();
}

std::string series_text(const CharacterSeries& s) {
  std::ostringstream os;
  for (std::size_t j = 0; j <= s.order(); ++j) os << "q^" << j << ": " << kelement_text(s.coefficient(j)) << '\n';
  return os.str();
}

Bipartition parse_bipartition(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_partition(text), {}};
  if (text.find('/', slash + 1) != std::string_view::npos)
    throw InvalidInput("malformed bipartition \"" + std::string(text) + "\": expected left/right");
  return {parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1))};
}

namespace {

nlohmann::json parts_json(const Partition& p) {
  auto arr = nlohmann::json::array();
  for (auto x : p.parts()) arr.push_back(std::to_string(x));
  return arr;
}

}  // namespace

nlohmann::json kelement_json(const KElement& x) {
  auto terms = nlohmann::json::array();
  for (const auto& [b, m] : x.terms())
    terms.push_back({{"left", parts_json(b.left)}, {"right", parts_json(b.right)}, {"mult", m.str()}});
  return terms;
}

nlohmann::json series_json(const CharacterSeries& s, CaseTag kind) {
  auto series = nlohmann::json::array();
  for (std::size_t j = 0; j <= s.order(); ++j)
    series.push_back({{"q", std::to_string(j)}, {"terms", kelement_json(s.coefficient(j))}});
  return {{"case", case_name(kind)},
          {"level", std::to_string(s.level())},
          {"order", std::to_string(s.order())},
          {"series", std::move(series)}};
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

}  // namespace stablekac
