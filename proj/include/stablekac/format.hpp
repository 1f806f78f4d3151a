#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "stablekac/affine_roots.hpp"
#include "stablekac/characters.hpp"
#include "stablekac/partitions.hpp"
#include "stablekac/stable_ring.hpp"

namespace stablekac {

/// "(2,1)", "()".
std::string partition_display(const Partition& lambda);

/// "[(2),(1,1)]".
std::string bipartition_text(const Bipartition& b);

/// "[(),()] + 2[(1),(1)] - [(2),(2)]" in Bipartition order; "0" when empty.
std::string kelement_text(const KElement& x);

/// One line per power: "q^2: [(),()] + 2[(1),(1)] + [(1,1),(1,1)]".
std::string series_text(const CharacterSeries& s);

/// Parses "left/right" with comma-separated parts on each side, e.g. "2,1/1",
/// "/" or "" for [(),()], "1" for [(1),()].  Throws InvalidInput.
Bipartition parse_bipartition(std::string_view text);

/// {"left": [...], "right": [...], "mult": "..."} per term, parts and
/// multiplicities as decimal strings, in Bipartition order.
nlohmann::json kelement_json(const KElement& x);

/// The output record {"case", "level", "order", "series": [{"q", "terms"}]}.
/// Every number is emitted as a decimal string.
nlohmann::json series_json(const CharacterSeries& s, CaseTag kind = CaseTag::GL);

/// Canonical serialization used by the CLI (two-space indent, sorted keys).
std::string dump_json(const nlohmann::json& j);

}  // namespace stablekac
