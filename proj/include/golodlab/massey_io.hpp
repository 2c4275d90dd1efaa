#pragma once

#include <memory>
#include <string>

#include "golodlab/koszul.hpp"
#include "json.hpp"

namespace golod {

/// [{"wedge": [names ascending], "poly": text}, ...], one entry per wedge.
nlohmann::json koszulElementJson(const KoszulElement& e);
KoszulElement koszulElementFromJson(const nlohmann::json& j, const AlgebraPtr& algebra);

/// JSON text of a table: ring, Groebner basis and order, grading rows, basis
/// representatives and tuple values as (wedge variables, polynomial) pairs.
std::string masseyTableToJson(const MasseyTable& table, const KoszulHomology& h);

struct LoadedMassey {
  AlgebraPtr algebra;
  std::shared_ptr<KoszulHomology> homology;
  MasseyTable table;
  MasseyCheck check;
};

/// Rebuilds the ring and algebra, parses every element and re-verifies the
/// table. `verified` is true only if that verification passed, whatever the
/// input claimed.
LoadedMassey masseyTableFromJson(const std::string& text);

}  // namespace golod
