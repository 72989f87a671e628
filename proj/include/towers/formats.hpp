#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "towers/oracle.hpp"
#include "towers/poset.hpp"
#include "towers/provider.hpp"
#include "towers/tower.hpp"

namespace towers {

/// On-disk poset description. "cover" documents are closed into full
/// posets on load; "leq" documents are validated as given.
struct PosetDocument {
  std::string name;
  std::vector<ElementLabel> elements;
  std::string relation_kind;  // "cover" or "leq"
  std::vector<std::pair<ElementLabel, ElementLabel>> pairs;

  FinitePoset to_poset() const;
};

struct MapDocument {
  std::string name;
  std::vector<std::pair<ElementLabel, ElementLabel>> assignment;

  SelfMap to_map(const FinitePoset& host) const;
};

PosetDocument parse_poset_doc(std::string_view text);
std::string serialize_poset(const FinitePoset& p);
/// Convenience: parse + validate/close in one step.
FinitePoset load_poset(std::string_view text);

MapDocument parse_map_doc(std::string_view text);
std::string serialize_map(const FinitePoset& host, const SelfMap& f);

/// DOT digraph holding exactly the cover edges (transitive reduction),
/// one node per element.
std::string export_dot(const FinitePoset& p);

/// JSON renderings used by the CLI; fields mirror the domain types.
std::string trace_to_json(const PosetProvider& host, const TowerTrace& trace);
std::string certificate_to_json(const PosetProvider& host, const FixedPointCertificate& cert);
std::string report_to_json(const CorpusReport& report);

}  // namespace towers
