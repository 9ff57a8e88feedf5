#pragma once

#include <string>

#include <json.hpp>

#include "groupalg/conv.hpp"
#include "groupalg/decide.hpp"
#include "groupalg/graph.hpp"
#include "groupalg/groupoid.hpp"
#include "groupalg/matrix.hpp"
#include "groupalg/ring.hpp"

namespace groupalg {

// insertion-ordered so serialized output is byte-stable
using ojson = nlohmann::ordered_json;

/// {"vertices":[...],"edges":[{"id","src","dst"}],"infinite_emitters":[...]}
Graph parse_graph(const std::string& text);
ojson graph_to_json(const Graph& g);

/// {"objects":[...],"arrows":[{"id","src","tgt"}],"compose":[[a,b,c]...],
///  "inverse":[[a,b]...]}
FiniteGroupoid parse_groupoid(const std::string& text);
ojson groupoid_to_json(const FiniteGroupoid& g);

/// Coefficients: integers/residues as decimal strings, rationals as "p/q",
/// finitely supported maps as key -> coefficient objects in key order.
ojson ring_elem_to_json(const Ring& ring, const RingElem& e);

ojson conv_element_to_json(const ConvElement& f);
ojson arrow_to_json(const DiscreteGroupoid& g, const GArrow& a);

ojson boundary_analysis_to_json(const BoundaryAnalysis& a);
ojson verdict_to_json(const ChainVerdict& v);
ojson iso_summary_to_json(const DecompositionIso& iso);
ojson iso_verification_to_json(const IsoVerification& rep);
ojson validation_report_to_json(const ValidationReport& rep);
ojson left_ideals_to_json(const Ring& ring, const std::vector<std::vector<int>>& ideals);
ojson column_oracle_to_json(const Ring& ring, const std::vector<int>& index_set, int pivot,
                            const ColumnOracleReport& rep);

} // namespace groupalg
