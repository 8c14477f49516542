#pragma once

#include <string>

#include "hermitian/codes.hpp"
#include "hermitian/grid.hpp"
#include "hermitian/oracle.hpp"

#include "json.hpp"

namespace hermitian {

/// CSV of field-element integer codes, one row per line, LF endings.
std::string matrix_csv(const GFMatrix& m);

std::string coset_bounds_csv(const CosetBoundSequence& seq, const CurveParams& cp);
nlohmann::json coset_bounds_json(const CosetBoundSequence& seq);

std::string redundancy_csv(const RedundancyTable& t);
nlohmann::json redundancy_json(const RedundancyTable& t);

nlohmann::json monomial_json(const Monomial& mu);
nlohmann::json check_entries_json(const std::vector<CheckEntry>& entries);

nlohmann::json provenance_json(const Provenance& p);

nlohmann::json weight_distribution_json(const WeightDistribution& d);

std::string kind_name(SequenceKind kind);
std::string method_name(BoundMethod method);

}  // namespace hermitian
