#pragma once

#include <string_view>

#include <json.hpp>

#include "multikostka/counting.hpp"
#include "multikostka/ggg.hpp"
#include "multikostka/partition.hpp"
#include "multikostka/tableau.hpp"
#include "multikostka/wreath.hpp"

// JSON forms:
//   Partition        [4,3,1]          (empty partition: [])
//   Multipartition   [[2,1,1],[2,2],[4]]
//   Tableau          {"shape":[...],"rows":[[...],...]}
//   MultiTableau     {"components":[tableau,...]}
//   BigCount         "12345"          (decimal string)
//   IndexCertificate {"indices":[...]}
//   Constituent      {"label":[[...],...],"multiplicity":"k"}
//   Theta input      {"entries":[{"size":2,"partition":[1]},...],"mu":[5,5]}

namespace multikostka {

using json = nlohmann::json;

void to_json(json& j, const Partition& p);
void from_json(const json& j, Partition& p);
void to_json(json& j, const Composition& c);
void from_json(const json& j, Composition& c);
void to_json(json& j, const Multipartition& m);
void from_json(const json& j, Multipartition& m);
void to_json(json& j, const Tableau& t);
void from_json(const json& j, Tableau& t);
void to_json(json& j, const MultiTableau& t);
void from_json(const json& j, MultiTableau& t);
void to_json(json& j, const IndexCertificate& c);
void to_json(json& j, const Constituent& c);
void to_json(json& j, const WreathParams& p);
void to_json(json& j, const ThetaEntry& e);
void from_json(const json& j, ThetaEntry& e);

json count_to_json(const BigCount& k);
BigCount count_from_json(const json& j);

struct ThetaRequest {
  ThetaMultipartition lambda;
  Partition mu;
};

ThetaRequest theta_request_from_json(const json& j);

/// Parses text and converts; every failure is rethrown as Error{ParseError},
/// except domain errors raised by the target type's own validation.
template <class T>
T parse_json_as(std::string_view text);

}  // namespace multikostka
