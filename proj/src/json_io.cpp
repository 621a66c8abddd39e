#include "multikostka/json_io.hpp"

#include <limits>
#include <string>
#include <type_traits>

#include "multikostka/error.hpp"

namespace multikostka {

namespace {

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be a JSON array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorKind::ParseError, std::string(what) + " must contain integers only");
    const auto v = x.get<long long>();
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
      throw Error(ErrorKind::ParseError, std::string(what) + " entry out of range");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace

void to_json(json& j, const Partition& p) { j = json(std::vector<int>(p.parts().begin(), p.parts().end())); }

void from_json(const json& j, Partition& p) { p = Partition::normalize(int_list(j, "partition")); }

void to_json(json& j, const Composition& c) { j = json(std::vector<int>(c.parts().begin(), c.parts().end())); }

void from_json(const json& j, Composition& c) { c = Composition(int_list(j, "composition")); }

void to_json(json& j, const Multipartition& m) {
  j = json::array();
  for (const auto& p : m.components()) j.push_back(p);
}

void from_json(const json& j, Multipartition& m) {
  if (!j.is_array()) throw Error(ErrorKind::ParseError, "multipartition must be an array of arrays");
  std::vector<Partition> parts;
  for (const auto& c : j) parts.push_back(c.get<Partition>());
  m = Multipartition(std::move(parts));
}

void to_json(json& j, const Tableau& t) { j = json{{"shape", t.shape}, {"rows", t.rows}}; }

void from_json(const json& j, Tableau& t) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("rows")) {
    throw Error(ErrorKind::ParseError, "tableau needs \"shape\" and \"rows\"");
  }
  t.shape = j.at("shape").get<Partition>();
  t.rows.clear();
  if (!j.at("rows").is_array()) throw Error(ErrorKind::ParseError, "tableau rows must be an array");
  for (const auto& row : j.at("rows")) t.rows.push_back(int_list(row, "tableau row"));
}

void to_json(json& j, const MultiTableau& t) { j = json{{"components", t.components}}; }

void from_json(const json& j, MultiTableau& t) {
  if (!j.is_object() || !j.contains("components") || !j.at("components").is_array()) {
    throw Error(ErrorKind::ParseError, "multitableau needs a \"components\" array");
  }
  t.components.clear();
  for (const auto& c : j.at("components")) t.components.push_back(c.get<Tableau>());
}

void to_json(json& j, const IndexCertificate& c) { j = json{{"indices", c.indices}}; }

void to_json(json& j, const Constituent& c) {
  j = json{{"label", c.label}, {"multiplicity", count_to_json(c.multiplicity)}};
}

void to_json(json& j, const WreathParams& p) { j = json{{"r", p.r}, {"d", p.d}, {"n", p.n}, {"mu", p.mu}}; }

void to_json(json& j, const ThetaEntry& e) { j = json{{"size", e.orbit_size}, {"partition", e.shape}}; }

void from_json(const json& j, ThetaEntry& e) {
  if (!j.is_object() || !j.contains("size") || !j.contains("partition") || !j.at("size").is_number_integer()) {
    throw Error(ErrorKind::ParseError, "Theta entry needs integer \"size\" and \"partition\"");
  }
  e.orbit_size = j.at("size").get<int>();
  e.shape = j.at("partition").get<Partition>();
}

json count_to_json(const BigCount& k) { return k.str(); }

BigCount count_from_json(const json& j) {
  if (!j.is_string()) throw Error(ErrorKind::ParseError, "count must be a decimal string");
  const auto s = j.get<std::string>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error(ErrorKind::ParseError, "count is not a decimal string: " + s);
  }
  return BigCount(s);
}

ThetaRequest theta_request_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries") || !j.contains("mu") || !j.at("entries").is_array()) {
    throw Error(ErrorKind::ParseError, "Theta input needs \"entries\" (array) and \"mu\"");
  }
  std::vector<ThetaEntry> entries;
  for (const auto& e : j.at("entries")) entries.push_back(e.get<ThetaEntry>());
  return {ThetaMultipartition(std::move(entries)), j.at("mu").get<Partition>()};
}

template <class T>
T parse_json_as(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  try {
    if constexpr (std::is_same_v<T, ThetaRequest>) {
      return theta_request_from_json(j);
    } else {
      return j.get<T>();
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

template Partition parse_json_as<Partition>(std::string_view);
template Composition parse_json_as<Composition>(std::string_view);
template Multipartition parse_json_as<Multipartition>(std::string_view);
template Tableau parse_json_as<Tableau>(std::string_view);
template MultiTableau parse_json_as<MultiTableau>(std::string_view);
template ThetaRequest parse_json_as<ThetaRequest>(std::string_view);

}  // namespace multikostka
