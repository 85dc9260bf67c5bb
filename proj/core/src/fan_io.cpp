#include "toricfan/fan_io.hpp"

#include <algorithm>
#include <set>

#include "json_support.hpp"

namespace toricfan {

using detail::Json;

namespace {

void reject_unknown(const Json& obj, const std::set<std::string>& allowed, const char* where) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) {
      throw Error(ErrorCode::Parse, "unknown field '" + key + "' in " + where);
    }
  }
}

}  // namespace

TopologicalFan parse_fan(std::string_view text) {
  const Json doc = detail::parse_json(text);
  if (!doc.is_object()) throw Error(ErrorCode::Parse, "fan document must be an object");
  reject_unknown(doc, {"version", "dimension", "rays", "maximal_simplices", "beta"}, "fan document");

  const Json& version = detail::require(doc, "version");
  if (!version.is_number_integer() || version.get<std::int64_t>() != kFanDocumentVersion) {
    throw Error(ErrorCode::Parse, "unsupported fan document version");
  }
  TopologicalFan fan;
  const auto dimension = detail::get_as<std::int64_t>(detail::require(doc, "dimension"), "dimension");
  const auto rays = detail::get_as<std::int64_t>(detail::require(doc, "rays"), "rays");
  if (dimension <= 0 || dimension > 64) throw Error(ErrorCode::Parse, "dimension out of range");
  fan.dimension = static_cast<int>(dimension);

  const Json& beta = detail::require(doc, "beta");
  if (!beta.is_array()) throw Error(ErrorCode::Parse, "field 'beta' must be an array");
  if (rays < 0 || static_cast<std::size_t>(rays) != beta.size()) {
    throw Error(ErrorCode::Parse, "field 'rays' must equal the number of beta records");
  }
  for (const Json& record : beta) {
    if (!record.is_object()) throw Error(ErrorCode::Parse, "beta records must be objects");
    reject_unknown(record, {"b", "c", "v"}, "beta record");
    fan.beta.push_back(Cocharacter{detail::parse_rat_vector(detail::require(record, "b"), "b"),
                                   detail::parse_rat_vector(detail::require(record, "c"), "c"),
                                   detail::parse_int_vector(detail::require(record, "v"), "v")});
  }

  const Json& simplices = detail::require(doc, "maximal_simplices");
  if (!simplices.is_array()) throw Error(ErrorCode::Parse, "field 'maximal_simplices' must be an array");
  for (const Json& s : simplices) {
    Simplex simplex = detail::parse_simplex(s);
    std::sort(simplex.begin(), simplex.end());
    if (std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end()) {
      throw Error(ErrorCode::Parse, "repeated ray inside a maximal simplex");
    }
    fan.maximal_simplices.push_back(std::move(simplex));
  }
  check_shape(fan);
  return fan;
}

std::string emit_fan(const TopologicalFan& fan) {
  Json doc;
  doc["version"] = kFanDocumentVersion;
  doc["dimension"] = fan.dimension;
  doc["rays"] = fan.ray_count();
  Json simplices = Json::array();
  for (const Simplex& s : fan.maximal_simplices) simplices.push_back(detail::simplex_json(s));
  doc["maximal_simplices"] = std::move(simplices);
  Json beta = Json::array();
  for (const Cocharacter& b : fan.beta) {
    beta.push_back(Json{{"b", detail::rat_vector_json(b.b)},
                        {"c", detail::rat_vector_json(b.c)},
                        {"v", detail::int_vector_json(b.v)}});
  }
  doc["beta"] = std::move(beta);
  return detail::dump_document(doc);
}

}  // namespace toricfan
