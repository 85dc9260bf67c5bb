#pragma once

#include <json.hpp>

#include <string>
#include <string_view>

#include "toricfan/endo.hpp"
#include "toricfan/error.hpp"
#include "toricfan/exact.hpp"
#include "toricfan/fan.hpp"

namespace toricfan::detail {

using Json = nlohmann::ordered_json;

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

inline const Json& require(const Json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key)) throw Error(ErrorCode::Parse, std::string("missing field '") + key + "'");
  return obj.at(key);
}

template <typename T>
T get_as(const Json& value, const char* what) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw Error(ErrorCode::Parse, std::string("field '") + what + "' has the wrong type");
  }
}

inline Json rat_vector_json(const RatVector& v) {
  Json out = Json::array();
  for (const Rational& q : v) out.push_back(to_string(q));
  return out;
}

inline RatVector parse_rat_vector(const Json& value, const char* what) {
  if (!value.is_array()) throw Error(ErrorCode::Parse, std::string("field '") + what + "' must be an array");
  RatVector out;
  for (const Json& item : value) {
    if (!item.is_string()) throw Error(ErrorCode::Parse, std::string("field '") + what + "' must hold rational strings");
    out.push_back(parse_rational(item.get<std::string>()));
  }
  return out;
}

inline Json int_vector_json(const IntVector& v) {
  Json out = Json::array();
  for (const Integer& z : v) {
    if (z.fits_slong_p()) {
      out.push_back(z.get_si());
    } else {
      out.push_back(to_string(z));
    }
  }
  return out;
}

inline IntVector parse_int_vector(const Json& value, const char* what) {
  if (!value.is_array()) throw Error(ErrorCode::Parse, std::string("field '") + what + "' must be an array");
  IntVector out;
  for (const Json& item : value) {
    if (item.is_number_integer()) {
      out.emplace_back(static_cast<long>(item.get<std::int64_t>()));
    } else if (item.is_string()) {
      out.push_back(parse_integer(item.get<std::string>()));
    } else {
      throw Error(ErrorCode::Parse, std::string("field '") + what + "' must hold integers");
    }
  }
  return out;
}

inline Json simplex_json(const Simplex& s) {
  Json out = Json::array();
  for (int i : s) out.push_back(i + 1);
  return out;
}

inline Simplex parse_simplex(const Json& value) {
  if (!value.is_array()) throw Error(ErrorCode::Parse, "simplex must be an array");
  Simplex out;
  for (const Json& item : value) {
    if (!item.is_number_integer()) throw Error(ErrorCode::Parse, "simplex entries must be integers");
    const auto index = item.get<std::int64_t>();
    if (index < 1) throw Error(ErrorCode::Parse, "ray indices are 1-based");
    out.push_back(static_cast<int>(index - 1));
  }
  return out;
}

namespace json_detail {

inline bool is_flat_array(const Json& value) {
  if (!value.is_array()) return false;
  for (const Json& item : value) {
    if (item.is_structured()) return false;
  }
  return true;
}

inline void write(const Json& value, std::size_t indent, std::string& out) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (is_flat_array(value)) {
    out += "[";
    bool first = true;
    for (const Json& item : value) {
      out += first ? "" : ", ";
      out += item.dump();
      first = false;
    }
    out += "]";
  } else if (value.is_array()) {
    out += "[\n";
    bool first = true;
    for (const Json& item : value) {
      out += first ? "" : ",\n";
      out += inner;
      write(item, indent + 2, out);
      first = false;
    }
    out += "\n" + pad + "]";
  } else if (value.is_object() && !value.empty()) {
    out += "{\n";
    bool first = true;
    for (const auto& [key, item] : value.items()) {
      out += first ? "" : ",\n";
      out += inner + Json(key).dump() + ": ";
      write(item, indent + 2, out);
      first = false;
    }
    out += "\n" + pad + "}";
  } else {
    out += value.dump();
  }
}

}  // namespace json_detail

/// Two-space indentation, with arrays of scalars kept on one line.
inline std::string dump_document(const Json& doc) {
  std::string out;
  json_detail::write(doc, 0, out);
  return out + "\n";
}

inline Json endo_json(const EndoParam& p) {
  return Json{{"re", to_string(p.re)}, {"im", to_string(p.im)}, {"w", to_string(p.w)}};
}

}  // namespace toricfan::detail
