#pragma once

#include <string>

#include "hck/io.hpp"

namespace hck::io::detail {

inline const Json& field(const Json& j, const std::string& name) {
  if (!j.is_object()) throw InvalidInput("expected an object with field '" + name + "'");
  auto it = j.find(name);
  if (it == j.end()) throw InvalidInput("missing field '" + name + "'");
  return *it;
}

inline const Json& array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput("'" + what + "' must be an array");
  return j;
}

template <class T>
T as(const Json& j, const std::string& what) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InvalidInput("'" + what + "' has the wrong type");
  }
}

template <class T>
T get(const Json& j, const std::string& name) {
  return as<T>(field(j, name), name);
}

}  // namespace hck::io::detail
