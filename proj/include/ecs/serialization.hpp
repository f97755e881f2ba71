#pragma once

#include <json.hpp>

#include <cstdio>
#include <string>

#include "ecs/rational.hpp"

// Canonical JSON rendering: keys in sorted order (nlohmann's default map),
// floats printed with 17 significant digits so parse -> dump is byte-stable.

namespace ecs {

using Json = nlohmann::json;

/// Exact value plus a float rendering, the standard record for rationals.
inline Json rational_record(const Rational& r) {
  return Json{{"exact", to_string(r)}, {"float", to_double(r)}};
}

namespace detail {
inline void dump_canonical_rec(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += Json(it.key()).dump();
        out += ':';
        dump_canonical_rec(it.value(), out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        dump_canonical_rec(v, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", j.get<double>());
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}
}  // namespace detail

/// Deterministic compact serialization; re-parsing and re-dumping the result
/// reproduces it byte for byte.
inline std::string dump_canonical(const Json& j) {
  std::string out;
  detail::dump_canonical_rec(j, out);
  return out;
}

}  // namespace ecs
