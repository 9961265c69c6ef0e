#pragma once
// JSON serialization of lattice sets and functions.
//
//   {"kind":"function","dim":n,"window":{"lo":[..],"hi":[..]},
//    "values":[{"x":[..],"v":"p/q"}, {"x":[..],"v":"3"}, ...]}
//   {"kind":"set","dim":n,"points":[[..],[..],...]}
//
// Values are strings ("k" or reduced "p/q"); "inf" is rejected -- absence
// from "values" already means +infinity.  Round trips are bit exact.

#include <string>

#include "json.hpp"

#include "dca/function.hpp"

namespace dca {

struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {
inline Int json_to_int(const nlohmann::json& j) {
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<int64_t>()));
  throw io_error("coordinate must be a JSON integer");
}
inline int64_t int_to_json(const Int& v) {
  if (!v.fits_slong_p()) throw io_error("coordinate out of serializable range");
  return v.get_si();
}
inline Point json_to_point(const nlohmann::json& j, size_t dim) {
  if (!j.is_array() || j.size() != dim)
    throw io_error("point must be an array of length dim");
  Point p(dim);
  for (size_t i = 0; i < dim; ++i) p[i] = json_to_int(j[i]);
  return p;
}
inline nlohmann::json point_to_json(const Point& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const Int& c : p) a.push_back(int_to_json(c));
  return a;
}
inline size_t json_dim(const nlohmann::json& j) {
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw io_error("missing integer field \"dim\"");
  int64_t d = j["dim"].get<int64_t>();
  if (d < 1 || d > 16) throw io_error("dim out of range [1,16]");
  return static_cast<size_t>(d);
}
}  // namespace detail

inline nlohmann::json to_json(const LatticeSet& s) {
  nlohmann::json j;
  j["kind"] = "set";
  j["dim"] = s.dim;
  nlohmann::json pts = nlohmann::json::array();
  for (const Point& p : s.points) pts.push_back(detail::point_to_json(p));
  j["points"] = pts;
  return j;
}

inline nlohmann::json to_json(const LatticeFunction& f) {
  nlohmann::json j;
  j["kind"] = "function";
  j["dim"] = f.dim;
  j["window"] = {{"lo", detail::point_to_json(f.window.lo)},
                 {"hi", detail::point_to_json(f.window.hi)}};
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& [x, v] : f.values)
    vals.push_back({{"x", detail::point_to_json(x)},
                    {"v", rational_to_string(v)}});
  j["values"] = vals;
  return j;
}

inline LatticeSet set_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("kind", "") != "set")
    throw io_error("expected object with kind \"set\"");
  size_t dim = detail::json_dim(j);
  if (!j.contains("points") || !j["points"].is_array())
    throw io_error("missing array field \"points\"");
  std::set<Point> pts;
  for (const auto& pj : j["points"]) {
    Point p = detail::json_to_point(pj, dim);
    if (!pts.insert(p).second) throw io_error("duplicate point in set");
  }
  return LatticeSet(dim, std::move(pts));
}

inline LatticeFunction function_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("kind", "") != "function")
    throw io_error("expected object with kind \"function\"");
  size_t dim = detail::json_dim(j);
  if (!j.contains("window") || !j["window"].is_object())
    throw io_error("missing object field \"window\"");
  Window w(detail::json_to_point(j["window"].at("lo"), dim),
           detail::json_to_point(j["window"].at("hi"), dim));
  if (!j.contains("values") || !j["values"].is_array())
    throw io_error("missing array field \"values\"");
  std::map<Point, Rat> vals;
  for (const auto& e : j["values"]) {
    if (!e.is_object() || !e.contains("x") || !e.contains("v"))
      throw io_error("value entry needs \"x\" and \"v\"");
    Point x = detail::json_to_point(e["x"], dim);
    if (!e["v"].is_string())
      throw io_error("value must be a string rational");
    std::string vs = e["v"].get<std::string>();
    if (vs == "inf" || vs == "+inf" || vs == "-inf")
      throw io_error("\"inf\" is not a storable value; omit the point");
    Rat v;
    try {
      v = parse_rational(vs);
    } catch (const value_error& ex) {
      throw io_error(std::string("bad rational: ") + ex.what());
    }
    if (!vals.emplace(std::move(x), std::move(v)).second)
      throw io_error("duplicate domain point in function");
  }
  try {
    return LatticeFunction(dim, std::move(w), std::move(vals));
  } catch (const model_error& ex) {
    throw io_error(ex.what());
  }
}

inline nlohmann::json parse_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw io_error("malformed JSON");
  return j;
}

}  // namespace dca
