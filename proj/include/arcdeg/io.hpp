#ifndef ARCDEG_IO_HPP
#define ARCDEG_IO_HPP

// JSON forms of diagrams, objects and moves.  Needs nlohmann/json on the
// include path (vendor/json.hpp).

#include <string>

#include "arcdeg/errors.hpp"
#include "arcdeg/moves.hpp"
#include "arcdeg/objects.hpp"
#include "json.hpp"

namespace arcdeg {

using json = nlohmann::json;

inline const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::B2:
      return "B2";
    case Kind::P2:
      return "P2";
    case Kind::P1:
      return "P1";
    case Kind::P0:
      return "P0";
  }
  return "?";
}

/// {"arcs": [[m, r], ...], "poles": [...], "loops": [...]}
inline json to_json(const ArcDiagram& d) {
  json arcs = json::array();
  for (const auto& arc : d.arcs()) arcs.push_back({arc.m, arc.r});
  return {{"arcs", arcs}, {"poles", d.poles()}, {"loops", d.loops()}};
}

inline ArcDiagram diagram_from_json(const json& j) {
  try {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    return ArcDiagram(std::move(arcs), j.at("poles").get<std::vector<int>>(),
                      j.at("loops").get<std::vector<int>>());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad diagram json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// {"summands": [{"kind": "B2", "m": 7, "r": 3}, ...]}; r only for B2.
inline json to_json(const S2Object& object) {
  json summands = json::array();
  for (const auto& x : object.summands()) {
    json entry = {{"kind", kind_name(x.kind)}, {"m", x.m}};
    if (x.kind == Kind::B2) entry["r"] = x.r;
    summands.push_back(std::move(entry));
  }
  return {{"summands", summands}};
}

inline S2Object object_from_json(const json& j) {
  try {
    std::vector<Indecomposable> summands;
    for (const auto& s : j.at("summands")) {
      const auto kind = s.at("kind").get<std::string>();
      const int m = s.at("m").get<int>();
      if (kind == "B2") {
        summands.push_back(Indecomposable::b2(m, s.at("r").get<int>()));
      } else if (kind == "P2") {
        summands.push_back(Indecomposable::p2(m));
      } else if (kind == "P1") {
        summands.push_back(Indecomposable::p1(m));
      } else if (kind == "P0") {
        summands.push_back(Indecomposable::p0(m));
      } else {
        throw ParseError("unknown summand kind " + kind);
      }
    }
    return S2Object(std::move(summands));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad object json: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// {"kind": "A", "points": [...]}; A′ is reported as kind "A'".
inline json to_json(const Move& move) {
  std::string kind(1, to_char(move.kind()));
  if (move.is_a_prime()) kind += '\'';
  return {{"kind", kind}, {"points", move.points()}};
}

}  // namespace arcdeg

#endif  // ARCDEG_IO_HPP
