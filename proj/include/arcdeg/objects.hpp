#ifndef ARCDEG_OBJECTS_HPP
#define ARCDEG_OBJECTS_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arcdeg/errors.hpp"
#include "arcdeg/partition.hpp"

namespace arcdeg {

/*
 * Indecomposable objects of S₂: pickets P₀(m), P₁(m), P₂(m) (P₂ needs m ≥ 2)
 * and bipickets B₂(m,r) with 1 ≤ r ≤ m−2.  The enumerator order is the
 * canonical summand order (B2 first, P0 last).
 */
enum class Kind : std::uint8_t { B2 = 0, P2 = 1, P1 = 2, P0 = 3 };

struct Indecomposable {
  Kind kind = Kind::P0;
  int m = 1;
  int r = 0;  // only meaningful for B2

  static Indecomposable p0(int m) { return make(Kind::P0, m, 0); }
  static Indecomposable p1(int m) { return make(Kind::P1, m, 0); }
  static Indecomposable p2(int m) { return make(Kind::P2, m, 0); }
  static Indecomposable b2(int m, int r) { return make(Kind::B2, m, r); }

  static Indecomposable make(Kind kind, int m, int r) {
    if (m < 1) throw std::invalid_argument("summand parameter must be >= 1");
    if (kind == Kind::P2 && m < 2) {
      throw std::invalid_argument("P2(m) requires m >= 2");
    }
    if (kind == Kind::B2 && (r < 1 || r > m - 2)) {
      throw std::invalid_argument("B2(m,r) requires 1 <= r <= m-2");
    }
    return Indecomposable{kind, m, kind == Kind::B2 ? r : 0};
  }

  bool operator==(const Indecomposable&) const = default;
};

/// Canonical order: by kind, then descending (m,r).
inline bool canonical_before(const Indecomposable& a, const Indecomposable& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.m != b.m) return a.m > b.m;
  return a.r > b.r;
}

inline std::string to_string(const Indecomposable& x) {
  switch (x.kind) {
    case Kind::B2:
      return "B(" + std::to_string(x.m) + "," + std::to_string(x.r) + ")";
    case Kind::P2:
      return "P2(" + std::to_string(x.m) + ")";
    case Kind::P1:
      return "P1(" + std::to_string(x.m) + ")";
    case Kind::P0:
      return "P0(" + std::to_string(x.m) + ")";
  }
  return {};
}

/// An isomorphism class in S₂: a multiset of indecomposables kept sorted.
class S2Object {
 public:
  S2Object() = default;
  explicit S2Object(std::vector<Indecomposable> summands)
      : summands_(std::move(summands)) {
    std::ranges::sort(summands_, canonical_before);
  }
  S2Object(std::initializer_list<Indecomposable> summands)
      : S2Object(std::vector<Indecomposable>(summands)) {}

  const std::vector<Indecomposable>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }
  std::size_t size() const { return summands_.size(); }

  int multiplicity(const Indecomposable& x) const {
    return static_cast<int>(std::ranges::count(summands_, x));
  }

  S2Object operator+(const S2Object& other) const {
    auto all = summands_;
    all.insert(all.end(), other.summands_.begin(), other.summands_.end());
    return S2Object(std::move(all));
  }

  bool operator==(const S2Object&) const = default;
  bool operator<(const S2Object& other) const {
    return std::ranges::lexicographical_compare(summands_, other.summands_,
                                                canonical_before);
  }

 private:
  std::vector<Indecomposable> summands_;
};

/// `B(7,3)+P2(5)+P0(4)`; the empty object prints as `0`.
inline std::string to_string(const S2Object& object) {
  if (object.empty()) return "0";
  std::string out;
  for (const auto& x : object.summands()) {
    if (!out.empty()) out += '+';
    out += to_string(x);
  }
  return out;
}

inline S2Object parse_object(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty() || s == "0") return {};
  static const std::regex summand_re(
      R"((B2?|P0|P1|P2)\((\d+)(?:,(\d+))?\))");
  std::vector<Indecomposable> summands;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto next = s.find('+', pos);
    std::string token =
        s.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    std::smatch match;
    if (!std::regex_match(token, match, summand_re)) {
      throw ParseError("bad summand '" + token + "'");
    }
    const std::string name = match[1];
    const int m = std::stoi(match[2]);
    const bool has_r = match[3].matched;
    try {
      if (name == "B" || name == "B2") {
        if (!has_r) throw ParseError("bipicket needs two parameters: " + token);
        summands.push_back(Indecomposable::b2(m, std::stoi(match[3])));
      } else {
        if (has_r) throw ParseError("picket takes one parameter: " + token);
        Kind kind = name == "P0" ? Kind::P0 : name == "P1" ? Kind::P1 : Kind::P2;
        summands.push_back(Indecomposable::make(kind, m, 0));
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string(e.what()) + ": " + token);
    }
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return S2Object(std::move(summands));
}

/// (β, γ): ambient and cokernel Jordan types.
struct ObjectType {
  Partition beta;
  Partition gamma;
  bool operator==(const ObjectType&) const = default;
};

inline ObjectType object_type(const S2Object& object) {
  std::vector<int> beta;
  std::vector<int> gamma;
  for (const auto& x : object.summands()) {
    beta.push_back(x.m);
    switch (x.kind) {
      case Kind::P0:
        gamma.push_back(x.m);
        break;
      case Kind::P1:
        gamma.push_back(x.m - 1);
        break;
      case Kind::P2:
        gamma.push_back(x.m - 2);
        break;
      case Kind::B2:
        beta.push_back(x.r);
        gamma.push_back(x.m - 1);
        gamma.push_back(x.r - 1);
        break;
    }
  }
  return {Partition(std::move(beta)), Partition(std::move(gamma))};
}

/// Jordan type of the subspace: a 2 per P2/B2 summand, a 1 per P1.
inline Partition alpha_of(const S2Object& object) {
  std::vector<int> parts;
  for (const auto& x : object.summands()) {
    if (x.kind == Kind::P2 || x.kind == Kind::B2) parts.push_back(2);
    if (x.kind == Kind::P1) parts.push_back(1);
  }
  return Partition(std::move(parts));
}

struct Arc {
  int m = 2;  // left (larger) end point
  int r = 1;
  auto operator<=>(const Arc&) const = default;
};

/*
 * Arcs, poles and loops on the points 1, 2, 3, …  Each multiset is kept
 * sorted descending so that structural equality is diagram equality.
 * An arc (m, m−1) stands for the pair P₂(m) ⊕ P₀(m−1).
 */
class ArcDiagram {
 public:
  ArcDiagram() = default;
  ArcDiagram(std::vector<Arc> arcs, std::vector<int> poles,
             std::vector<int> loops)
      : arcs_(std::move(arcs)), poles_(std::move(poles)), loops_(std::move(loops)) {
    for (const auto& a : arcs_) {
      if (a.r < 1 || a.m <= a.r) {
        throw std::invalid_argument("arc requires m > r >= 1");
      }
    }
    for (int p : poles_) {
      if (p < 1) throw std::invalid_argument("pole at non-positive point");
    }
    for (int l : loops_) {
      if (l < 2) throw std::invalid_argument("loop requires point >= 2");
    }
    normalize();
  }

  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& poles() const { return poles_; }
  const std::vector<int>& loops() const { return loops_; }
  bool empty() const { return arcs_.empty() && poles_.empty() && loops_.empty(); }

  auto operator<=>(const ArcDiagram&) const = default;

 private:
  void normalize() {
    std::ranges::sort(arcs_, std::greater<>{});
    std::ranges::sort(poles_, std::greater<>{});
    std::ranges::sort(loops_, std::greater<>{});
  }

  std::vector<Arc> arcs_;
  std::vector<int> poles_;
  std::vector<int> loops_;
};

/// `arcs:7-3,6-2; poles:1; loops:`
inline std::string to_string(const ArcDiagram& d) {
  std::string out = "arcs:";
  for (std::size_t i = 0; i < d.arcs().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(d.arcs()[i].m) + "-" + std::to_string(d.arcs()[i].r);
  }
  auto points = [&out](const char* name, const std::vector<int>& v) {
    out += "; ";
    out += name;
    out += ':';
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(v[i]);
    }
  };
  points("poles", d.poles());
  points("loops", d.loops());
  return out;
}

inline ArcDiagram parse_diagram(std::string_view text) {
  std::vector<Arc> arcs;
  std::vector<int> poles;
  std::vector<int> loops;
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto to_int = [](const std::string& token) {
    if (token.empty() ||
        !std::ranges::all_of(token, [](unsigned char c) { return std::isdigit(c); })) {
      throw ParseError("bad point '" + token + "'");
    }
    return std::stoi(token);
  };
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto end = s.find(';', pos);
    std::string group = s.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
    pos = end == std::string::npos ? s.size() : end + 1;
    if (group.empty()) continue;
    auto colon = group.find(':');
    if (colon == std::string::npos) throw ParseError("missing ':' in '" + group + "'");
    const std::string name = group.substr(0, colon);
    const std::string body = group.substr(colon + 1);
    std::vector<std::string> items;
    std::size_t p = 0;
    while (p < body.size()) {
      auto comma = body.find(',', p);
      items.push_back(body.substr(p, comma == std::string::npos ? std::string::npos : comma - p));
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    for (const auto& item : items) {
      if (name == "arcs") {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw ParseError("bad arc '" + item + "'");
        arcs.push_back(Arc{to_int(item.substr(0, dash)), to_int(item.substr(dash + 1))});
      } else if (name == "poles") {
        poles.push_back(to_int(item));
      } else if (name == "loops") {
        loops.push_back(to_int(item));
      } else {
        throw ParseError("unknown diagram group '" + name + "'");
      }
    }
  }
  try {
    return ArcDiagram(std::move(arcs), std::move(poles), std::move(loops));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// Object for a single arc: B₂(m,r), or P₂(m) ⊕ P₀(m−1) when r = m−1.
inline S2Object arc_object(int m, int r) {
  if (r == m - 1) return S2Object{Indecomposable::p2(m), Indecomposable::p0(m - 1)};
  return S2Object{Indecomposable::b2(m, r)};
}

/*
 * Δ(O).  Each P₂(m) is paired with a P₀(m−1) while both remain; such a pair
 * is drawn as the arc (m, m−1).  Unpaired P₂'s become loops; P₀'s are
 * invisible.
 */
inline ArcDiagram diagram_of_object(const S2Object& object) {
  std::vector<Arc> arcs;
  std::vector<int> poles;
  std::vector<int> loops;
  std::map<int, int> free_p0;
  for (const auto& x : object.summands()) {
    if (x.kind == Kind::P0) ++free_p0[x.m];
  }
  for (const auto& x : object.summands()) {
    switch (x.kind) {
      case Kind::B2:
        arcs.push_back({x.m, x.r});
        break;
      case Kind::P1:
        poles.push_back(x.m);
        break;
      case Kind::P2: {
        auto it = free_p0.find(x.m - 1);
        if (it != free_p0.end() && it->second > 0) {
          --it->second;
          arcs.push_back({x.m, x.m - 1});
        } else {
          loops.push_back(x.m);
        }
        break;
      }
      case Kind::P0:
        break;
    }
  }
  return ArcDiagram(std::move(arcs), std::move(poles), std::move(loops));
}

/*
 * Inverse of diagram_of_object for a fixed type (β,γ).  Unused β parts
 * become P₀ summands.  Diagrams that do not arise from an object of this
 * type are rejected.
 */
inline S2Object object_of_diagram(const ArcDiagram& diagram, const Partition& beta,
                                  const Partition& gamma) {
  std::vector<Indecomposable> summands;
  std::map<int, int> remaining;
  for (int p : beta.parts()) ++remaining[p];
  auto take = [&remaining](int part) {
    auto it = remaining.find(part);
    if (it == remaining.end() || it->second == 0) {
      throw InconsistentDiagram("no beta part " + std::to_string(part) +
                                " left for the diagram");
    }
    --it->second;
  };
  for (const auto& arc : diagram.arcs()) {
    take(arc.m);
    take(arc.r);
    const S2Object piece = arc_object(arc.m, arc.r);
    summands.insert(summands.end(), piece.summands().begin(), piece.summands().end());
  }
  for (int p : diagram.poles()) {
    take(p);
    summands.push_back(Indecomposable::p1(p));
  }
  for (int l : diagram.loops()) {
    take(l);
    summands.push_back(Indecomposable::p2(l));
  }
  for (const auto& [part, count] : remaining) {
    for (int i = 0; i < count; ++i) summands.push_back(Indecomposable::p0(part));
  }
  S2Object object(std::move(summands));
  if (object_type(object).gamma != gamma) {
    throw InconsistentDiagram("diagram " + to_string(diagram) +
                              " does not have cokernel type " + to_string(gamma));
  }
  if (diagram_of_object(object) != diagram) {
    throw InconsistentDiagram("diagram " + to_string(diagram) +
                              " is not the diagram of any object of this type");
  }
  return object;
}

/*
 * x(Δ): pairs of arcs that interleave strictly (m > m' > r > r') plus
 * (arc, pole) pairs with the pole strictly inside the arc.  Shared end
 * points, nesting and loops contribute nothing.
 */
inline std::int64_t crossings(const ArcDiagram& d) {
  std::int64_t count = 0;
  const auto& arcs = d.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      Arc a = arcs[i];
      Arc b = arcs[j];
      if (a.m < b.m) std::swap(a, b);
      if (a.m > b.m && b.m > a.r && a.r > b.r) ++count;
    }
    for (int s : d.poles()) {
      if (arcs[i].m > s && s > arcs[i].r) ++count;
    }
  }
  return count;
}

/*
 * All objects of type (β,γ) in canonical order.  The largest unused β part
 * is assigned to a summand in which it is the largest parameter; choices
 * for equal parts are kept non-increasing in canonical order so that each
 * multiset is produced once.
 */
inline std::vector<S2Object> enumerate_objects(const Partition& beta,
                                               const Partition& gamma) {
  std::vector<S2Object> out;
  if (!contains(beta, gamma)) return out;

  std::map<int, int, std::greater<>> beta_left;
  for (int p : beta.parts()) ++beta_left[p];
  std::map<int, int> gamma_left;
  for (int p : gamma.parts()) ++gamma_left[p];
  std::vector<Indecomposable> chosen;

  auto take_gamma = [&gamma_left](int part) {
    if (part == 0) return true;
    auto it = gamma_left.find(part);
    if (it == gamma_left.end() || it->second == 0) return false;
    --it->second;
    return true;
  };
  auto give_gamma = [&gamma_left](int part) {
    if (part != 0) ++gamma_left[part];
  };

  std::function<void()> rec = [&]() {
    auto top = std::ranges::find_if(beta_left, [](auto& kv) { return kv.second > 0; });
    if (top == beta_left.end()) {
      if (std::ranges::all_of(gamma_left, [](auto& kv) { return kv.second == 0; })) {
        out.emplace_back(chosen);
      }
      return;
    }
    const int m = top->first;
    --top->second;

    std::vector<Indecomposable> options;
    for (auto& [r, count] : beta_left) {
      if (count > 0 && r <= m - 2) options.push_back(Indecomposable::b2(m, r));
    }
    if (m >= 2) options.push_back(Indecomposable::p2(m));
    options.push_back(Indecomposable::p1(m));
    options.push_back(Indecomposable::p0(m));

    for (const auto& x : options) {
      if (!chosen.empty() && chosen.back().m == m && canonical_before(x, chosen.back())) {
        continue;
      }
      std::vector<int> needs;
      switch (x.kind) {
        case Kind::B2:
          needs = {m - 1, x.r - 1};
          break;
        case Kind::P2:
          needs = {m - 2};
          break;
        case Kind::P1:
          needs = {m - 1};
          break;
        case Kind::P0:
          needs = {m};
          break;
      }
      std::vector<int> taken;
      bool ok = true;
      for (int g : needs) {
        if (!take_gamma(g)) {
          ok = false;
          break;
        }
        taken.push_back(g);
      }
      if (ok) {
        if (x.kind == Kind::B2) --beta_left[x.r];
        chosen.push_back(x);
        rec();
        chosen.pop_back();
        if (x.kind == Kind::B2) ++beta_left[x.r];
      }
      for (int g : taken) give_gamma(g);
    }
    ++top->second;
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace arcdeg

#endif  // ARCDEG_OBJECTS_HPP
