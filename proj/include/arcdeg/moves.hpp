#ifndef ARCDEG_MOVES_HPP
#define ARCDEG_MOVES_HPP

#include <algorithm>
#include <compare>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arcdeg/errors.hpp"
#include "arcdeg/objects.hpp"

namespace arcdeg {

enum class MoveKind : std::uint8_t { A = 0, B = 1, C = 2, D = 3, E = 4 };

inline char to_char(MoveKind kind) { return static_cast<char>('A' + static_cast<int>(kind)); }

/*
 * A down-move on arc diagrams (from the larger diagram to the smaller one).
 * Point parameters, all strictly decreasing:
 *   A, C: (m, n, r, s)   crossing arcs (m,r), (n,s)
 *   B, D: (m, r, s)      arc (m,s) with a pole at r inside
 *   E:    (m, r)         poles at m and r
 * A with n = r+1 is reported as A′; the diagram action is the same.
 */
class Move {
 public:
  Move(MoveKind kind, std::vector<int> points) : kind_(kind), points_(std::move(points)) {
    const std::size_t expected = kind == MoveKind::E ? 2
                                 : (kind == MoveKind::B || kind == MoveKind::D) ? 3
                                                                                : 4;
    if (points_.size() != expected) {
      throw std::invalid_argument(std::string("move ") + to_char(kind) + " needs " +
                                  std::to_string(expected) + " points");
    }
    for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
      if (points_[i] <= points_[i + 1]) {
        throw std::invalid_argument("move points must be strictly decreasing");
      }
    }
    if (points_.back() < 1) throw std::invalid_argument("move points must be >= 1");
  }

  static Move a(int m, int n, int r, int s) { return Move(MoveKind::A, {m, n, r, s}); }
  static Move b(int m, int r, int s) { return Move(MoveKind::B, {m, r, s}); }
  static Move c(int m, int n, int r, int s) { return Move(MoveKind::C, {m, n, r, s}); }
  static Move d(int m, int r, int s) { return Move(MoveKind::D, {m, r, s}); }
  static Move e(int m, int r) { return Move(MoveKind::E, {m, r}); }

  MoveKind kind() const { return kind_; }
  const std::vector<int>& points() const { return points_; }
  int point(std::size_t i) const { return points_.at(i); }

  bool is_a_prime() const { return kind_ == MoveKind::A && points_[1] == points_[2] + 1; }

  auto operator<=>(const Move&) const = default;

 private:
  MoveKind kind_;
  std::vector<int> points_;
};

inline std::string to_string(const Move& move) {
  std::string out(1, to_char(move.kind()));
  if (move.is_a_prime()) out += '\'';
  out += '(';
  for (std::size_t i = 0; i < move.points().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(move.points()[i]);
  }
  return out + ')';
}

namespace detail {

struct MoveEffect {
  std::vector<Arc> arcs_removed;
  std::vector<int> poles_removed;
  std::vector<Arc> arcs_added;
  std::vector<int> poles_added;
};

inline MoveEffect effect_of(const Move& mv) {
  const auto& p = mv.points();
  switch (mv.kind()) {
    case MoveKind::A:
      return {{{p[0], p[2]}, {p[1], p[3]}}, {}, {{p[0], p[3]}, {p[1], p[2]}}, {}};
    case MoveKind::B:
      return {{{p[0], p[2]}}, {p[1]}, {{p[0], p[1]}}, {p[2]}};
    case MoveKind::C:
      return {{{p[0], p[2]}, {p[1], p[3]}}, {}, {{p[0], p[1]}, {p[2], p[3]}}, {}};
    case MoveKind::D:
      return {{{p[0], p[2]}}, {p[1]}, {{p[1], p[2]}}, {p[0]}};
    case MoveKind::E:
      return {{}, {p[0], p[1]}, {{p[0], p[1]}}, {}};
  }
  return {};
}

template <typename T>
bool remove_one(std::vector<T>& v, const T& value) {
  auto it = std::ranges::find(v, value);
  if (it == v.end()) return false;
  v.erase(it);
  return true;
}

}  // namespace detail

/// Rewrites Δ by a down-move; throws MoveNotApplicable if an element is missing.
inline ArcDiagram apply_down(const ArcDiagram& diagram, const Move& move) {
  auto arcs = diagram.arcs();
  auto poles = diagram.poles();
  const auto effect = detail::effect_of(move);
  for (const auto& arc : effect.arcs_removed) {
    if (!detail::remove_one(arcs, arc)) {
      throw MoveNotApplicable(to_string(move) + " needs arc " + std::to_string(arc.m) + "-" +
                              std::to_string(arc.r) + " in " + to_string(diagram));
    }
  }
  for (int pole : effect.poles_removed) {
    if (!detail::remove_one(poles, pole)) {
      throw MoveNotApplicable(to_string(move) + " needs a pole at " + std::to_string(pole) +
                              " in " + to_string(diagram));
    }
  }
  arcs.insert(arcs.end(), effect.arcs_added.begin(), effect.arcs_added.end());
  poles.insert(poles.end(), effect.poles_added.begin(), effect.poles_added.end());
  return ArcDiagram(std::move(arcs), std::move(poles), diagram.loops());
}

/// Inverse of apply_down.
inline ArcDiagram apply_up(const ArcDiagram& diagram, const Move& move) {
  auto arcs = diagram.arcs();
  auto poles = diagram.poles();
  const auto effect = detail::effect_of(move);
  for (const auto& arc : effect.arcs_added) {
    if (!detail::remove_one(arcs, arc)) throw MoveNotApplicable("up " + to_string(move));
  }
  for (int pole : effect.poles_added) {
    if (!detail::remove_one(poles, pole)) throw MoveNotApplicable("up " + to_string(move));
  }
  arcs.insert(arcs.end(), effect.arcs_removed.begin(), effect.arcs_removed.end());
  poles.insert(poles.end(), effect.poles_removed.begin(), effect.poles_removed.end());
  return ArcDiagram(std::move(arcs), std::move(poles), diagram.loops());
}

/// Every move applicable to Δ, in canonical order (kind, then points ascending).
inline std::vector<Move> applicable_moves(const ArcDiagram& diagram) {
  std::set<Move> moves;
  const auto& arcs = diagram.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = 0; j < arcs.size(); ++j) {
      if (i == j) continue;
      const Arc& outer = arcs[i];  // (m, r)
      const Arc& inner = arcs[j];  // (n, s)
      if (outer.m > inner.m && inner.m > outer.r && outer.r > inner.r) {
        moves.insert(Move::a(outer.m, inner.m, outer.r, inner.r));
        moves.insert(Move::c(outer.m, inner.m, outer.r, inner.r));
      }
    }
    for (int pole : diagram.poles()) {
      if (arcs[i].m > pole && pole > arcs[i].r) {
        moves.insert(Move::b(arcs[i].m, pole, arcs[i].r));
        moves.insert(Move::d(arcs[i].m, pole, arcs[i].r));
      }
    }
  }
  const auto& poles = diagram.poles();
  for (std::size_t i = 0; i < poles.size(); ++i) {
    for (std::size_t j = 0; j < poles.size(); ++j) {
      if (poles[i] > poles[j]) moves.insert(Move::e(poles[i], poles[j]));
    }
  }
  return {moves.begin(), moves.end()};
}

struct DownStep {
  Move move;
  ArcDiagram result;
};

inline std::vector<DownStep> down_moves(const ArcDiagram& diagram) {
  std::vector<DownStep> out;
  for (const auto& mv : applicable_moves(diagram)) {
    out.push_back({mv, apply_down(diagram, mv)});
  }
  return out;
}

/// The short exact sequence 0 → start → middle → end → 0 realizing a move.
struct SesWitness {
  S2Object start;
  S2Object middle;
  S2Object end;
};

/*
 * Ends are the summands the move removes from the larger side, the middle
 * the summands it creates.  Arcs (m, m−1) expand to P₂(m) ⊕ P₀(m−1), which
 * gives the A′ middle term automatically.
 */
inline SesWitness ses_witness(const Move& mv) {
  const auto& p = mv.points();
  const auto pole = [](int x) { return S2Object{Indecomposable::p1(x)}; };
  switch (mv.kind()) {
    case MoveKind::A:  // m n r s
      return {arc_object(p[1], p[3]), arc_object(p[0], p[3]) + arc_object(p[1], p[2]),
              arc_object(p[0], p[2])};
    case MoveKind::B:  // m r s
      return {arc_object(p[0], p[2]), arc_object(p[0], p[1]) + pole(p[2]), pole(p[1])};
    case MoveKind::C:
      return {arc_object(p[0], p[2]), arc_object(p[0], p[1]) + arc_object(p[2], p[3]),
              arc_object(p[1], p[3])};
    case MoveKind::D:
      return {pole(p[1]), pole(p[0]) + arc_object(p[1], p[2]), arc_object(p[0], p[2])};
    case MoveKind::E:
      return {pole(p[0]), arc_object(p[0], p[1]), pole(p[1])};
  }
  return {};
}

/*
 * Indicator of the indecomposables X with δH_X = 1 for a pair (Y′, Z′)
 * that differs by the move alone; δH vanishes everywhere else.
 */
inline bool in_region(const Move& mv, const Indecomposable& x) {
  if (x.kind == Kind::P0 || x.kind == Kind::P2) return false;
  const bool pole = x.kind == Kind::P1;
  const int l = x.m;
  const int t = x.r;
  const auto& p = mv.points();
  switch (mv.kind()) {
    case MoveKind::A: {
      const int m = p[0], n = p[1], r = p[2], s = p[3];
      return !pole && n < l && l <= m && s < t && t <= r;
    }
    case MoveKind::B: {
      const int m = p[0], r = p[1], s = p[2];
      if (pole) return s < l && l <= r;
      return l > m && s < t && t <= r;
    }
    case MoveKind::C: {
      const int m = p[0], n = p[1], r = p[2], s = p[3];
      if (pole) return r < l && l <= n;
      return (l > m && r < t && t <= n) || (r < l && l <= n && t <= s);
    }
    case MoveKind::D: {
      const int m = p[0], r = p[1], s = p[2];
      return !pole && r < l && l <= m && t <= s;
    }
    case MoveKind::E: {
      const int m = p[0], r = p[1];
      if (pole) return l <= r;
      return l > m && t <= r;
    }
  }
  return false;
}

/// Number of poles and crossings; every down-move lowers this pair.
inline std::pair<std::size_t, std::int64_t> complexity(const ArcDiagram& d) {
  return {d.poles().size(), crossings(d)};
}

}  // namespace arcdeg

#endif  // ARCDEG_MOVES_HPP
