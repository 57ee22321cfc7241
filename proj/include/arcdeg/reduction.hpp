#ifndef ARCDEG_REDUCTION_HPP
#define ARCDEG_REDUCTION_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "arcdeg/errors.hpp"
#include "arcdeg/hom.hpp"
#include "arcdeg/moves.hpp"
#include "arcdeg/objects.hpp"

namespace arcdeg {

enum class DescentStrategy {
  canonical,  // first valid move in canonical order
  walk,       // corner search along the band
};

namespace detail {

/// An arc or a pole of a diagram, i.e. one SES end.
using DiagramPiece = std::variant<Arc, int>;

inline int count_piece(const ArcDiagram& d, const DiagramPiece& piece) {
  if (const Arc* arc = std::get_if<Arc>(&piece)) {
    return static_cast<int>(std::ranges::count(d.arcs(), *arc));
  }
  return static_cast<int>(std::ranges::count(d.poles(), std::get<int>(piece)));
}

/// Pieces a move removes from the larger diagram: (start, end) of its SES.
inline std::pair<DiagramPiece, DiagramPiece> ses_ends(const Move& mv) {
  const auto& p = mv.points();
  switch (mv.kind()) {
    case MoveKind::A:
      return {Arc{p[1], p[3]}, Arc{p[0], p[2]}};
    case MoveKind::B:
      return {Arc{p[0], p[2]}, p[1]};
    case MoveKind::C:
      return {Arc{p[0], p[2]}, Arc{p[1], p[3]}};
    case MoveKind::D:
      return {p[1], Arc{p[0], p[2]}};
    case MoveKind::E:
      return {p[0], p[1]};
  }
  throw std::logic_error("unknown move kind");
}

struct DescentContext {
  ArcDiagram y_diagram;
  ArcDiagram z_diagram;
  std::vector<Indecomposable> tests;
  std::vector<std::int64_t> delta;  // δH over tests
};

inline DescentContext make_context(const S2Object& y, const S2Object& z) {
  DescentContext ctx{diagram_of_object(y), diagram_of_object(z),
                     test_set(object_type(z).beta), {}};
  for (const auto& x : ctx.tests) ctx.delta.push_back(hom_obj(x, z) - hom_obj(x, y));
  return ctx;
}

/// Conditions (P1) and (P2) for a move on Δ(Z).
inline bool is_valid_descent(const DescentContext& ctx, const Move& mv) {
  for (std::size_t i = 0; i < ctx.tests.size(); ++i) {
    if (in_region(mv, ctx.tests[i]) && ctx.delta[i] < 1) return false;
  }
  const auto [start, end] = ses_ends(mv);
  for (const auto& piece : {start, end}) {
    if (count_piece(ctx.z_diagram, piece) - count_piece(ctx.y_diagram, piece) <= 0) return false;
  }
  return true;
}

/*
 * Band cells in cover coordinates with n = β₁+1.  Column n+1 carries the
 * poles, (ℓ,t) with ℓ > n+1 folds back to (t, ℓ−n−1), and row ℓ−t outside
 * [1, n] is empty.
 */
class CoverBand {
 public:
  CoverBand(const S2Object& y, const S2Object& z, const DescentContext& ctx)
      : y_(y), z_(z), ctx_(ctx), n_(object_type(z).beta.largest() + 1) {}

  int fold_column() const { return n_ + 1; }

  std::optional<DiagramPiece> piece(int l, int t) const {
    if (l > n_ + 1) return piece(t, l - n_ - 1);
    if (t < 0 || t >= l || l - t > n_) return std::nullopt;
    if (l == n_ + 1) {
      if (t == 0) return std::nullopt;
      return DiagramPiece{t};
    }
    if (t == 0) return DiagramPiece{l};
    return DiagramPiece{Arc{l, t}};
  }

  std::int64_t dh(int l, int t) const {
    const auto p = piece(l, t);
    if (!p) return 0;
    if (const int* pole = std::get_if<int>(&*p)) {
      return delta_hom(y_, z_, Indecomposable::p1(*pole));
    }
    const Arc arc = std::get<Arc>(*p);
    return delta_hom(y_, z_, BandCell{arc.m, arc.r});
  }

  std::int64_t dm(int l, int t) const {
    const auto p = piece(l, t);
    if (!p) return 0;
    return count_piece(ctx_.z_diagram, *p) - count_piece(ctx_.y_diagram, *p);
  }

 private:
  const S2Object& y_;
  const S2Object& z_;
  const DescentContext& ctx_;
  int n_;
};

inline std::optional<Move> move_from_corners(const DiagramPiece& start, const DiagramPiece& end) {
  try {
    const Arc* a1 = std::get_if<Arc>(&start);
    const Arc* a2 = std::get_if<Arc>(&end);
    if (a1 && a2) {
      if (a2->m > a1->m && a1->m > a2->r && a2->r > a1->r) {
        return Move::a(a2->m, a1->m, a2->r, a1->r);
      }
      if (a1->m > a2->m && a2->m > a1->r && a1->r > a2->r) {
        return Move::c(a1->m, a2->m, a1->r, a2->r);
      }
      return std::nullopt;
    }
    if (a1) return Move::b(a1->m, std::get<int>(end), a1->r);
    if (a2) return Move::d(a2->m, std::get<int>(start), a2->r);
    return Move::e(std::get<int>(start), std::get<int>(end));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

/*
 * Corner search.  Row t = 0 is the pole column seen from the other side, so
 * runs are scanned for t ≥ 1 only.  For each column carrying a positive run
 * of δH: move right until δM is positive on the run (upper corner), then
 * take the highest positive δM in the column to the left, below the upper
 * corner (lower corner).  The first pair of corners giving a valid move wins.
 */
inline std::optional<Move> walk_candidate(const S2Object& y, const S2Object& z,
                                          const DescentContext& ctx) {
  const CoverBand band(y, z, ctx);
  const int last_column = band.fold_column() + object_type(z).beta.largest();
  const auto applicable = applicable_moves(ctx.z_diagram);
  for (int l0 = 2; l0 <= band.fold_column(); ++l0) {
    for (int t0 = 1; t0 < l0; ++t0) {
      if (band.dh(l0, t0) <= 0 || band.dh(l0, t0 - 1) > 0) continue;
      int width = 0;
      while (band.dh(l0, t0 + width) > 0) ++width;

      std::optional<std::pair<int, int>> upper;
      for (int l = l0; l <= last_column && !upper; ++l) {
        for (int j = 0; j < width; ++j) {
          if (band.dm(l, t0 + j) > 0) {
            upper = {{l, t0 + j}};
            break;
          }
        }
      }
      if (!upper) continue;
      std::optional<int> lower_t;
      for (int t = t0 - 1; t <= upper->second - 1; ++t) {
        if (band.dm(l0 - 1, t) > 0) lower_t = t;
      }
      if (!lower_t) continue;
      const auto start = band.piece(l0 - 1, *lower_t);
      const auto end = band.piece(upper->first, upper->second);
      if (!start || !end) continue;
      const auto mv = move_from_corners(*start, *end);
      if (mv && std::ranges::find(applicable, *mv) != applicable.end() &&
          is_valid_descent(ctx, *mv)) {
        return mv;
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

/*
 * A move μ on Δ(Z) with δH(Y,Z) ≥ 1 on its region and δM(Y,Z) > 0 at both
 * SES ends; then Y ≤_hom Z′ for the result Z′.  Preconditions: same type
 * and Y ≤_hom Z.
 */
inline Move find_descent_move(const S2Object& y, const S2Object& z,
                              DescentStrategy strategy = DescentStrategy::canonical) {
  require_same_type(y, z);
  if (y == z) throw NoDescentMove("objects are equal: " + to_string(y));
  const auto ctx = detail::make_context(y, z);

  if (strategy == DescentStrategy::walk) {
    const auto mv = detail::walk_candidate(y, z, ctx);
    if (!mv) {
      throw InternalInvariantViolation("walk found no valid corners from " + to_string(z) +
                                       " towards " + to_string(y));
    }
    return *mv;
  }

  for (const auto& mv : applicable_moves(ctx.z_diagram)) {
    if (detail::is_valid_descent(ctx, mv)) return mv;
  }
  throw InternalInvariantViolation("no descent move from " + to_string(z) + " towards " +
                                   to_string(y));
}

/// Moves taking Δ(Z) down to Δ(Y); empty iff Y = Z.
inline std::vector<Move> reduction_chain(const S2Object& y, const S2Object& z,
                                         DescentStrategy strategy = DescentStrategy::canonical) {
  require_same_type(y, z);
  if (!hom_leq(y, z)) {
    throw NotComparable(to_string(y) + " is not below " + to_string(z) + " in the hom order");
  }
  const auto [beta, gamma] = object_type(z);
  std::vector<Move> chain;
  S2Object current = z;
  while (current != y) {
    const Move mv = find_descent_move(y, current, strategy);
    current = object_of_diagram(apply_down(diagram_of_object(current), mv), beta, gamma);
    chain.push_back(mv);
  }
  return chain;
}

}  // namespace arcdeg

#endif  // ARCDEG_REDUCTION_HPP
