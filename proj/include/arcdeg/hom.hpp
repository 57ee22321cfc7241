#ifndef ARCDEG_HOM_HPP
#define ARCDEG_HOM_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "arcdeg/errors.hpp"
#include "arcdeg/objects.hpp"
#include "arcdeg/partition.hpp"

namespace arcdeg {

namespace detail {

/*
 * Raw entry of the Hom-dimension table for X = (kx; l, t) and Y = (ky; m, r).
 * B2 arguments are accepted with r = m−1 as well; in that case the formula
 * evaluates the composite P₂(m) ⊕ P₀(m−1), which the tests check against
 * the additive value.
 */
inline std::int64_t table_value(Kind kx, int l, int t, Kind ky, int m, int r) {
  using std::min;
  switch (kx) {
    case Kind::P0:
      switch (ky) {
        case Kind::P0:
        case Kind::P2:
        case Kind::P1:
          return min(l, m);
        case Kind::B2:
          return min(l, m) + min(l, r);
      }
      break;
    case Kind::P2:
      switch (ky) {
        case Kind::P0:
          return min(l - 2, m);
        case Kind::P2:
          return min(l, m);
        case Kind::B2:
          return min(l - 1, m) + min(l - 1, r);
        case Kind::P1:
          return min(l - 1, m);
      }
      break;
    case Kind::B2:
      switch (ky) {
        case Kind::P0:
          return min(l - 1, m) + min(t - 1, m);
        case Kind::P2:
          return min(l, m) + min(t, m);
        case Kind::B2:
          return min(l - 1, m) + min(t, m) + min(l - 1, r) + min(t, r) -
                 ((l > m && t <= r) ? 1 : 0);
        case Kind::P1:
          return min(l - 1, m) + min(t, m);
      }
      break;
    case Kind::P1:
      switch (ky) {
        case Kind::P0:
          return min(l - 1, m);
        case Kind::P2:
          return min(l, m);
        case Kind::B2:
          return min(l, m) + min(l - 1, r);
        case Kind::P1:
          return min(l, m);
      }
      break;
  }
  return 0;
}

}  // namespace detail

/// dim Hom(X, Y) for indecomposables X, Y.
inline std::int64_t hom_indec(const Indecomposable& x, const Indecomposable& y) {
  return detail::table_value(x.kind, x.m, x.r, y.kind, y.m, y.r);
}

/// dim Hom(A, B), extended biadditively over summands.
inline std::int64_t hom_obj(const S2Object& a, const S2Object& b) {
  std::int64_t sum = 0;
  for (const auto& x : a.summands()) {
    for (const auto& y : b.summands()) sum += hom_indec(x, y);
  }
  return sum;
}

inline std::int64_t hom_obj(const Indecomposable& x, const S2Object& b) {
  std::int64_t sum = 0;
  for (const auto& y : b.summands()) sum += hom_indec(x, y);
  return sum;
}

inline void require_same_type(const S2Object& y, const S2Object& z) {
  if (object_type(y) != object_type(z)) {
    throw TypeMismatch(to_string(y) + " and " + to_string(z) +
                       " have different types (beta, gamma)");
  }
}

/// δH_X = [X, Z] − [X, Y].
inline std::int64_t delta_hom(const S2Object& y, const S2Object& z,
                              const Indecomposable& x) {
  require_same_type(y, z);
  return hom_obj(x, z) - hom_obj(x, y);
}

/// δM_X = μ_X(Z) − μ_X(Y).
inline std::int64_t delta_mult(const S2Object& y, const S2Object& z,
                               const Indecomposable& x) {
  require_same_type(y, z);
  return z.multiplicity(x) - y.multiplicity(x);
}

/*
 * Finite set of test objects deciding the hom order on type (β, ·):
 * P₁(t) for t ≤ β₁ and B₂(ℓ,t) for ℓ ≤ bipicket_bound.  P₀ and P₂ are
 * omitted since δH vanishes there for same-type pairs.
 */
inline std::vector<Indecomposable> test_set(const Partition& beta, int bipicket_bound) {
  std::vector<Indecomposable> out;
  for (int t = 1; t <= beta.largest(); ++t) out.push_back(Indecomposable::p1(t));
  for (int l = 3; l <= bipicket_bound; ++l) {
    for (int t = 1; t <= l - 2; ++t) out.push_back(Indecomposable::b2(l, t));
  }
  return out;
}

inline std::vector<Indecomposable> test_set(const Partition& beta) {
  return test_set(beta, beta.largest() + 1);
}

/// Hom profile [X, O] over a list of test objects.
inline std::vector<std::int64_t> hom_profile(const S2Object& object,
                                             const std::vector<Indecomposable>& tests) {
  std::vector<std::int64_t> out;
  out.reserve(tests.size());
  for (const auto& x : tests) out.push_back(hom_obj(x, object));
  return out;
}

inline bool hom_leq(const S2Object& y, const S2Object& z, int bipicket_bound) {
  require_same_type(y, z);
  for (const auto& x : test_set(object_type(z).beta, bipicket_bound)) {
    if (hom_obj(x, z) < hom_obj(x, y)) return false;
  }
  return true;
}

/// Y ≤_hom Z.
inline bool hom_leq(const S2Object& y, const S2Object& z) {
  return hom_leq(y, z, object_type(z).beta.largest() + 1);
}

/*
 * A cell of the band on which δH lives.  (ℓ, 0) is P₁(ℓ), (ℓ, ℓ−1) the
 * composite P₂(ℓ) ⊕ P₀(ℓ−1), and everything in between the bipicket
 * B₂(ℓ,t).  The τ⁻¹ direction is (ℓ,t) → (ℓ+1,t+1).
 */
struct BandCell {
  int ell = 1;
  int t = 0;

  bool is_composite() const { return ell >= 2 && t == ell - 1; }

  /// Summands at the cell (two for composite cells).
  S2Object label() const {
    if (t == 0) return S2Object{Indecomposable::p1(ell)};
    if (is_composite()) return arc_object(ell, t);
    return S2Object{Indecomposable::b2(ell, t)};
  }

  bool operator==(const BandCell&) const = default;
};

inline std::int64_t delta_hom(const S2Object& y, const S2Object& z, const BandCell& cell) {
  std::int64_t sum = 0;
  const S2Object label = cell.label();
  for (const auto& x : label.summands()) sum += delta_hom(y, z, x);
  return sum;
}

struct MeshViolation {
  BandCell cell;
  std::int64_t multiplicity_delta = 0;  // δM at the cell label
  std::int64_t mesh_value = 0;          // four-term combination of δH
};

/*
 * Checks δM_{(ℓ,t)} = δH(ℓ,t) + δH(ℓ+1,t+1) − δH(ℓ+1,t) − δH(ℓ,t+1) for
 * 2 ≤ ℓ ≤ N−1, 0 ≤ t ≤ ℓ−2, i.e. that the multiplicity difference is the
 * contravariant defect of the Hom difference.  Returns the violated cells.
 */
inline std::vector<MeshViolation> mesh_defect_report(const S2Object& y, const S2Object& z,
                                                     int n) {
  require_same_type(y, z);
  const int beta1 = object_type(z).beta.largest();
  if (n < beta1 + 3) {
    throw std::invalid_argument("mesh check needs N >= beta_1 + 3");
  }
  std::vector<std::vector<std::int64_t>> dh(n + 1);
  for (int l = 1; l <= n; ++l) {
    dh[l].resize(l);
    for (int t = 0; t < l; ++t) dh[l][t] = delta_hom(y, z, BandCell{l, t});
  }
  std::vector<MeshViolation> out;
  for (int l = 2; l <= n - 1; ++l) {
    for (int t = 0; t <= l - 2; ++t) {
      const BandCell cell{l, t};
      const Indecomposable x = cell.label().summands().front();
      const std::int64_t dm = delta_mult(y, z, x);
      const std::int64_t mesh = dh[l][t] + dh[l + 1][t + 1] - dh[l + 1][t] - dh[l][t + 1];
      if (dm != mesh) out.push_back({cell, dm, mesh});
    }
  }
  return out;
}

}  // namespace arcdeg

#endif  // ARCDEG_HOM_HPP
