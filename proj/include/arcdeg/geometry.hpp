#ifndef ARCDEG_GEOMETRY_HPP
#define ARCDEG_GEOMETRY_HPP

#include <cstdint>
#include <stdexcept>

#include "arcdeg/objects.hpp"
#include "arcdeg/partition.hpp"

namespace arcdeg {

namespace detail {

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("dimension overflow");
  return out;
}

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("dimension overflow");
  return out;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("dimension overflow");
  return out;
}

}  // namespace detail

/// dim V_Δ = |β|² + |α|² − n(α) − n(β) − n(γ) − |β| − x(Δ)
inline std::int64_t stratum_dim(const S2Object& object) {
  using namespace detail;
  const auto [beta, gamma] = object_type(object);
  const Partition alpha = alpha_of(object);
  const std::int64_t b = weight(beta);
  const std::int64_t a = weight(alpha);
  std::int64_t dim = checked_add(checked_mul(b, b), checked_mul(a, a));
  dim = checked_sub(dim, moment(alpha));
  dim = checked_sub(dim, moment(beta));
  dim = checked_sub(dim, moment(gamma));
  dim = checked_sub(dim, b);
  return checked_sub(dim, crossings(diagram_of_object(object)));
}

/// Degree of the Hall polynomial h^β_{α,γ}: n(β) − n(α) − n(γ).
inline std::int64_t hall_degree(const Partition& alpha, const Partition& beta,
                                const Partition& gamma) {
  return moment(beta) - moment(alpha) - moment(gamma);
}

/// Degree of a_α(q), the automorphism count of N_α over 𝔽_q: |α| + 2n(α).
inline std::int64_t aut_degree(const Partition& alpha) {
  return detail::checked_add(weight(alpha), detail::checked_mul(2, moment(alpha)));
}

/// Orbit dimension with α fixed: deg h + deg a_α − x(Δ).
inline std::int64_t subspace_orbit_dim(const S2Object& object) {
  const auto [beta, gamma] = object_type(object);
  const Partition alpha = alpha_of(object);
  return hall_degree(alpha, beta, gamma) + aut_degree(alpha) -
         crossings(diagram_of_object(object));
}

}  // namespace arcdeg

#endif  // ARCDEG_GEOMETRY_HPP
