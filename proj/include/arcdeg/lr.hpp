#ifndef ARCDEG_LR_HPP
#define ARCDEG_LR_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "arcdeg/errors.hpp"
#include "arcdeg/partition.hpp"

namespace arcdeg {

/// (2,2,…,2) of weight |β|−|γ|, with a trailing 1 when the difference is odd.
inline Partition alpha_for_type(const Partition& beta, const Partition& gamma) {
  if (!contains(beta, gamma)) throw TypeMismatch("alpha_for_type needs gamma within beta");
  const std::int64_t diff = weight(beta) - weight(gamma);
  std::vector<int> parts(static_cast<std::size_t>(diff / 2), 2);
  if (diff % 2) parts.push_back(1);
  return Partition(std::move(parts));
}

/*
 * c^β_{α,γ}: semistandard fillings of β/γ with content α whose reading word
 * (rows top to bottom, each row right to left) is a lattice word.
 * Cells are filled in reading order so the lattice condition is checked on
 * every prefix.
 */
inline std::int64_t lr_coefficient(const Partition& alpha, const Partition& gamma,
                                   const Partition& beta) {
  if (!contains(beta, gamma)) return 0;
  if (weight(beta) != weight(gamma) + weight(alpha)) return 0;

  struct Cell {
    std::size_t row;
    int col;  // 1-based
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < beta.length(); ++i) {
    for (int c = beta.part(i); c > gamma.part(i); --c) cells.push_back({i, c});
  }
  const int letters = static_cast<int>(alpha.length());
  std::vector<std::vector<int>> filling(beta.length());
  for (std::size_t i = 0; i < beta.length(); ++i) filling[i].assign(beta.part(i) + 1, 0);
  std::vector<int> used(letters + 2, 0);

  std::int64_t count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [row, col] = cells[k];
    // Row weakly increases left to right: bounded above by the right neighbour.
    int hi = letters;
    if (col < beta.part(row)) hi = std::min(hi, filling[row][col + 1]);
    // Column strictly increases downwards.
    int lo = 1;
    if (row > 0 && col > gamma.part(row - 1)) lo = filling[row - 1][col] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used[v] >= alpha.part(v - 1)) continue;
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      ++used[v];
      filling[row][col] = v;
      rec(k + 1);
      filling[row][col] = 0;
      --used[v];
    }
  };
  rec(0);
  return count;
}

/*
 * Predicted number of minimal elements of the arc poset of type (β,γ); only
 * defined when β/γ has at most one box per column.
 */
inline std::optional<std::int64_t> minimal_count_prediction(const Partition& beta,
                                                            const Partition& gamma) {
  if (!contains(beta, gamma)) throw TypeMismatch("prediction needs gamma within beta");
  if (!is_column_strip(beta, gamma)) return std::nullopt;
  return lr_coefficient(alpha_for_type(beta, gamma), gamma, beta);
}

}  // namespace arcdeg

#endif  // ARCDEG_LR_HPP
