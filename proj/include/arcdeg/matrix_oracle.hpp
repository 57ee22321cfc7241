#ifndef ARCDEG_MATRIX_ORACLE_HPP
#define ARCDEG_MATRIX_ORACLE_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "arcdeg/objects.hpp"

namespace arcdeg {

/// Dense matrix over the prime field 𝔽_p, entries kept in [0, p).
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    if (p < 2) throw std::invalid_argument("prime must be >= 2");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t prime() const { return p_; }

  std::uint32_t at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::int64_t v) {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    if (m < 0) m += p_;
    data_[i * cols_ + j] = static_cast<std::uint32_t>(m);
  }

  static FpMatrix identity(std::size_t n, std::uint32_t p) {
    FpMatrix out(n, n, p);
    for (std::size_t i = 0; i < n; ++i) out.set(i, i, 1);
    return out;
  }

  /// Rank by Gauss elimination, pivoting on the first nonzero entry.
  std::size_t rank() const {
    FpMatrix a = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      std::size_t pivot = rank;
      while (pivot < rows_ && a.at(pivot, col) == 0) ++pivot;
      if (pivot == rows_) continue;
      a.swap_rows(pivot, rank);
      const std::uint64_t inv = a.inverse(a.at(rank, col));
      for (std::size_t j = col; j < cols_; ++j) {
        a.data_[rank * cols_ + j] =
            static_cast<std::uint32_t>(a.at(rank, j) * inv % p_);
      }
      for (std::size_t i = rank + 1; i < rows_; ++i) {
        const std::uint64_t factor = a.at(i, col);
        if (factor == 0) continue;
        for (std::size_t j = col; j < cols_; ++j) {
          const std::uint64_t sub = factor * a.at(rank, j) % p_;
          a.data_[i * cols_ + j] =
              static_cast<std::uint32_t>((a.at(i, j) + p_ - sub) % p_);
        }
      }
      ++rank;
    }
    return rank;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) {
      std::swap(data_[a * cols_ + j], data_[b * cols_ + j]);
    }
  }

  std::uint64_t inverse(std::uint64_t v) const {
    // Fermat; p is assumed prime.
    std::uint64_t result = 1;
    std::uint64_t base = v % p_;
    std::uint64_t e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return result;
  }

  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

/*
 * An object of S₂ as explicit matrices: nilpotent operators on the
 * subspace (size |α|) and ambient space (size |β|), and the embedding.
 * Basis of k[T]/(T^m) is 1, T, …, T^{m−1}; the operator shifts Tⁱ ↦ Tⁱ⁺¹.
 */
struct RealizedObject {
  FpMatrix sub_op;
  FpMatrix amb_op;
  FpMatrix embedding;  // |β| × |α|
};

inline RealizedObject realize(const S2Object& object, std::uint32_t p) {
  std::size_t a = 0;
  std::size_t b = 0;
  for (const auto& x : object.summands()) {
    switch (x.kind) {
      case Kind::P0:
        b += x.m;
        break;
      case Kind::P1:
        a += 1;
        b += x.m;
        break;
      case Kind::P2:
        a += 2;
        b += x.m;
        break;
      case Kind::B2:
        a += 2;
        b += x.m + x.r;
        break;
    }
  }
  RealizedObject out{FpMatrix(a, a, p), FpMatrix(b, b, p), FpMatrix(b, a, p)};
  auto jordan = [](FpMatrix& op, std::size_t offset, int size) {
    for (int i = 0; i + 1 < size; ++i) op.set(offset + i + 1, offset + i, 1);
  };
  std::size_t ai = 0;
  std::size_t bi = 0;
  for (const auto& x : object.summands()) {
    switch (x.kind) {
      case Kind::P0:
        jordan(out.amb_op, bi, x.m);
        bi += x.m;
        break;
      case Kind::P1:
      case Kind::P2: {
        const int l = x.kind == Kind::P1 ? 1 : 2;
        jordan(out.sub_op, ai, l);
        jordan(out.amb_op, bi, x.m);
        // Tʲ ↦ T^{m−l+j}: the unique invariant subspace of dimension l.
        for (int j = 0; j < l; ++j) out.embedding.set(bi + x.m - l + j, ai + j, 1);
        ai += l;
        bi += x.m;
        break;
      }
      case Kind::B2: {
        jordan(out.sub_op, ai, 2);
        jordan(out.amb_op, bi, x.m);
        jordan(out.amb_op, bi + x.m, x.r);
        // 1 ↦ (T^{m−2}, T^{r−1}),  T ↦ (T^{m−1}, T^r = 0)
        out.embedding.set(bi + x.m - 2, ai, 1);
        out.embedding.set(bi + x.m + x.r - 1, ai, 1);
        out.embedding.set(bi + x.m - 1, ai + 1, 1);
        ai += 2;
        bi += x.m + x.r;
        break;
      }
    }
  }
  return out;
}

/*
 * dim Hom_S(X, Y) over 𝔽_p: pairs (h₁, h₂) with h₁ intertwining the
 * subspace operators, h₂ the ambient operators, and g∘h₁ = h₂∘f.  The
 * dimension is #unknowns − rank of the assembled linear system.
 */
inline std::int64_t oracle_hom_dim(const S2Object& x, const S2Object& y, std::uint32_t p) {
  const RealizedObject rx = realize(x, p);
  const RealizedObject ry = realize(y, p);
  const std::size_t ax = rx.sub_op.rows();
  const std::size_t bx = rx.amb_op.rows();
  const std::size_t ay = ry.sub_op.rows();
  const std::size_t by = ry.amb_op.rows();

  // h1 is ay × ax, h2 is by × bx; both row-major after each other.
  const std::size_t n1 = ay * ax;
  const std::size_t unknowns = n1 + by * bx;
  if (unknowns == 0) return 0;
  auto h1 = [ax](std::size_t i, std::size_t j) { return i * ax + j; };
  auto h2 = [n1, bx](std::size_t i, std::size_t j) { return n1 + i * bx + j; };

  const std::size_t equations = ay * ax + by * bx + by * ax;
  FpMatrix system(equations, unknowns, p);
  std::size_t row = 0;

  // A_Y h1 − h1 A_X = 0
  for (std::size_t i = 0; i < ay; ++i) {
    for (std::size_t j = 0; j < ax; ++j, ++row) {
      for (std::size_t k = 0; k < ay; ++k) {
        if (auto v = ry.sub_op.at(i, k)) system.set(row, h1(k, j), system.at(row, h1(k, j)) + v);
      }
      for (std::size_t k = 0; k < ax; ++k) {
        if (auto v = rx.sub_op.at(k, j)) {
          system.set(row, h1(i, k), static_cast<std::int64_t>(system.at(row, h1(i, k))) - v);
        }
      }
    }
  }
  // B_Y h2 − h2 B_X = 0
  for (std::size_t i = 0; i < by; ++i) {
    for (std::size_t j = 0; j < bx; ++j, ++row) {
      for (std::size_t k = 0; k < by; ++k) {
        if (auto v = ry.amb_op.at(i, k)) system.set(row, h2(k, j), system.at(row, h2(k, j)) + v);
      }
      for (std::size_t k = 0; k < bx; ++k) {
        if (auto v = rx.amb_op.at(k, j)) {
          system.set(row, h2(i, k), static_cast<std::int64_t>(system.at(row, h2(i, k))) - v);
        }
      }
    }
  }
  // g h1 − h2 f = 0
  for (std::size_t i = 0; i < by; ++i) {
    for (std::size_t j = 0; j < ax; ++j, ++row) {
      for (std::size_t k = 0; k < ay; ++k) {
        if (auto v = ry.embedding.at(i, k)) system.set(row, h1(k, j), system.at(row, h1(k, j)) + v);
      }
      for (std::size_t k = 0; k < bx; ++k) {
        if (auto v = rx.embedding.at(k, j)) {
          system.set(row, h2(i, k), static_cast<std::int64_t>(system.at(row, h2(i, k))) - v);
        }
      }
    }
  }
  return static_cast<std::int64_t>(unknowns - system.rank());
}

}  // namespace arcdeg

#endif  // ARCDEG_MATRIX_ORACLE_HPP
