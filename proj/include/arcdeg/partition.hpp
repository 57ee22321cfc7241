#ifndef ARCDEG_PARTITION_HPP
#define ARCDEG_PARTITION_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "arcdeg/errors.hpp"

namespace arcdeg {

/*
 * A partition λ = (λ₁ ≥ λ₂ ≥ … ≥ 1).  Parts are stored weakly decreasing
 * without zeros; every constructor normalizes, so two partitions are equal
 * iff their part vectors are.
 */
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
      if (p < 0) throw std::invalid_argument("partition with negative part");
    }
    std::erase(parts_, 0);
    std::ranges::sort(parts_, std::greater<>{});
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  // 0-based; returns 0 beyond the last part.
  int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  int largest() const { return parts_.empty() ? 0 : parts_.front(); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

/// |λ| = λ₁ + λ₂ + …
inline std::int64_t weight(const Partition& lambda) {
  std::int64_t sum = 0;
  for (int p : lambda.parts()) sum += p;
  return sum;
}

/// n(λ) = Σ λᵢ·(i−1), 1-based i.
inline std::int64_t moment(const Partition& lambda) {
  std::int64_t sum = 0;
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    sum += static_cast<std::int64_t>(parts[i]) * static_cast<std::int64_t>(i);
  }
  return sum;
}

/// γ ⊆ β as Young diagrams.
inline bool contains(const Partition& beta, const Partition& gamma) {
  if (gamma.length() > beta.length()) return false;
  for (std::size_t i = 0; i < gamma.length(); ++i) {
    if (gamma.part(i) > beta.part(i)) return false;
  }
  return true;
}

/// Number of boxes of β/γ in each column (1-based columns, absent = 0).
inline std::map<int, int> skew_column_counts(const Partition& beta,
                                             const Partition& gamma) {
  if (!contains(beta, gamma)) {
    throw TypeMismatch("skew shape requires gamma contained in beta");
  }
  std::map<int, int> counts;
  for (std::size_t i = 0; i < beta.length(); ++i) {
    for (int c = gamma.part(i) + 1; c <= beta.part(i); ++c) ++counts[c];
  }
  return counts;
}

/// β/γ has at most one box per column.
inline bool is_column_strip(const Partition& beta, const Partition& gamma) {
  for (const auto& [column, count] : skew_column_counts(beta, gamma)) {
    if (count > 1) return false;
  }
  return true;
}

inline std::string to_string(const Partition& lambda) {
  std::string out;
  for (std::size_t i = 0; i < lambda.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(lambda.part(i));
  }
  return out;
}

/// Parses `4,3,3,2,1`; the empty string is the empty partition.
inline Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    std::erase_if(token, [](unsigned char c) { return std::isspace(c); });
    if (token.empty()) {
      if (text.find_first_not_of(" \t") == std::string_view::npos) break;
      throw ParseError("empty part in partition '" + std::string(text) + "'");
    }
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad partition part '" + token + "'");
    }
    if (used != token.size() || value < 0) {
      throw ParseError("bad partition part '" + token + "'");
    }
    parts.push_back(value);
  }
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i] > parts[i - 1]) {
      throw ParseError("partition parts must be descending: '" +
                       std::string(text) + "'");
    }
  }
  return Partition(std::move(parts));
}

/// All partitions of n, in reverse lexicographic order.
inline std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      current.push_back(p);
      rec(remaining - p, p);
      current.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// All γ with γ ⊆ β (including ∅ and β itself).
inline std::vector<Partition> subpartitions(const Partition& beta) {
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(std::size_t, int)> rec = [&](std::size_t row, int cap) {
    if (row == beta.length()) {
      out.emplace_back(current);
      return;
    }
    for (int p = std::min(cap, beta.part(row)); p >= 0; --p) {
      current.push_back(p);
      rec(row + 1, p);
      current.pop_back();
    }
  };
  rec(0, beta.largest());
  return out;
}

}  // namespace arcdeg

#endif  // ARCDEG_PARTITION_HPP
