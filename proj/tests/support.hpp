#ifndef ARCDEG_TESTS_SUPPORT_HPP
#define ARCDEG_TESTS_SUPPORT_HPP

// Shared fixtures and independent brute-force helpers for the test suites.

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "arcdeg/arcdeg.hpp"

namespace arcdeg::testing {

// The worked descent example: Z and the intermediate objects down to Y.
inline S2Object worked_z() { return parse_object("B(6,3)+B(5,1)+P1(7)+P1(4)+P1(2)"); }
inline S2Object worked_z1() { return parse_object("B(6,1)+B(5,3)+P1(7)+P1(4)+P1(2)"); }
inline S2Object worked_z2() { return parse_object("B(6,2)+B(5,3)+P1(7)+P1(4)+P1(1)"); }
inline S2Object worked_z3() { return parse_object("B(7,1)+B(6,2)+B(5,3)+P1(4)"); }
inline S2Object worked_z4() { return parse_object("B(7,1)+B(6,2)+P2(5)+P0(4)+P1(3)"); }
inline S2Object worked_y() { return parse_object("B(7,3)+B(6,2)+P2(5)+P0(4)+P1(1)"); }

// Every indecomposable whose parameters are at most `bound`.
inline std::vector<Indecomposable> all_indecomposables(int bound) {
  std::vector<Indecomposable> out;
  for (int m = 1; m <= bound; ++m) {
    out.push_back(Indecomposable::p0(m));
    out.push_back(Indecomposable::p1(m));
    if (m >= 2) out.push_back(Indecomposable::p2(m));
    for (int r = 1; r <= m - 2; ++r) out.push_back(Indecomposable::b2(m, r));
  }
  return out;
}

// Objects of type (β,γ) found by trying every multiset of indecomposables
// with |β| boxes and filtering on the type; independent of enumerate_objects.
inline std::set<std::vector<std::pair<int, std::pair<int, int>>>> brute_force_types(
    const Partition& beta, const Partition& gamma) {
  const auto pool = all_indecomposables(beta.largest());
  const std::int64_t target = weight(beta);
  std::set<std::vector<std::pair<int, std::pair<int, int>>>> found;
  std::vector<Indecomposable> chosen;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t start,
                                                           std::int64_t boxes) {
    if (boxes == target) {
      const S2Object o(chosen);
      if (object_type(o) == ObjectType{beta, gamma}) {
        std::vector<std::pair<int, std::pair<int, int>>> key;
        for (const auto& x : o.summands()) key.push_back({int(x.kind), {x.m, x.r}});
        found.insert(key);
      }
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      const auto& x = pool[i];
      const std::int64_t size = x.m + (x.kind == Kind::B2 ? x.r : 0);
      if (boxes + size > target) continue;
      chosen.push_back(x);
      rec(i, boxes + size);
      chosen.pop_back();
    }
  };
  rec(0, 0);
  return found;
}

// All (β,γ) with |β| ≤ max_weight whose stratum set is nonempty.
inline std::vector<std::pair<Partition, Partition>> all_types(int max_weight) {
  std::vector<std::pair<Partition, Partition>> out;
  for (int w = 1; w <= max_weight; ++w) {
    for (const auto& beta : partitions_of(w)) {
      for (const auto& gamma : subpartitions(beta)) {
        if (!enumerate_objects(beta, gamma).empty()) out.emplace_back(beta, gamma);
      }
    }
  }
  return out;
}

// Random same-type pair: a random type with |β| ≤ max_weight and two of its
// objects.
struct RandomPairs {
  explicit RandomPairs(int max_weight, std::uint32_t seed = 20240601) : rng(seed) {
    for (auto& [beta, gamma] : all_types(max_weight)) {
      auto objects = enumerate_objects(beta, gamma);
      if (objects.size() >= 2) types.push_back(std::move(objects));
    }
  }

  std::pair<S2Object, S2Object> next() {
    const auto& objects = types[pick(types.size())];
    return {objects[pick(objects.size())], objects[pick(objects.size())]};
  }

  std::size_t pick(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  }

  std::mt19937 rng;
  std::vector<std::vector<S2Object>> types;
};

}  // namespace arcdeg::testing

#endif  // ARCDEG_TESTS_SUPPORT_HPP
