#ifndef ARCDEG_VERIFY_HPP
#define ARCDEG_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arcdeg/geometry.hpp"
#include "arcdeg/hom.hpp"
#include "arcdeg/lr.hpp"
#include "arcdeg/moves.hpp"
#include "arcdeg/objects.hpp"
#include "arcdeg/partition.hpp"
#include "arcdeg/poset.hpp"
#include "arcdeg/reduction.hpp"

namespace arcdeg {

struct CheckResult {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool ok() const {
    for (const auto& c : checks) {
      if (!c.ok()) return false;
    }
    return true;
  }
};

namespace detail {

class CheckSet {
 public:
  CheckResult& get(const std::string& name) {
    for (auto& c : checks_) {
      if (c.name == name) return c;
    }
    checks_.push_back({name});
    return checks_.back();
  }

  void record(const std::string& name, bool passed, const std::function<std::string()>& what) {
    auto& c = get(name);
    ++c.cases;
    if (!passed) {
      if (c.failures == 0) c.first_failure = what();
      ++c.failures;
    }
  }

  std::vector<CheckResult> take() { return std::move(checks_); }

 private:
  std::vector<CheckResult> checks_;
};

inline std::string pair_text(const S2Object& y, const S2Object& z) {
  return to_string(y) + " | " + to_string(z);
}

}  // namespace detail

/*
 * Exhaustive property sweep over every type (β,γ) with |β| ≤ beta_max.
 * Each check counts the cases it looked at and keeps the first failure.
 */
inline VerifyReport verify_all(int beta_max) {
  detail::CheckSet checks;
  for (int w = 1; w <= beta_max; ++w) {
    for (const auto& beta : partitions_of(w)) {
      for (const auto& gamma : subpartitions(beta)) {
        const ArcPoset poset(beta, gamma);
        if (poset.size() == 0) continue;
        const auto& elems = poset.elements();
        const std::string type_text = "(" + to_string(beta) + "; " + to_string(gamma) + ")";

        for (const auto& o : elems) {
          const auto d = diagram_of_object(o);
          checks.record("diagram round trip", object_of_diagram(d, beta, gamma) == o,
                        [&] { return to_string(o); });
          checks.record("weight identity",
                        weight(beta) == weight(alpha_of(o)) + weight(gamma),
                        [&] { return to_string(o); });
          const auto a = alpha_of(o);
          const std::int64_t identity =
              weight(a) * weight(a) + weight(beta) * weight(beta) -
              (aut_degree(a) + aut_degree(beta)) + subspace_orbit_dim(o);
          checks.record("dimension identity", stratum_dim(o) == identity,
                        [&] { return to_string(o); });
        }

        const auto maximal = poset.maximal();
        checks.record("unique maximal without arcs",
                      maximal.size() == 1 && poset.diagrams()[maximal[0]].arcs().empty(),
                      [&] { return type_text; });
        if (const auto predicted = minimal_count_prediction(beta, gamma)) {
          checks.record("minimal count is LR",
                        *predicted == static_cast<std::int64_t>(poset.minimal().size()),
                        [&] { return type_text; });
        }

        for (const auto& e : poset.moves()) {
          const auto& upper = elems[e.upper];
          const auto& lower = elems[e.lower];
          checks.record("down-move raises dimension", stratum_dim(lower) > stratum_dim(upper),
                        [&] { return to_string(e.move) + " on " + to_string(upper); });
          checks.record("down-move lowers complexity",
                        complexity(poset.diagrams()[e.lower]) <
                            complexity(poset.diagrams()[e.upper]),
                        [&] { return to_string(e.move) + " on " + to_string(upper); });
          bool region_ok = true;
          for (const auto& x : test_set(beta)) {
            if (delta_hom(lower, upper, x) != (in_region(e.move, x) ? 1 : 0)) region_ok = false;
          }
          checks.record("region matches delta hom", region_ok,
                        [&] { return to_string(e.move) + " on " + to_string(upper); });
          const auto ses = ses_witness(e.move);
          bool ses_ok = object_type(ses.start + ses.end) == object_type(ses.middle);
          ses_ok = ses_ok && weight(alpha_of(ses.start)) + weight(alpha_of(ses.end)) ==
                                 weight(alpha_of(ses.middle));
          for (const auto& x : test_set(beta)) {
            if (hom_obj(x, ses.middle) > hom_obj(x, ses.start) + hom_obj(x, ses.end)) {
              ses_ok = false;
            }
          }
          checks.record("SES witness sanity", ses_ok, [&] { return to_string(e.move); });
        }

        const int beta1 = beta.largest();
        for (std::size_t i = 0; i < elems.size(); ++i) {
          for (std::size_t j = 0; j < elems.size(); ++j) {
            const auto& y = elems[i];
            const auto& z = elems[j];
            const bool by_hom = hom_leq(y, z);
            checks.record("arc order equals hom order", poset.leq(i, j) == by_hom,
                          [&] { return detail::pair_text(y, z); });
            checks.record("test set bound", by_hom == hom_leq(y, z, beta1 + 4),
                          [&] { return detail::pair_text(y, z); });
            checks.record("mesh identity", mesh_defect_report(y, z, beta1 + 3).empty(),
                          [&] { return detail::pair_text(y, z); });
            if (!by_hom) continue;
            bool chain_ok = true;
            try {
              S2Object current = z;
              for (const auto& mv : reduction_chain(y, z)) {
                const S2Object next =
                    object_of_diagram(apply_down(diagram_of_object(current), mv), beta, gamma);
                if (!hom_leq(y, next) || !hom_leq(next, current)) chain_ok = false;
                current = next;
              }
              chain_ok = chain_ok && current == y;
            } catch (const Error&) {
              chain_ok = false;
            }
            checks.record("reduction chain", chain_ok, [&] { return detail::pair_text(y, z); });
            if (y == z) continue;
            bool walk_ok = true;
            try {
              (void)find_descent_move(y, z, DescentStrategy::walk);
            } catch (const Error&) {
              walk_ok = false;
            }
            checks.record("walk descent", walk_ok, [&] { return detail::pair_text(y, z); });
          }
        }
      }
    }
  }
  return {checks.take()};
}

}  // namespace arcdeg

#endif  // ARCDEG_VERIFY_HPP
