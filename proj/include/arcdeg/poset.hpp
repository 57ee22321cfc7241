#ifndef ARCDEG_POSET_HPP
#define ARCDEG_POSET_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arcdeg/errors.hpp"
#include "arcdeg/geometry.hpp"
#include "arcdeg/hom.hpp"
#include "arcdeg/moves.hpp"
#include "arcdeg/objects.hpp"

namespace arcdeg {

/// Y ≤_arc Z: Δ(Y) is reachable from Δ(Z) by down-moves (breadth-first).
inline bool arc_leq(const S2Object& y, const S2Object& z) {
  require_same_type(y, z);
  const ArcDiagram target = diagram_of_object(y);
  const ArcDiagram start = diagram_of_object(z);
  std::set<ArcDiagram> seen{start};
  std::deque<ArcDiagram> queue{start};
  while (!queue.empty()) {
    ArcDiagram current = std::move(queue.front());
    queue.pop_front();
    if (current == target) return true;
    // Down-moves never increase (poles, crossings); prune what can't reach Δ(Y).
    if (current.poles().size() < target.poles().size()) continue;
    for (auto& step : down_moves(current)) {
      if (seen.insert(step.result).second) queue.push_back(std::move(step.result));
    }
  }
  return false;
}

/*
 * The finite poset (₂S^β_γ, ≤_arc).  Elements are the enumerated objects
 * in canonical order; single down-moves, reachability and the cover
 * relation are precomputed.
 */
class ArcPoset {
 public:
  struct Edge {
    std::size_t upper;
    std::size_t lower;
    Move move;
  };

  ArcPoset(Partition beta, Partition gamma)
      : beta_(std::move(beta)), gamma_(std::move(gamma)) {
    elements_ = enumerate_objects(beta_, gamma_);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      diagrams_.push_back(diagram_of_object(elements_[i]));
      index_.emplace(diagrams_.back(), i);
    }
    const std::size_t n = elements_.size();
    below_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (auto& step : down_moves(diagrams_[i])) {
        auto it = index_.find(step.result);
        if (it == index_.end()) {
          throw InternalInvariantViolation("down-move left the type: " + to_string(step.move));
        }
        moves_.push_back({i, it->second, step.move});
      }
    }
    // Closure by DFS from each element; down-moves form a DAG.
    std::vector<std::vector<std::size_t>> adj(n);
    for (const auto& e : moves_) adj[e.upper].push_back(e.lower);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::size_t> stack{i};
      below_[i][i] = true;
      while (!stack.empty()) {
        const std::size_t u = stack.back();
        stack.pop_back();
        for (std::size_t v : adj[u]) {
          if (!below_[i][v]) {
            below_[i][v] = true;
            stack.push_back(v);
          }
        }
      }
    }
    // Transitive reduction.
    std::set<std::pair<std::size_t, std::size_t>> covers;
    for (const auto& e : moves_) {
      if (e.upper == e.lower) continue;
      bool direct = true;
      for (std::size_t k = 0; k < n && direct; ++k) {
        if (k != e.upper && k != e.lower && below_[e.upper][k] && below_[k][e.lower]) {
          direct = false;
        }
      }
      if (direct) covers.insert({e.upper, e.lower});
    }
    covers_.assign(covers.begin(), covers.end());
  }

  const Partition& beta() const { return beta_; }
  const Partition& gamma() const { return gamma_; }
  const std::vector<S2Object>& elements() const { return elements_; }
  const std::vector<ArcDiagram>& diagrams() const { return diagrams_; }
  std::size_t size() const { return elements_.size(); }

  /// Single down-moves between elements (upper → lower).
  const std::vector<Edge>& moves() const { return moves_; }

  /// Cover relation as (upper, lower) index pairs, sorted.
  const std::vector<std::pair<std::size_t, std::size_t>>& covers() const { return covers_; }

  std::size_t index_of(const S2Object& object) const {
    auto it = index_.find(diagram_of_object(object));
    if (it == index_.end() || elements_[it->second] != object) {
      throw TypeMismatch(to_string(object) + " is not of type (" + to_string(beta_) + "; " +
                         to_string(gamma_) + ")");
    }
    return it->second;
  }

  /// elements()[lower] ≤_arc elements()[upper]
  bool leq(std::size_t lower, std::size_t upper) const { return below_[upper][lower]; }

  std::vector<std::size_t> maximal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (std::ranges::none_of(moves_, [i](const Edge& e) { return e.lower == i; })) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<std::size_t> minimal() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i) {
      if (std::ranges::none_of(moves_, [i](const Edge& e) { return e.upper == i; })) {
        out.push_back(i);
      }
    }
    return out;
  }

 private:
  Partition beta_;
  Partition gamma_;
  std::vector<S2Object> elements_;
  std::vector<ArcDiagram> diagrams_;
  std::map<ArcDiagram, std::size_t> index_;
  std::vector<Edge> moves_;
  std::vector<std::vector<bool>> below_;
  std::vector<std::pair<std::size_t, std::size_t>> covers_;
};

struct HasseEdge {
  S2Object upper;
  S2Object lower;
};

inline std::vector<HasseEdge> hasse(const Partition& beta, const Partition& gamma) {
  ArcPoset poset(beta, gamma);
  std::vector<HasseEdge> out;
  for (const auto& [u, l] : poset.covers()) {
    out.push_back({poset.elements()[u], poset.elements()[l]});
  }
  return out;
}

struct Extrema {
  std::vector<S2Object> maximal;
  std::vector<S2Object> minimal;
};

inline Extrema extrema(const Partition& beta, const Partition& gamma) {
  ArcPoset poset(beta, gamma);
  Extrema out;
  for (auto i : poset.maximal()) out.maximal.push_back(poset.elements()[i]);
  for (auto i : poset.minimal()) out.minimal.push_back(poset.elements()[i]);
  return out;
}

/// Graphviz rendering; edges point from the larger element to the smaller.
inline void write_dot(std::ostream& out, const ArcPoset& poset) {
  out << "digraph arc_order {\n";
  out << "  rankdir=TB;\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& obj = poset.elements()[i];
    out << "  n" << i << " [label=\"" << to_string(poset.diagrams()[i]) << "\\nalpha=("
        << to_string(alpha_of(obj)) << ") x=" << crossings(poset.diagrams()[i])
        << " dim=" << stratum_dim(obj) << "\"];\n";
  }
  for (const auto& [u, l] : poset.covers()) out << "  n" << u << " -> n" << l << ";\n";
  out << "}\n";
}

}  // namespace arcdeg

#endif  // ARCDEG_POSET_HPP
