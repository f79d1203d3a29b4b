#pragma once

#include <boost/dynamic_bitset.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cutsetkit/errors.hpp"

namespace cutsetkit {

using Bitset = boost::dynamic_bitset<>;

/// A saturated chain from a minimal to a maximal element, listed in
/// increasing poset order.
using MaximalChain = std::vector<int>;

/// A finite poset on elements 0..n-1, stored as its Hasse diagram plus the
/// derived reachability relation. Immutable after construction; all queries
/// are const and safe to call concurrently.
class Poset {
 public:
  Poset() = default;

  /// Builds the poset generated by `relations`: the pairs are transitively
  /// closed and then reduced to the cover relation. Throws SelfLoopError,
  /// CycleError (with a witness cycle), InvalidParamError on bad indices, or
  /// LimitError when n exceeds the element guard.
  Poset(int n, const std::vector<std::pair<int, int>>& relations,
        std::vector<std::string> names = {});

  int size() const { return n_; }

  /// Cover pairs (x, y) with x covered by y, sorted ascending.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }

  /// Empty when the poset is unnamed, else one display label per element.
  const std::vector<std::string>& names() const { return names_; }
  std::string display(int x) const;

  bool leq(int x, int y) const { return x == y || up_[x].test(y); }
  bool less(int x, int y) const { return up_[x].test(y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }

  /// Strict up-set {z : x < z} / down-set {z : z < x}.
  const Bitset& up_set(int x) const { return up_[x]; }
  const Bitset& down_set(int x) const { return down_[x]; }

  const std::vector<int>& up_covers(int x) const { return up_covers_[x]; }
  const std::vector<int>& down_covers(int x) const { return down_covers_[x]; }

  /// Index into covers() of the pair (x, y), if x is covered by y.
  std::optional<int> cover_index(int x, int y) const;

  std::vector<int> minimals() const;
  std::vector<int> maximals() const;

  bool has_bottom() const;
  bool has_top() const;
  bool is_bounded() const { return n_ > 0 && has_bottom() && has_top(); }
  int bottom() const;  // -1 when there is no least element
  int top() const;     // -1 when there is no greatest element

  /// Length of the longest chain ending at x that starts at a minimal
  /// element. Minimal elements have height 0.
  int height(int x) const { return height_[x]; }
  /// Length of the longest chain in the poset (-1 for the empty poset).
  int height() const;

  bool operator==(const Poset& other) const {
    return n_ == other.n_ && covers_ == other.covers_ && names_ == other.names_;
  }

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::string> names_;
  std::vector<Bitset> up_, down_;
  std::vector<std::vector<int>> up_covers_, down_covers_;
  std::vector<int> height_;
};

Poset build_poset(int n, const std::vector<std::pair<int, int>>& relations,
                  std::vector<std::string> names = {});

bool is_antichain(const Poset& p, const std::vector<int>& elems);

/// All maximal chains in lexicographic order of their element sequences.
/// Throws LimitError past the chain guard.
std::vector<MaximalChain> maximal_chains(const Poset& p);

/// Induced subposet on `elems` (deduplicated, sorted ascending) together
/// with the map from sub-indices back to parent elements.
std::pair<Poset, std::vector<int>> induced_subposet(const Poset& p, std::vector<int> elems);

/// Closed interval [x, y] as an induced subposet.
struct Interval {
  int bottom = -1;
  int top = -1;
  Poset sub;
  std::vector<int> embedding;  // sub element -> parent element
};

/// Throws NotComparableError unless x <= y.
Interval interval(const Poset& p, int x, int y);

/// Rank assignment whose restriction to every maximal chain is an order
/// isomorphism onto `labels`. Labels are normalized to the run 0..h.
struct Grading {
  std::vector<int> rank;
  std::vector<int> labels;
};

/// Why a poset is not graded: either a cover whose rank would jump by more
/// than one, or two maximal chains whose rank images differ.
struct GradingWitness {
  std::optional<std::pair<int, int>> jump_cover;
  std::optional<std::pair<MaximalChain, MaximalChain>> mismatched_chains;
};

struct GradingResult {
  std::optional<Grading> grading;
  std::optional<GradingWitness> witness;
  bool ok() const { return grading.has_value(); }
};

GradingResult compute_grading(const Poset& p);

/// One element set per label, in increasing label order; the sets partition
/// the ground set.
std::vector<std::vector<int>> level_sets(const Poset& p, const Grading& g);

/// Adds a least element below all minimals when the poset has none, and
/// dually a greatest element; idempotent on bounded posets. Original
/// element indices are preserved; the new bottom (then top) is appended.
Poset bound_augment(const Poset& p);

}  // namespace cutsetkit
