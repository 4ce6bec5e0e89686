#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fence/composition.hpp"
#include "fence/errors.hpp"

namespace fence {

/// Node ids follow the zigzag, 1-based: x_1 ... x_{n+1} (fence) or x_1 ... x_n
/// (circular, where x_{n+1} is identified with x_1).
using NodeId = int;
using Mask = std::uint64_t;

constexpr int kMaskBits = 64;
constexpr std::size_t kDefaultIdealBound = 24;

inline constexpr Mask bit(NodeId x) { return Mask{1} << (x - 1); }

enum class Kind { Fence, Circular };

/// A downward-closed node subset.
struct IdealSet {
  Mask mask = 0;

  int size() const noexcept { return std::popcount(mask); }
  bool contains(NodeId x) const noexcept { return (mask & bit(x)) != 0; }

  friend bool operator==(IdealSet, IdealSet) = default;
  /// Ordered by (size, mask).
  friend auto operator<=>(IdealSet a, IdealSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.mask <=> b.mask;
  }
};

struct Cover {
  NodeId lower;
  NodeId upper;
  friend bool operator==(const Cover&, const Cover&) = default;
};

/// One maximal chain of the zigzag. `nodes` runs from the first endpoint to
/// the last along the zigzag (so it ascends for odd segments).
struct Segment {
  int index = 0;  // 1-based
  bool ascending = true;
  std::vector<NodeId> nodes;

  int length() const noexcept { return static_cast<int>(nodes.size()) - 1; }
  /// Interior nodes, smallest first.
  std::vector<NodeId> unshared_bottom_up() const;
};

/// A peak or valley flanked by two segments; `left` is the segment that ends
/// at the node, `right` the one that starts there (cyclically for x_1).
struct SharedNode {
  NodeId node = 0;
  int left = 0;
  int right = 0;
};

/// Fence or circular fence poset of a composition.
class ZigzagPoset {
 public:
  static ZigzagPoset fence(const Composition& alpha);
  static ZigzagPoset circular(const Composition& alpha);

  Kind kind() const noexcept { return kind_; }
  const Composition& composition() const noexcept { return alpha_; }
  int node_count() const noexcept { return node_count_; }
  /// One cover per unit step, in zigzag order. For circular (1,1) the two
  /// steps give the same pair.
  const std::vector<Cover>& covers() const noexcept { return covers_; }
  const std::vector<Segment>& segments() const noexcept { return segments_; }
  const std::vector<SharedNode>& shared_tops() const noexcept { return tops_; }
  const std::vector<SharedNode>& shared_bottoms() const noexcept { return bottoms_; }

  /// Lowest-indexed segment containing x.
  int segment_of(NodeId x) const;
  bool is_shared(NodeId x) const;
  /// Step between x_k and x_{k+1} (k is 1-based; wraps for circular).
  const std::vector<Step>& steps() const noexcept { return steps_; }

  // Mask-level operations; all require node_count() <= 64.
  Mask full_mask() const;
  Mask lower_covers(NodeId x) const { return below_.at(static_cast<std::size_t>(x)); }
  Mask upper_covers(NodeId x) const { return above_.at(static_cast<std::size_t>(x)); }
  bool is_ideal(Mask s) const;
  Mask down_closure(Mask s) const;
  Mask up_closure(Mask s) const;
  /// Maximal elements of the subset (w.r.t. the induced order on s).
  Mask maximal_elements(Mask s) const;
  Mask minimal_elements(Mask s) const;

  /// Maximal runs of consecutive nodes of `keep` along the zigzag, each given
  /// by the steps between its nodes. Requires keep != all nodes when circular.
  std::vector<std::vector<Step>> induced_runs(Mask keep) const;

 private:
  ZigzagPoset() = default;
  void build(const Composition& alpha, Kind kind);
  void require_mask_capacity() const;

  Kind kind_ = Kind::Fence;
  Composition alpha_;
  int node_count_ = 0;
  std::vector<Step> steps_;
  std::vector<Cover> covers_;
  std::vector<Segment> segments_;
  std::vector<SharedNode> tops_;
  std::vector<SharedNode> bottoms_;
  std::vector<int> segment_of_;  // indexed by node id
  std::vector<Mask> below_;      // indexed by node id
  std::vector<Mask> above_;
};

inline ZigzagPoset fence(const Composition& alpha) { return ZigzagPoset::fence(alpha); }
inline ZigzagPoset circular_fence(const Composition& alpha) {
  return ZigzagPoset::circular(alpha);
}

bool is_ideal(const ZigzagPoset& p, Mask s);

/// All ideals, sorted by (size, mask). Breadth-first over the ideal lattice.
std::vector<IdealSet> enumerate_ideals(const ZigzagPoset& p,
                                       std::size_t bound = kDefaultIdealBound);

/// Same contract as enumerate_ideals, by filtering all 2^n subsets.
std::vector<IdealSet> enumerate_ideals_exhaustive(const ZigzagPoset& p,
                                                  std::size_t bound = 18);

}  // namespace fence
