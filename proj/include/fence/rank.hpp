#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fence/composition.hpp"
#include "fence/poset.hpp"
#include "fence/rank_poly.hpp"

namespace fence {

/// Rank polynomial of the path whose consecutive nodes are related by `steps`.
/// An empty step list is a single node.
RankPoly path_rank_poly(const std::vector<Step>& steps);

/// Rank polynomial of the cycle x_1 .. x_n where steps[k-1] relates x_k to
/// x_{k+1} and steps[n-1] closes x_n back onto x_1.
RankPoly cycle_rank_poly(const std::vector<Step>& steps);

RankPoly rank_poly(const Composition& alpha, Kind kind = Kind::Fence);
RankPoly rank_poly(const ZigzagPoset& p);

/// Counts ideals from enumerate_ideals. Independent of the scan above.
RankPoly rank_poly_oracle(const Composition& alpha, Kind kind = Kind::Fence,
                          int max_size = 20);

/// Read a step sequence back as a (possibly half-open) composition.
Composition composition_of_steps(const std::vector<Step>& steps);

/// Ideals containing `forced_in` and avoiding `forced_out`.
struct Conditioned {
  RankPoly poly;
  int forced = 0;                   // size of the down-closure of forced_in
  std::vector<Composition> pieces;  // fences left after deleting forced nodes
};
Conditioned condition(const ZigzagPoset& p, Mask forced_in, Mask forced_out);

struct IdentityCheck {
  std::string name;
  std::string statement;
  RankPoly lhs;
  RankPoly rhs;
  std::vector<Composition> pieces;
  std::optional<CoefficientMismatch> mismatch;
  bool pass() const { return !mismatch.has_value(); }
};

struct MethodReport {
  Composition alpha;
  std::vector<IdentityCheck> checks;
  bool pass() const;
};

/// The four ways of closing a fence into a circular fence. Requires an even
/// number of parts.
MethodReport verify_method_identities(const Composition& alpha);

}  // namespace fence
