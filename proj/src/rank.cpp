#include "fence/rank.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fence {

namespace {

using Coeffs = std::vector<mpz_class>;

// Coefficient vectors indexed by ideal size; q* means "shift up by one".
Coeffs times_q(const Coeffs& a) {
  Coeffs r;
  r.reserve(a.size() + 1);
  r.emplace_back(0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

Coeffs sum(const Coeffs& a, const Coeffs& b) {
  Coeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

struct State {
  Coeffs in;   // current node in the ideal
  Coeffs out;  // current node outside
};

// Up: x_k < x_{k+1}, so x_{k+1} in forces x_k in.
// Down: x_k > x_{k+1}, so x_k in forces x_{k+1} in.
State advance(const State& s, Step step) {
  if (step == Step::Up) return {times_q(s.in), sum(s.in, s.out)};
  return {times_q(sum(s.in, s.out)), s.out};
}

State scan(State s, const std::vector<Step>& steps, std::size_t count) {
  for (std::size_t k = 0; k < count; ++k) s = advance(s, steps[k]);
  return s;
}

RankPoly to_poly(Coeffs c) { return RankPoly(0, std::move(c)); }

}  // namespace

RankPoly path_rank_poly(const std::vector<Step>& steps) {
  const State end = scan({{0, 1}, {1}}, steps, steps.size());
  return to_poly(sum(end.in, end.out));
}

RankPoly cycle_rank_poly(const std::vector<Step>& steps) {
  if (steps.size() < 2) throw std::invalid_argument("a cycle needs at least two steps");
  const std::size_t n = steps.size();
  const Step closing = steps[n - 1];
  // x_1 in: x_n out is only allowed when x_n sits above x_1.
  const State a = scan({{0, 1}, {}}, steps, n - 1);
  const Coeffs with_first = closing == Step::Up ? a.in : sum(a.in, a.out);
  // x_1 out: x_n in is only allowed when x_n sits below x_1.
  const State b = scan({{}, {1}}, steps, n - 1);
  const Coeffs without_first = closing == Step::Up ? sum(b.in, b.out) : b.out;
  return to_poly(sum(with_first, without_first));
}

RankPoly rank_poly(const Composition& alpha, Kind kind) {
  if (alpha.length() == 0) throw std::invalid_argument("empty composition");
  if (kind == Kind::Fence) return path_rank_poly(alpha.steps());
  if (!alpha.circular_ok())
    throw std::invalid_argument("circular fence needs an even number of positive parts, got " +
                                alpha.to_string());
  return cycle_rank_poly(alpha.steps());
}

RankPoly rank_poly(const ZigzagPoset& p) { return rank_poly(p.composition(), p.kind()); }

RankPoly rank_poly_oracle(const Composition& alpha, Kind kind, int max_size) {
  if (alpha.size() > max_size)
    throw BoundExceeded("oracle limited to size " + std::to_string(max_size));
  const ZigzagPoset p = kind == Kind::Fence ? fence(alpha) : circular_fence(alpha);
  std::vector<mpz_class> counts(static_cast<std::size_t>(p.node_count()) + 1, 0);
  for (const IdealSet& i : enumerate_ideals(p, static_cast<std::size_t>(max_size) + 1))
    counts[static_cast<std::size_t>(i.size())] += 1;
  return RankPoly(0, std::move(counts));
}

Composition composition_of_steps(const std::vector<Step>& steps) {
  std::vector<int> parts;
  Step dir = Step::Up;
  parts.push_back(0);
  for (Step s : steps) {
    if (s != dir) {
      parts.push_back(0);
      dir = s;
    }
    ++parts.back();
  }
  return Composition::half_open(std::move(parts));
}

Conditioned condition(const ZigzagPoset& p, Mask forced_in, Mask forced_out) {
  Conditioned out;
  const Mask down = p.down_closure(forced_in);
  const Mask up = p.up_closure(forced_out);
  if (down & up) return out;
  out.forced = std::popcount(down);
  const Mask keep = p.full_mask() & ~(down | up);
  if (keep == p.full_mask()) {
    out.poly = rank_poly(p);
    out.pieces.push_back(p.composition());
    return out;
  }
  RankPoly total = RankPoly::monomial(out.forced);
  for (const auto& run : p.induced_runs(keep)) {
    total *= path_rank_poly(run);
    out.pieces.push_back(composition_of_steps(run));
  }
  out.poly = std::move(total);
  return out;
}

bool MethodReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.pass(); });
}

namespace {

IdentityCheck make_check(std::string name, std::string statement, RankPoly lhs, RankPoly rhs,
                         std::vector<Composition> pieces) {
  IdentityCheck c{std::move(name), std::move(statement), std::move(lhs), std::move(rhs),
                  std::move(pieces), std::nullopt};
  c.mismatch = first_mismatch(c.lhs, c.rhs);
  return c;
}

std::vector<int> bumped(const Composition& a, bool first, bool last) {
  std::vector<int> parts = a.parts();
  if (first) ++parts.front();
  if (last) ++parts.back();
  return parts;
}

}  // namespace

MethodReport verify_method_identities(const Composition& alpha) {
  if (alpha.length() % 2 != 0 || alpha.is_half_open())
    throw std::invalid_argument("closing identities need an even number of positive parts");
  MethodReport report{alpha, {}};
  const ZigzagPoset f = fence(alpha);
  const int n = alpha.size();
  const NodeId first = 1, last = n + 1;
  const RankPoly r = rank_poly(alpha);

  // M1: split by membership of the two end nodes, then glue them.
  {
    const Conditioned both = condition(f, bit(first) | bit(last), 0);
    const Conditioned left = condition(f, bit(first), bit(last));
    const Conditioned right = condition(f, bit(last), bit(first));
    const Conditioned avoid = condition(f, 0, bit(first) | bit(last));
    std::vector<Composition> pieces = both.pieces;
    pieces.insert(pieces.end(), left.pieces.begin(), left.pieces.end());
    pieces.insert(pieces.end(), right.pieces.begin(), right.pieces.end());
    report.checks.push_back(make_check("M1", "R(a) = both + left + right + neither", r,
                                       both.poly + left.poly + right.poly + avoid.poly, pieces));
    report.checks.push_back(make_check("M1-glue", "Rc(a) = q^-1 both + neither",
                                       rank_poly(alpha, Kind::Circular),
                                       poly_shift(both.poly, -1) + avoid.poly, both.pieces));
  }
  // M2: add x_{n+1} < x_1; the lost ideals hold x_1 but not x_{n+1}.
  {
    const Composition closed(bumped(alpha, true, false));
    const Conditioned lost = condition(f, bit(first), bit(last));
    report.checks.push_back(make_check("M2", "R(a) = Rc(a_1+1, ...) + [x_1 in, x_{n+1} out]", r,
                                       rank_poly(closed, Kind::Circular) + lost.poly,
                                       lost.pieces));
  }
  // M3: a new top above both ends; it is the last node of F(a,1,1).
  {
    std::vector<int> parts = alpha.parts();
    parts.push_back(1);
    parts.push_back(1);
    const Composition closed(parts);
    const ZigzagPoset c = circular_fence(closed);
    const Conditioned with_top = condition(c, bit(n + 2), 0);
    report.checks.push_back(make_check("M3", "R(a) = Rc(a,1,1) - [x_0 in]", r,
                                       rank_poly(c) - with_top.poly, with_top.pieces));
  }
  // M4: a new bottom below both ends; it is the first node of the closed fence.
  {
    const Composition closed(bumped(alpha, true, true));
    const ZigzagPoset c = circular_fence(closed);
    const Conditioned without_bottom = condition(c, 0, bit(1));
    report.checks.push_back(make_check("M4", "q R(a) = Rc(a_1+1, ..., a_2s+1) - [x_0 out]",
                                       poly_shift(r, 1), rank_poly(c) - without_bottom.poly,
                                       without_bottom.pieces));
  }
  return report;
}

}  // namespace fence
