#include "fence/poset.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

namespace fence {

std::vector<NodeId> Segment::unshared_bottom_up() const {
  if (nodes.size() < 3) return {};
  std::vector<NodeId> out(nodes.begin() + 1, nodes.end() - 1);
  if (!ascending) std::reverse(out.begin(), out.end());
  return out;
}

ZigzagPoset ZigzagPoset::fence(const Composition& alpha) {
  if (alpha.length() == 0) throw std::invalid_argument("empty composition");
  ZigzagPoset p;
  p.build(alpha, Kind::Fence);
  return p;
}

ZigzagPoset ZigzagPoset::circular(const Composition& alpha) {
  if (!alpha.circular_ok())
    throw std::invalid_argument("circular fence needs an even number of positive parts, got " +
                                alpha.to_string());
  ZigzagPoset p;
  p.build(alpha, Kind::Circular);
  return p;
}

void ZigzagPoset::build(const Composition& alpha, Kind kind) {
  kind_ = kind;
  alpha_ = alpha;
  const int n = alpha.size();
  node_count_ = kind == Kind::Fence ? n + 1 : n;
  steps_ = alpha.steps();
  auto wrap = [&](int pos) { return pos % node_count_ + 1; };  // 0-based position -> id

  segment_of_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  below_.assign(static_cast<std::size_t>(node_count_) + 1, 0);
  above_.assign(static_cast<std::size_t>(node_count_) + 1, 0);

  int pos = 0;
  const auto& parts = alpha.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Segment seg;
    seg.index = static_cast<int>(i) + 1;
    seg.ascending = (i % 2 == 0);
    for (int k = 0; k <= parts[i]; ++k) seg.nodes.push_back(wrap(pos + k));
    for (int k = 0; k < parts[i]; ++k) {
      const NodeId a = wrap(pos + k), b = wrap(pos + k + 1);
      covers_.push_back(seg.ascending ? Cover{a, b} : Cover{b, a});
    }
    pos += parts[i];
    segments_.push_back(std::move(seg));
  }

  for (const auto& c : covers_) {
    below_[static_cast<std::size_t>(c.upper)] |= bit(c.lower);
    above_[static_cast<std::size_t>(c.lower)] |= bit(c.upper);
  }

  // Segment membership: lowest index wins, so walk segments in reverse.
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it)
    for (NodeId x : it->nodes) segment_of_[static_cast<std::size_t>(x)] = it->index;

  // Shared nodes sit between two nonempty segments.
  const int s = static_cast<int>(segments_.size());
  auto record = [&](NodeId x, int left, int right, bool top) {
    (top ? tops_ : bottoms_).push_back(SharedNode{x, left, right});
  };
  for (int i = 0; i + 1 < s; ++i) {
    if (segments_[static_cast<std::size_t>(i)].length() == 0 ||
        segments_[static_cast<std::size_t>(i) + 1].length() == 0)
      continue;
    record(segments_[static_cast<std::size_t>(i)].nodes.back(), i + 1, i + 2,
           segments_[static_cast<std::size_t>(i)].ascending);
  }
  if (kind == Kind::Circular) record(1, s, 1, false);
}

void ZigzagPoset::require_mask_capacity() const {
  if (node_count_ > kMaskBits)
    throw BoundExceeded("poset has " + std::to_string(node_count_) +
                        " nodes; mask operations support at most 64");
}

int ZigzagPoset::segment_of(NodeId x) const {
  if (x < 1 || x > node_count_) throw std::out_of_range("node id out of range");
  return segment_of_[static_cast<std::size_t>(x)];
}

bool ZigzagPoset::is_shared(NodeId x) const {
  auto match = [x](const SharedNode& s) { return s.node == x; };
  return std::any_of(tops_.begin(), tops_.end(), match) ||
         std::any_of(bottoms_.begin(), bottoms_.end(), match);
}

Mask ZigzagPoset::full_mask() const {
  require_mask_capacity();
  return node_count_ == 64 ? ~Mask{0} : (Mask{1} << node_count_) - 1;
}

bool ZigzagPoset::is_ideal(Mask s) const {
  if ((s & ~full_mask()) != 0) return false;
  for (Mask rest = s; rest; rest &= rest - 1) {
    const NodeId x = std::countr_zero(rest) + 1;
    if ((below_[static_cast<std::size_t>(x)] & ~s) != 0) return false;
  }
  return true;
}

Mask ZigzagPoset::down_closure(Mask s) const {
  require_mask_capacity();
  Mask closed = s, frontier = s;
  while (frontier) {
    Mask next = 0;
    for (Mask rest = frontier; rest; rest &= rest - 1)
      next |= below_[static_cast<std::size_t>(std::countr_zero(rest) + 1)];
    frontier = next & ~closed;
    closed |= next;
  }
  return closed;
}

Mask ZigzagPoset::up_closure(Mask s) const {
  require_mask_capacity();
  Mask closed = s, frontier = s;
  while (frontier) {
    Mask next = 0;
    for (Mask rest = frontier; rest; rest &= rest - 1)
      next |= above_[static_cast<std::size_t>(std::countr_zero(rest) + 1)];
    frontier = next & ~closed;
    closed |= next;
  }
  return closed;
}

Mask ZigzagPoset::maximal_elements(Mask s) const {
  Mask out = 0;
  for (Mask rest = s; rest; rest &= rest - 1) {
    const NodeId x = std::countr_zero(rest) + 1;
    if ((above_[static_cast<std::size_t>(x)] & s) == 0) out |= bit(x);
  }
  return out;
}

Mask ZigzagPoset::minimal_elements(Mask s) const {
  Mask out = 0;
  for (Mask rest = s; rest; rest &= rest - 1) {
    const NodeId x = std::countr_zero(rest) + 1;
    if ((below_[static_cast<std::size_t>(x)] & s) == 0) out |= bit(x);
  }
  return out;
}

std::vector<std::vector<Step>> ZigzagPoset::induced_runs(Mask keep) const {
  require_mask_capacity();
  keep &= full_mask();
  std::vector<std::vector<Step>> runs;
  if (keep == 0) return runs;
  const bool circ = kind_ == Kind::Circular;
  if (circ && keep == full_mask())
    throw std::logic_error("induced_runs: whole circular fence is not a path");

  // Start right after a dropped node so that no run wraps past the start.
  int start = 1;
  if (circ)
    while (keep & bit(start)) ++start;
  const int n = node_count_;
  std::vector<Step> current;
  bool in_run = false;
  for (int k = 0; k < n; ++k) {
    const NodeId x = circ ? (start - 1 + k) % n + 1 : k + 1;
    if (!(keep & bit(x))) {
      if (in_run) runs.push_back(std::move(current));
      current.clear();
      in_run = false;
      continue;
    }
    if (in_run) {
      // step from the previous node (x-1 cyclically) to x
      const NodeId prev = (x - 2 + n) % n + 1;
      current.push_back(steps_[static_cast<std::size_t>(prev - 1)]);
    }
    in_run = true;
  }
  if (in_run) runs.push_back(std::move(current));
  return runs;
}

bool is_ideal(const ZigzagPoset& p, Mask s) { return p.is_ideal(s); }

std::vector<IdealSet> enumerate_ideals(const ZigzagPoset& p, std::size_t bound) {
  if (static_cast<std::size_t>(p.node_count()) > bound)
    throw BoundExceeded("ideal enumeration bound " + std::to_string(bound) +
                        " exceeded by " + std::to_string(p.node_count()) + " nodes");
  const Mask all = p.full_mask();
  std::unordered_set<Mask> seen{0};
  std::deque<Mask> queue{0};
  std::vector<IdealSet> out;
  while (!queue.empty()) {
    const Mask cur = queue.front();
    queue.pop_front();
    out.push_back(IdealSet{cur});
    for (Mask rest = all & ~cur; rest; rest &= rest - 1) {
      const NodeId x = std::countr_zero(rest) + 1;
      if ((p.lower_covers(x) & ~cur) != 0) continue;
      const Mask next = cur | bit(x);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IdealSet> enumerate_ideals_exhaustive(const ZigzagPoset& p, std::size_t bound) {
  if (static_cast<std::size_t>(p.node_count()) > bound)
    throw BoundExceeded("exhaustive enumeration bound " + std::to_string(bound) +
                        " exceeded by " + std::to_string(p.node_count()) + " nodes");
  std::vector<IdealSet> out;
  const Mask limit = Mask{1} << p.node_count();
  for (Mask s = 0; s < limit; ++s)
    if (p.is_ideal(s)) out.push_back(IdealSet{s});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fence
