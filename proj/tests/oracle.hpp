#pragma once

// Brute-force reference used by the tests. Shares no code with the library:
// covers are rebuilt from the parts, ideals come from filtering every subset.

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

struct Poset {
  int nodes = 0;
  std::vector<std::pair<int, int>> covers;  // (lower, upper), 0-based
};

// Odd-numbered parts go up. A 0 part adds no steps.
inline Poset build(const std::vector<int>& parts, bool circular) {
  Poset p;
  int steps = 0;
  for (int a : parts) steps += a;
  p.nodes = circular ? steps : steps + 1;
  int k = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (int j = 0; j < parts[i]; ++j, ++k) {
      const int here = k, next = circular ? (k + 1) % steps : k + 1;
      if (i % 2 == 0) p.covers.emplace_back(here, next);
      else p.covers.emplace_back(next, here);
    }
  }
  return p;
}

inline bool is_ideal(const Poset& p, std::uint64_t m) {
  for (auto [lo, hi] : p.covers)
    if ((m >> hi & 1) && !(m >> lo & 1)) return false;
  return true;
}

inline std::vector<std::uint64_t> ideals(const Poset& p) {
  if (p.nodes > 22) throw std::length_error("oracle limited to 22 nodes");
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.nodes); ++m)
    if (is_ideal(p, m)) out.push_back(m);
  return out;
}

inline std::vector<long> rank_sequence(const std::vector<int>& parts, bool circular) {
  const Poset p = build(parts, circular);
  std::vector<long> seq(static_cast<std::size_t>(p.nodes) + 1, 0);
  for (auto m : ideals(p)) ++seq[static_cast<std::size_t>(__builtin_popcountll(m))];
  while (seq.size() > 1 && seq.back() == 0) seq.pop_back();
  return seq;
}

inline std::uint64_t maxima(const Poset& p, std::uint64_t m) {
  std::uint64_t out = m;
  for (auto [lo, hi] : p.covers)
    if ((m >> hi & 1)) out &= ~(std::uint64_t{1} << lo);
  return out;
}

inline std::uint64_t rowmotion(const Poset& p, std::uint64_t m) {
  const std::uint64_t full = (std::uint64_t{1} << p.nodes) - 1;
  const std::uint64_t rest = full & ~m;
  std::uint64_t mins = rest;
  for (auto [lo, hi] : p.covers)
    if (rest >> lo & 1) mins &= ~(std::uint64_t{1} << hi);
  std::uint64_t closed = mins;
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [lo, hi] : p.covers)
      if ((closed >> hi & 1) && !(closed >> lo & 1)) {
        closed |= std::uint64_t{1} << lo;
        grew = true;
      }
  }
  return closed;
}

struct OrbitSummary {
  long period = 0;
  long M = 0;
  long chi = 0;
  bool operator<(const OrbitSummary& o) const {
    return std::tie(period, M, chi) < std::tie(o.period, o.M, o.chi);
  }
  bool operator==(const OrbitSummary& o) const { return period == o.period && M == o.M && chi == o.chi; }
};

// Orbit summaries sorted by (period, M, chi).
inline std::vector<OrbitSummary> orbit_census(const std::vector<int>& parts) {
  const Poset p = build(parts, true);
  std::map<std::uint64_t, bool> seen;
  std::vector<OrbitSummary> out;
  for (auto start : ideals(p)) {
    if (seen[start]) continue;
    OrbitSummary s;
    std::uint64_t cur = start;
    do {
      seen[cur] = true;
      ++s.period;
      s.M += __builtin_popcountll(maxima(p, cur));
      s.chi += __builtin_popcountll(cur);
      cur = rowmotion(p, cur);
    } while (cur != start);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
