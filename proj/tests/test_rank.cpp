#include <doctest.h>

#include <random>

#include "fence/rank.hpp"
#include "oracle.hpp"

using namespace fence;

namespace {

std::vector<long> seq(const Composition& a, Kind k = Kind::Fence) { return rank_poly(a, k).small_sequence(); }

Composition random_composition(std::mt19937& rng, int size, bool even) {
  for (;;) {
    std::vector<int> parts;
    int left = size;
    while (left > 0) {
      const int p = std::uniform_int_distribution<int>(1, std::min(left, 5))(rng);
      parts.push_back(p);
      left -= p;
    }
    if (!even || parts.size() % 2 == 0) return Composition(parts);
  }
}

}  // namespace

TEST_CASE("worked rank sequences") {
  CHECK(seq(Composition{2, 1, 1, 3}) == std::vector<long>{1, 3, 5, 6, 6, 5, 3, 2, 1});
  CHECK(seq(Composition{2, 1, 1, 3}, Kind::Circular) == std::vector<long>{1, 2, 3, 4, 4, 3, 2, 1});
  CHECK(seq(Composition{3, 1, 1, 3}, Kind::Circular) == std::vector<long>{1, 2, 3, 5, 5, 5, 3, 2, 1});
  CHECK(seq(Composition{1}) == std::vector<long>{1, 1, 1});
  CHECK(seq(Composition{1, 1}, Kind::Circular) == std::vector<long>{1, 1, 1});
  CHECK(seq(Composition::half_open({0, 2})) == std::vector<long>{1, 1, 1, 1});
}

TEST_CASE("flat middle of (a,1,1,1)") {
  for (int a = 3; a <= 10; ++a) {
    std::vector<long> want{1, 3, 4};
    want.insert(want.end(), static_cast<std::size_t>(a - 2), 5);
    want.insert(want.end(), {4, 3, 2, 1});
    CHECK(seq(Composition{a, 1, 1, 1}) == want);
  }
}

TEST_CASE("dynamic program matches subset filtering") {
  for (int n = 1; n <= 10; ++n)
    for (const auto& a : compositions_of(n)) {
      CHECK(seq(a) == oracle::rank_sequence(a.parts(), false));
      if (a.circular_ok()) CHECK(seq(a, Kind::Circular) == oracle::rank_sequence(a.parts(), true));
    }
}

TEST_CASE("random larger compositions against both oracles") {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const Composition a = random_composition(rng, std::uniform_int_distribution<int>(11, 17)(rng), i % 2 == 0);
    CHECK(seq(a) == oracle::rank_sequence(a.parts(), false));
    CHECK(rank_poly(a) == rank_poly_oracle(a));
    if (a.circular_ok()) {
      CHECK(seq(a, Kind::Circular) == oracle::rank_sequence(a.parts(), true));
      CHECK(rank_poly(a, Kind::Circular) == rank_poly_oracle(a, Kind::Circular));
    }
  }
}

TEST_CASE("half-open compositions against subset filtering") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& a : compositions_of(n)) {
      std::vector<int> lead{0};
      lead.insert(lead.end(), a.parts().begin(), a.parts().end());
      std::vector<int> both = lead;
      both.push_back(0);
      CHECK(seq(Composition::half_open(lead)) == oracle::rank_sequence(lead, false));
      CHECK(seq(Composition::half_open(both)) == oracle::rank_sequence(both, false));
    }
}

TEST_CASE("palindromic symmetry of reversal") {
  // Reversing an odd number of parts flips the fence upside down.
  std::mt19937 rng(11);
  for (int i = 0; i < 60; ++i) {
    const Composition a = random_composition(rng, std::uniform_int_distribution<int>(2, 14)(rng), false);
    const RankPoly r = rank_poly(a);
    if (a.length() % 2 == 1) {
      CHECK(rank_poly(a.reversed()) == poly_reverse(r, a.size() + 1));
    } else {
      CHECK(rank_poly(a.reversed()) == r);
    }
  }
}

TEST_CASE("oracle bound") {
  CHECK_THROWS_AS(rank_poly_oracle(Composition{20, 5}), BoundExceeded);
}

TEST_CASE("composition of steps") {
  CHECK(composition_of_steps(Composition{2, 1, 1, 3}.steps()) == Composition{2, 1, 1, 3});
  CHECK(composition_of_steps({Step::Down, Step::Up}).is_half_open());
}

TEST_CASE("conditioning on forced nodes") {
  const ZigzagPoset p = fence::fence(Composition{2, 1, 1, 3});
  // ideals containing x8 but not x1 are ideals of F(1,2) shifted by one
  const Conditioned c = condition(p, bit(8), bit(1));
  CHECK(c.forced == 1);
  CHECK(c.poly == poly_shift(rank_poly(Composition{1, 2}), 1));
  // contradictory constraints
  CHECK(condition(p, bit(3), bit(2)).poly.is_zero());
  // no constraints recovers the whole polynomial
  CHECK(condition(p, 0, 0).poly == rank_poly(p));
}

TEST_CASE("closing identities on the worked example") {
  const MethodReport r = verify_method_identities(Composition{2, 1, 1, 3});
  CHECK(r.checks.size() == 5);
  for (const auto& c : r.checks) {
    INFO(c.name);
    CHECK(c.pass());
  }
  CHECK(r.pass());
  CHECK_THROWS_AS(verify_method_identities(Composition{2, 1, 1}), std::invalid_argument);
}

TEST_CASE("closing identities over even compositions") {
  for (int n = 2; n <= 9; ++n)
    for (const auto& a : even_compositions_of(n)) CHECK(verify_method_identities(a).pass());
}

TEST_CASE("rank polynomial of the poset overload") {
  const Composition a{3, 2, 2, 1};
  CHECK(rank_poly(circular_fence(a)) == rank_poly(a, Kind::Circular));
  CHECK(rank_poly(fence::fence(a)) == rank_poly(a));
}
