#include <doctest.h>

#include <bit>
#include <map>
#include <random>
#include <set>

#include "fence/rank.hpp"
#include "fence/rowmotion.hpp"
#include "oracle.hpp"

using namespace fence;

namespace {

std::vector<oracle::OrbitSummary> census(const Composition& a) {
  const ZigzagPoset p = circular_fence(a);
  std::vector<oracle::OrbitSummary> out;
  for (const auto& o : orbits(p, 64)) {
    const OrbitStats st = orbit_stats(o, p);
    out.push_back({st.period, st.M, st.chi});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::multiset<long> periods(const Composition& a) {
  std::multiset<long> out;
  for (const auto& o : orbits(circular_fence(a), 64)) out.insert(static_cast<long>(o.period()));
  return out;
}

}  // namespace

TEST_CASE("rowmotion basics") {
  const ZigzagPoset p = circular_fence(Composition{3, 1, 3, 1});
  CHECK(rowmotion(p, IdealSet{p.full_mask()}) == IdealSet{0});
  CHECK(rowmotion(p, IdealSet{0}) == IdealSet{p.minimal_elements(p.full_mask())});
  CHECK_THROWS_AS(rowmotion(p, IdealSet{bit(2)}), std::invalid_argument);
  for (const IdealSet& i : enumerate_ideals(p)) {
    CHECK(rowmotion_inverse(p, rowmotion(p, i)) == i);
    CHECK(rowmotion(p, rowmotion_inverse(p, i)) == i);
  }
}

TEST_CASE("rowmotion agrees with the brute-force reference") {
  for (int n = 2; n <= 9; ++n)
    for (const auto& a : even_compositions_of(n)) {
      const ZigzagPoset p = circular_fence(a);
      const oracle::Poset q = oracle::build(a.parts(), true);
      for (const IdealSet& i : enumerate_ideals(p)) CHECK(rowmotion(p, i).mask == oracle::rowmotion(q, i.mask));
    }
}

TEST_CASE("orbit partition") {
  for (int n = 2; n <= 10; ++n)
    for (const auto& a : even_compositions_of(n)) {
      const ZigzagPoset p = circular_fence(a);
      const auto os = orbits(p);
      std::size_t total = 0;
      for (std::size_t k = 0; k < os.size(); ++k) {
        const Orbit& o = os[k];
        total += o.period();
        for (std::size_t j = 0; j < o.period(); ++j) {
          CHECK(rowmotion(p, o.ideals[j]) == o.ideals[(j + 1) % o.period()]);
          CHECK(o.canonical_rep() <= o.ideals[j].mask);
        }
        if (k > 0) CHECK(std::make_pair(os[k - 1].period(), os[k - 1].canonical_rep()) <
                         std::make_pair(o.period(), o.canonical_rep()));
      }
      CHECK(mpz_class(static_cast<unsigned long>(total)) == poly_eval_at_one(rank_poly(a, Kind::Circular)));
      CHECK(census(a) == oracle::orbit_census(a.parts()));
    }
}

TEST_CASE("worked orbit examples") {
  CHECK(periods(Composition{3, 1, 3, 1}) == std::multiset<long>{5, 9, 9});
  CHECK(periods(Composition{4, 8}) == std::multiset<long>{8, 8, 8, 10});
  CHECK(periods(Composition{1, 1}) == std::multiset<long>{3});

  const auto c = census(Composition{3, 1, 3, 1});
  REQUIRE(c.size() == 3);
  CHECK(c[0].M == 8);
  CHECK(c[0].chi == 20);
  CHECK(c[1].M == 14);
  CHECK(c[1].chi == 36);
  CHECK(c[2].M == 14);

  const auto one = census(Composition{1, 1});
  CHECK(one[0].M == 2);
  CHECK(one[0].chi == 3);

  // a = 2: classes of size 2, 3, 4 and 8
  CHECK(periods(Composition{2, 2, 2, 2}) == std::multiset<long>{2, 3, 3, 3, 3, 4, 8, 8});
  CHECK(enumerate_ideals(circular_fence(Composition{3, 3, 3, 3})).size() == 119);
}

TEST_CASE("per-node statistics add up") {
  const ZigzagPoset p = circular_fence(Composition{2, 1, 1, 3});
  for (const auto& o : orbits(p)) {
    const OrbitStats st = orbit_stats(o, p);
    long m = 0, chi = 0;
    for (const IdealSet& i : o.ideals) {
      m += std::popcount(p.maximal_elements(i.mask));
      chi += i.size();
    }
    CHECK(st.M == m);
    CHECK(st.chi == chi);
    CHECK(st.M_x.size() == 8);
    CHECK(st.M_x[0] == 0);
  }
}

TEST_CASE("row counts satisfy the row identity") {
  for (int n = 2; n <= 10; ++n)
    for (const auto& a : even_compositions_of(n)) {
      const ZigzagPoset p = circular_fence(a);
      for (const auto& o : orbits(p)) {
        const OrbitStats st = orbit_stats(o, p);
        const std::size_t rows = st.rows.size();
        for (std::size_t i = 0; i < rows; ++i) {
          const RowCounts& r = st.rows[i];
          CHECK(r.w * a.parts()[i] + r.r + st.rows[(i + rows - 1) % rows].r == st.period);
          if (r.b > 0) CHECK(r.b == r.w);
        }
      }
    }
}

TEST_CASE("complement map") {
  const ZigzagPoset p = circular_fence(Composition{2, 1, 1, 3});
  const ZigzagPoset q = kappa_poset(p);
  CHECK(q.composition() == Composition{3, 2, 1, 1});
  CHECK(kappa(p, IdealSet{p.full_mask()}) == IdealSet{0});
  CHECK(kappa(p, IdealSet{0}).mask == q.full_mask());
  for (const IdealSet& i : enumerate_ideals(p)) {
    const IdealSet k = kappa(p, i);
    CHECK(q.is_ideal(k.mask));
    CHECK(kappa(p, rowmotion(p, i)) == rowmotion_inverse(q, k));
  }
  for (const auto& o : orbits(p)) {
    const Orbit image = kappa_orbit(p, o);
    for (std::size_t j = 0; j < image.period(); ++j)
      CHECK(rowmotion(q, image.ideals[j]) == image.ideals[(j + 1) % image.period()]);
    const OrbitStats a = orbit_stats(o, p), b = orbit_stats(image, q);
    CHECK(a.M == b.M);
    CHECK(a.chi + b.chi == 7 * a.period);
  }
  CHECK_THROWS_AS(kappa(fence::fence(Composition{1, 1}), IdealSet{0}), std::invalid_argument);
}

TEST_CASE("complement map reports") {
  for (int n = 2; n <= 10; ++n)
    for (const auto& a : even_compositions_of(n)) {
      INFO(a.to_string());
      CHECK(verify_kappa(a).theorem_ok());
    }
}

TEST_CASE("homomesy reports") {
  for (int n = 2; n <= 10; ++n)
    for (const auto& a : even_compositions_of(n)) {
      INFO(a.to_string());
      CHECK(verify_homomesy(a).theorem_ok());
    }
  const Report twos = verify_homomesy(Composition{2, 2, 2, 2});
  CHECK(std::any_of(twos.records.begin(), twos.records.end(),
                    [](const CheckRecord& r) { return r.check == "homomesy-all-two" && r.pass; }));
  CHECK(verify_homomesy(Composition{3, 1, 3, 1}).tallies.at("chi-homomesic") == 1);
  CHECK(verify_homomesy(Composition{1, 1}).theorem_ok());
}

TEST_CASE("chi is (a+b)/2-mesic on two-part fences") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b)
      for (const auto& s : census(Composition{a, b})) CHECK(2 * s.chi == (a + b) * s.period);
}

TEST_CASE("orbit families") {
  for (Family f : {Family::TwoParts, Family::AOneAOne, Family::OneOneAOne, Family::TwoOneAOne, Family::FourEqual}) {
    const int lo = f == Family::TwoParts || f == Family::OneOneAOne ? 1 : 2;
    const int hi = f == Family::FourEqual ? 3 : 6;
    INFO(family_name(f));
    CHECK(verify_orbit_theorems(f, lo, hi).theorem_ok());
  }
  CHECK_THROWS_AS(verify_orbit_theorem(Family::TwoParts, {3}), std::invalid_argument);
  CHECK_THROWS_AS(verify_orbit_theorem(Family::FourEqual, {1}), std::invalid_argument);
}

TEST_CASE("(a,1,a,1) census") {
  // a = 4: two orbits of 11 with M = 18, two of 6 with M = 10
  const auto c = census(Composition{4, 1, 4, 1});
  std::map<long, std::pair<int, long>> by_period;
  for (const auto& s : c) {
    by_period[s.period].first++;
    by_period[s.period].second = s.M;
  }
  CHECK(by_period.size() == 2);
  CHECK(by_period[6] == std::make_pair(2, 10L));
  CHECK(by_period[11] == std::make_pair(2, 18L));
}

TEST_CASE("printed (a,1,a,1) claim fails at a = 2") {
  const Report r = verify_orbit_theorem(Family::AOneAOne, {2});
  CHECK(r.theorem_ok());
  CHECK(r.failures(Severity::PaperTypoConfirmed) == 1);
  CHECK(periods(Composition{2, 1, 2, 1}) == std::multiset<long>{4, 10});
}
