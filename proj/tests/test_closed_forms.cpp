#include <doctest.h>

#include "fence/closed_forms.hpp"
#include "fence/rank.hpp"
#include "oracle.hpp"

using namespace fence;

namespace {

RankPoly brute(const Composition& a) { return RankPoly::from_sequence(oracle::rank_sequence(a.parts(), true)); }

}  // namespace

TEST_CASE("q-integers") {
  CHECK(q_int(0).is_zero());
  CHECK(q_int(1) == RankPoly{1});
  CHECK(q_int(4) == RankPoly{1, 1, 1, 1});
  CHECK_THROWS_AS(q_int(-1), std::invalid_argument);
}

TEST_CASE("Chebyshev recurrence") {
  CHECK(chebyshev_T(0) == RankPoly{1});
  CHECK(chebyshev_T(1) == RankPoly{0, 1});
  CHECK(chebyshev_T(2) == RankPoly{-1, 0, 2});
  CHECK(chebyshev_T(3) == RankPoly{0, -3, 0, 4});
  CHECK(chebyshev_T(4) == RankPoly{1, 0, -8, 0, 8});
  // leading coefficient 2^(k-1)
  CHECK(chebyshev_T(6).coeff(6) == 32);
}

TEST_CASE("trace form") {
  // k = 1: 2 z^h (u / 2 z^h) = u
  CHECK(trace_form(1, RankPoly{1, 1, 1}, 3) == RankPoly{1, 1, 1});
  // k = 2: u^2 - 2 q^h
  CHECK(trace_form(2, RankPoly{1, 1}, 1) == RankPoly{1, 0, 1});
  // k = 3: u^3 - 3 u q^h
  CHECK(trace_form(3, RankPoly{1, 1}, 2) == RankPoly{1, 3, 3, 1} - RankPoly(2, {3, 3}));
}

TEST_CASE("two-part closed form against subset filtering") {
  for (int a = 1; a <= 6; ++a)
    for (int b = 1; b <= 6; ++b) {
      const Composition c{a, b};
      const auto forms = closed_forms(c);
      REQUIRE(forms.size() == 1);
      CHECK(forms[0].pattern == Pattern::TwoParts);
      CHECK(forms[0].poly == brute(c));
      CHECK(forms[0].count == a * b + 2);
    }
}

TEST_CASE("four-part closed forms against subset filtering") {
  for (int a = 1; a <= 4; ++a)
    for (int b = 1; b <= 4; ++b)
      for (int c = 1; c <= 4; ++c)
        for (int d = 1; d <= 4; ++d) {
          const Composition alpha{a, b, c, d};
          const RankPoly want = brute(alpha);
          for (const auto& f : closed_forms(alpha)) {
            INFO(alpha.to_string(), " ", pattern_name(f.pattern));
            CHECK(f.poly == want);
            CHECK(f.count == poly_eval_at_one(want));
          }
        }
}

TEST_CASE("pattern matching") {
  CHECK(closed_form(Composition{4, 1, 2, 1})->pattern == Pattern::OneSeparated);
  CHECK(closed_form(Composition{1, 4, 1, 2})->pattern == Pattern::OneSeparated);
  CHECK(closed_form(Composition{3, 3, 3, 3})->pattern == Pattern::FourEqual);
  CHECK(closed_form(Composition{2, 3, 4, 5})->pattern == Pattern::FourParts);
  CHECK_FALSE(closed_form(Composition{1, 1, 1, 1, 1, 1}));
  CHECK(closed_forms(Composition{1, 1, 1, 1}).size() == 3);
}

TEST_CASE("dropping the cross term loses ideals meeting every segment") {
  const Composition alpha{2, 3, 1, 2};
  const RankPoly full = rank_poly(alpha, Kind::Circular);
  const RankPoly missing = full - four_parts_without_cross_term(2, 3, 1, 2);
  CHECK(missing == RankPoly::monomial(2) * q_int(2) * q_int(3) * q_int(1) * q_int(2));
  CHECK(four_equal_without_shift(2) != rank_poly(Composition{2, 2, 2, 2}, Kind::Circular));
}

TEST_CASE("crown formula") {
  for (int a = 1; a <= 5; ++a)
    for (int s = 1; s <= 3; ++s) {
      std::vector<int> parts;
      for (int i = 0; i < s; ++i) parts.insert(parts.end(), {1, a});
      const Composition alpha(parts);
      INFO(alpha.to_string());
      CHECK(crown_formula(a, s) == brute(alpha));
    }
}

TEST_CASE("swapped crown parameters") {
  for (int a = 2; a <= 5; ++a)
    for (int s = 2; s <= 4; ++s) CHECK(crown_formula_swapped(a, s) == crown_formula(s - 1, a - 1));
  CHECK(crown_formula_swapped(4, 2) != crown_formula(4, 2));
  CHECK_THROWS_AS(crown_formula(0, 1), std::invalid_argument);
}
