#include <doctest.h>

#include "fence/rank.hpp"
#include "fence/shape.hpp"

using namespace fence;

namespace {

std::vector<int> v(std::initializer_list<int> x) { return x; }

}  // namespace

TEST_CASE("sequence predicates") {
  CHECK(is_unimodal(v({1, 3, 5, 6, 6, 5, 3, 2, 1})));
  CHECK(is_unimodal(v({1, 1, 1})));
  CHECK_FALSE(is_unimodal(v({1, 2, 1, 2, 1})));
  CHECK(is_symmetric(v({1, 2, 3, 2, 1})));
  CHECK_FALSE(is_symmetric(v({1, 2, 2})));
  // a_n <= a_0 <= a_{n-1} <= a_1 <= ...
  CHECK(is_bottom_interlacing(v({1, 3, 5, 6, 6, 5, 3, 2, 1})));
  CHECK_FALSE(is_top_interlacing(v({1, 3, 5, 6, 6, 5, 3, 2, 1})));
  CHECK(is_top_interlacing(v({1, 2, 3, 5, 6, 6, 5, 3, 1})));
  CHECK(is_top_interlacing(v({1, 1})));
  CHECK(is_bottom_interlacing(v({1, 1})));
}

TEST_CASE("measured shape") {
  CHECK(measured_shape(RankPoly{1, 3, 5, 6, 6, 5, 3, 2, 1}) == ShapeClass::BottomInterlacing);
  CHECK(measured_shape(RankPoly{1, 2, 3, 4, 4, 3, 2, 1}) == ShapeClass::Symmetric);
  CHECK(measured_shape(RankPoly{1, 2, 3, 4, 5, 4, 5, 4, 3, 2, 1}) == ShapeClass::NotUnimodal);
  CHECK(measured_shape(RankPoly{1, 5, 2, 1, 1}) == ShapeClass::UnimodalOnly);
  CHECK(to_string(ShapeClass::TopInterlacing) == "top-interlacing");
}

TEST_CASE("predicted shape") {
  CHECK(predict_shape(Composition{5}) == ShapeClass::Symmetric);
  CHECK(predict_shape(Composition{2, 1, 1, 3}) == ShapeClass::BottomInterlacing);
  CHECK(predict_shape(Composition{3, 1, 2}) == ShapeClass::BottomInterlacing);
  CHECK(predict_shape(Composition{2, 1, 3}) == ShapeClass::TopInterlacing);
  // equal ends: inner (1,2,1) is symmetric
  CHECK(predict_shape(Composition{2, 1, 2, 1, 2}) == ShapeClass::Symmetric);
  CHECK(predict_shape(Composition{1, 2, 3, 1}) == ShapeClass::BottomInterlacing);
  // equal ends: inner (2,3,4) is top, so the whole is bottom
  CHECK(predict_shape(Composition{1, 2, 3, 4, 1}) == ShapeClass::BottomInterlacing);
  CHECK(predict_shape(Composition{1, 4, 3, 2, 1}) == ShapeClass::TopInterlacing);
}

TEST_CASE("prediction holds on every small composition") {
  for (int n = 1; n <= 11; ++n)
    for (const auto& a : compositions_of(n)) {
      const auto seq = rank_poly(a).sequence();
      INFO(a.to_string());
      CHECK(is_unimodal(seq));
      CHECK(satisfies(seq, predict_shape(a)));
    }
}

TEST_CASE("main theorem report") {
  const Report r = verify_main_theorem(10);
  CHECK(r.records.size() == 1023);
  CHECK(r.theorem_ok());
  const Report parallel = verify_main_theorem(10, 3);
  REQUIRE(parallel.records.size() == r.records.size());
  for (std::size_t i = 0; i < r.records.size(); ++i) CHECK(parallel.records[i].composition == r.records[i].composition);
}

TEST_CASE("circular symmetry and invariance reports") {
  CHECK(verify_circular_symmetry(11).theorem_ok());
  CHECK(verify_cyclic_invariance(11).theorem_ok());
  const Report abc = verify_statements_ABC(10);
  CHECK(abc.theorem_ok());
  CHECK(abc.tallies.at("statement-A") > 0);
  CHECK(abc.tallies.at("statement-B") > 0);
  CHECK(abc.tallies.at("statement-C") > 0);
}

TEST_CASE("(1,k,1,k) has a middle dip") {
  for (int k = 1; k <= 6; ++k) {
    const Composition a{1, k, 1, k};
    CHECK(is_1k1k(a));
    CHECK(is_1k1k(a.rotate(1)));
    const auto seq = rank_poly(a, Kind::Circular).small_sequence();
    const std::size_t t = static_cast<std::size_t>(a.size() / 2);
    CHECK(seq[t - 1] == k + 1);
    CHECK(seq[t] == k);
    CHECK(seq[t + 1] == k + 1);
  }
  CHECK_FALSE(is_1k1k(Composition{1, 2, 1, 3}));
  CHECK_FALSE(is_1k1k(Composition{1, 2, 1, 2, 1, 2}));
}

TEST_CASE("circular unimodality scan") {
  const Report r = circular_unimodality_scan(12);
  CHECK(r.theorem_ok());
  CHECK(r.failures(Severity::ConjectureCounterexample) == 0);
  CHECK(r.tallies.at("non-unimodal-classes") == 5);
}

TEST_CASE("unimodality criteria") {
  CHECK(corollary_applies(Composition{2, 2, 1, 1}));
  CHECK(corollary_applies(Composition{3, 1, 1, 1}));
  CHECK_FALSE(corollary_applies(Composition{1, 2, 1, 2}));
  CHECK_FALSE(corollary_applies(Composition{1, 1}));
  const Report r = verify_top_deletion(12);
  CHECK(r.theorem_ok());
  CHECK(r.tallies.at("lemma-applies") > 0);
  CHECK(top_deletion_unimodality_check(Composition{1, 3, 1, 3}).theorem_ok());
}
