#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fence/composition.hpp"
#include "fence/rank_poly.hpp"
#include "fence/report.hpp"

namespace fence {

/// A symmetric unimodal sequence satisfies both interlacing chains, so there
/// is no separate "symmetric and interlacing" class.
enum class ShapeClass { Symmetric, TopInterlacing, BottomInterlacing, UnimodalOnly, NotUnimodal };

std::string_view to_string(ShapeClass c);

template <class T>
bool is_unimodal(const std::vector<T>& a) {
  std::size_t i = 0;
  while (i + 1 < a.size() && a[i] <= a[i + 1]) ++i;
  while (i + 1 < a.size() && a[i] >= a[i + 1]) ++i;
  return i + 1 >= a.size();
}

template <class T>
bool is_symmetric(const std::vector<T>& a) {
  for (std::size_t i = 0, j = a.size(); i < j; ++i, --j)
    if (!(a[i] == a[j - 1])) return false;
  return true;
}

namespace detail {
template <class T>
bool chain_nondecreasing(const std::vector<T>& a, bool top) {
  if (a.empty()) return true;
  const std::size_t n = a.size() - 1;
  std::vector<const T*> chain;
  for (std::size_t i = 0; i <= n - i; ++i) {
    const T* lo = &a[i];
    const T* hi = &a[n - i];
    if (!top) std::swap(lo, hi);
    chain.push_back(lo);
    if (i != n - i) chain.push_back(hi);
    if (i == n) break;
  }
  for (std::size_t k = 0; k + 1 < chain.size(); ++k)
    if (*chain[k + 1] < *chain[k]) return false;
  return true;
}
}  // namespace detail

/// a_0 <= a_n <= a_1 <= a_{n-1} <= ...
template <class T>
bool is_top_interlacing(const std::vector<T>& a) {
  return detail::chain_nondecreasing(a, true);
}

/// a_n <= a_0 <= a_{n-1} <= a_1 <= ...
template <class T>
bool is_bottom_interlacing(const std::vector<T>& a) {
  return detail::chain_nondecreasing(a, false);
}

/// Most specific class: symmetric, then bottom, then top, then unimodal.
ShapeClass measured_shape(const std::vector<mpz_class>& seq);
ShapeClass measured_shape(const RankPoly& p);

/// Inequality-family membership: Symmetric needs symmetry and unimodality,
/// the interlacing classes need their chain, UnimodalOnly needs unimodality.
bool satisfies(const std::vector<mpz_class>& seq, ShapeClass predicted);

/// Class promised for the fence rank sequence of alpha.
ShapeClass predict_shape(const Composition& alpha);

/// Every composition of size <= max_size: fence rank sequence is unimodal and
/// satisfies the predicted class.
Report verify_main_theorem(int max_size, int jobs = 1);

/// Every even-part composition of size <= max_size: circular rank sequence is
/// palindromic about n/2.
Report verify_circular_symmetry(int max_size, int jobs = 1);

/// Every rotation of the parts gives the same circular rank polynomial, and the
/// one-step shift gives its reversal.
Report verify_cyclic_invariance(int max_size, int jobs = 1);

/// The three difference polynomials used in the symmetry induction, for every
/// n <= max_n.
Report verify_statements_ABC(int max_n, int jobs = 1);

/// Odd sizes unimodal; even sizes increase up to the middle pair; every
/// non-unimodal case is a rotation or reversal of (1,k,1,k).
Report circular_unimodality_scan(int max_size, int jobs = 1);

/// Top-deletion criterion and its two syntactic corollaries for one
/// even-part composition.
Report top_deletion_unimodality_check(const Composition& alpha);
Report verify_top_deletion(int max_size, int jobs = 1);

/// True when two cyclically consecutive parts exceed 1, or three consecutive
/// parts read k,1,l with |k-l| > 1.
bool corollary_applies(const Composition& alpha);

/// (1,k,1,k) up to rotation and reversal.
bool is_1k1k(const Composition& alpha);

}  // namespace fence
