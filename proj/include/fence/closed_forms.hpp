#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fence/composition.hpp"
#include "fence/rank_poly.hpp"

namespace fence {

/// [n]_q = 1 + q + ... + q^(n-1); zero for n = 0.
RankPoly q_int(int n);

/// T_k as a polynomial in x: T_0 = 1, T_1 = x, T_{k+2} = 2x T_{k+1} - T_k.
RankPoly chebyshev_T(int k);

/// 2 z^(h k) T_k(u / (2 z^h)) with z^2 = q, expanded exactly. Denominators are
/// cleared by 2^(k-1) and divided back out; a non-integral or half-exponent
/// result throws FormulaMismatch.
RankPoly trace_form(int k, const RankPoly& u, int h);

/// Circular rank polynomial of (1,a,1,a,...,1,a) with 2s parts:
/// 2 q^((a+1)s/2) T_s([a+2]_q / (2 q^((a+1)/2))).
RankPoly crown_formula(int a, int s);

/// The variant 2 q^((a-1)s/2) T_{a-1}([s+1]_q / (2 q^(s/2))), which swaps the
/// roles of the two parameters: for a, s >= 2 it equals crown_formula(s-1, a-1).
RankPoly crown_formula_swapped(int a, int s);

enum class Pattern { TwoParts, OneSeparated, FourParts, FourEqual };

std::string pattern_name(Pattern p);

struct ClosedForm {
  Pattern pattern;
  std::vector<int> params;
  RankPoly poly;
  mpz_class count;  // from the count column, independent of poly
};

/// Every pattern that alpha matches literally (no rotation): (a,b); (a,1,b,1)
/// and (1,a,1,b); (a,b,c,d); (a,a,a,a).
std::vector<ClosedForm> closed_forms(const Composition& alpha);

/// Most specific matching pattern, if any.
std::optional<ClosedForm> closed_form(const Composition& alpha);

/// The four-part formula without its q^2 [a][b][c][d] term, and the
/// equal-parts formula without the q^2 factor on [a]^4. Both miss ideals that
/// meet all four segments; kept so reports can show the difference.
RankPoly four_parts_without_cross_term(int a, int b, int c, int d);
RankPoly four_equal_without_shift(int a);

}  // namespace fence
