#include "fence/closed_forms.hpp"

#include <stdexcept>

#include "fence/errors.hpp"

namespace fence {

RankPoly q_int(int n) {
  if (n < 0) throw std::invalid_argument("q-integer of a negative number");
  return RankPoly(0, std::vector<mpz_class>(static_cast<std::size_t>(n), 1));
}

RankPoly chebyshev_T(int k) {
  if (k < 0) throw std::invalid_argument("Chebyshev index must be >= 0");
  RankPoly prev{1};
  if (k == 0) return prev;
  RankPoly cur = RankPoly::monomial(1);
  const RankPoly two_x = RankPoly::monomial(1, 2);
  for (int i = 1; i < k; ++i) {
    RankPoly next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RankPoly trace_form(int k, const RankPoly& u, int h) {
  const RankPoly t = chebyshev_T(k);
  const int clear = k > 0 ? k - 1 : 0;
  const HalfExpPoly uz = HalfExpPoly::from_q(u);
  HalfExpPoly total;
  HalfExpPoly u_power = HalfExpPoly::from_q(RankPoly{1});
  for (int j = 0; j <= k; ++j) {
    const mpz_class c = t.coeff(j);
    if (c != 0) {
      // c u^j 2^(1-j) z^(h(k-j)), scaled by 2^clear
      mpz_class scaled = c;
      mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<unsigned long>(clear + 1 - j));
      total += u_power * HalfExpPoly::z_power(h * (k - j), scaled);
    }
    u_power *= uz;
  }
  std::vector<mpz_class> coeffs = total.in_z().coeffs();
  const mpz_class denom = mpz_class(1) << clear;
  for (auto& c : coeffs) {
    if (!mpz_divisible_2exp_p(c.get_mpz_t(), static_cast<unsigned long>(clear)))
      throw FormulaMismatch("trace form T_" + std::to_string(k) + " is not integral");
    c /= denom;
  }
  return HalfExpPoly(RankPoly(total.in_z().offset(), std::move(coeffs))).to_rank_poly();
}

RankPoly crown_formula(int a, int s) {
  if (a < 1 || s < 1) throw std::invalid_argument("crown formula needs a >= 1 and s >= 1");
  return trace_form(s, q_int(a + 2), a + 1);
}

RankPoly crown_formula_swapped(int a, int s) {
  if (a < 1 || s < 1) throw std::invalid_argument("crown formula needs a >= 1 and s >= 1");
  return trace_form(a - 1, q_int(s + 1), s);
}

std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::TwoParts: return "(a,b)";
    case Pattern::OneSeparated: return "(a,1,b,1)";
    case Pattern::FourParts: return "(a,b,c,d)";
    case Pattern::FourEqual: return "(a,a,a,a)";
  }
  return "?";
}

namespace {

RankPoly q(int e) { return RankPoly::monomial(e); }

RankPoly two_parts(int a, int b) { return RankPoly{1} + q(1) * q_int(a) * q_int(b) + q(a + b); }

RankPoly one_separated(int a, int b) {
  return q_int(a + 2) * q_int(b + 2) - q(a + 1) - q(b + 1);
}

RankPoly four_parts(int a, int b, int c, int d) {
  return four_parts_without_cross_term(a, b, c, d) + q(2) * q_int(a) * q_int(b) * q_int(c) * q_int(d);
}

RankPoly four_equal(int a) {
  const RankPoly qa = q_int(a);
  const RankPoly sq = qa * qa;
  return RankPoly{1} + q(2) * sq * sq + (RankPoly::monomial(2 * a + 1, 2) + RankPoly::monomial(1, 2)) * sq +
         q(4 * a);
}

}  // namespace

RankPoly four_parts_without_cross_term(int a, int b, int c, int d) {
  return RankPoly{1} + q(1) * q_int(a) * q_int(d) + q(1) * q_int(b) * q_int(c) +
         q(a + b + 1) * q_int(c) * q_int(d) + q(c + d + 1) * q_int(a) * q_int(b) + q(a + b + c + d);
}

RankPoly four_equal_without_shift(int a) {
  const RankPoly sq = q_int(a) * q_int(a);
  return RankPoly{1} + sq * sq + (RankPoly::monomial(2 * a + 1, 2) + RankPoly::monomial(1, 2)) * sq +
         q(4 * a);
}

std::vector<ClosedForm> closed_forms(const Composition& alpha) {
  std::vector<ClosedForm> out;
  if (alpha.is_half_open()) return out;
  const auto& p = alpha.parts();
  if (p.size() == 2) {
    const int a = p[0], b = p[1];
    out.push_back({Pattern::TwoParts, {a, b}, two_parts(a, b), mpz_class(a * b + 2)});
  }
  if (p.size() != 4) return out;
  const int a = p[0], b = p[1], c = p[2], d = p[3];
  if (a == b && b == c && c == d) {
    const mpz_class ma = a;
    out.push_back({Pattern::FourEqual, {a}, four_equal(a), ma * ma * ma * ma + 4 * ma * ma + 2});
  }
  if (b == 1 && d == 1)
    out.push_back({Pattern::OneSeparated, {a, c}, one_separated(a, c), mpz_class(a * c + 2 * a + 2 * c + 2)});
  else if (a == 1 && c == 1)
    out.push_back({Pattern::OneSeparated, {b, d}, one_separated(b, d), mpz_class(b * d + 2 * b + 2 * d + 2)});
  const mpz_class A = a, B = b, C = c, D = d;
  out.push_back({Pattern::FourParts, {a, b, c, d}, four_parts(a, b, c, d),
                 A * B * C * D + A * B + C * D + A * D + B * C + 2});
  return out;
}

std::optional<ClosedForm> closed_form(const Composition& alpha) {
  auto all = closed_forms(alpha);
  if (all.empty()) return std::nullopt;
  return all.front();
}

}  // namespace fence
