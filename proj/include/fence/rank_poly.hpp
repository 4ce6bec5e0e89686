#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace fence {

/// Laurent polynomial in q with arbitrary-precision integer coefficients.
///
/// Stored as coeffs[k] = coefficient of q^(offset + k). Always canonical: the
/// first and last stored coefficients are nonzero, and the zero polynomial has
/// no coefficients and offset 0.
class RankPoly {
 public:
  RankPoly() = default;
  RankPoly(int offset, std::vector<mpz_class> coeffs);
  /// Coefficients of q^0, q^1, ...
  RankPoly(std::initializer_list<long> coeffs);

  static RankPoly monomial(int exponent, const mpz_class& c = 1);
  static RankPoly from_sequence(const std::vector<long>& seq, int offset = 0);

  int offset() const noexcept { return offset_; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest and highest exponents with a nonzero coefficient (0 for zero).
  int min_degree() const noexcept { return offset_; }
  int max_degree() const noexcept;
  mpz_class coeff(int exponent) const;
  /// Coefficients of q^0 .. q^max_degree. Requires offset >= 0.
  std::vector<mpz_class> sequence() const;
  /// Same as sequence(), narrowed to long. Throws std::overflow_error.
  std::vector<long> small_sequence() const;

  RankPoly& operator+=(const RankPoly& o);
  RankPoly& operator-=(const RankPoly& o);
  RankPoly& operator*=(const RankPoly& o);
  RankPoly& operator*=(const mpz_class& c);

  friend RankPoly operator+(RankPoly a, const RankPoly& b) { return a += b; }
  friend RankPoly operator-(RankPoly a, const RankPoly& b) { return a -= b; }
  friend RankPoly operator*(RankPoly a, const RankPoly& b) { return a *= b; }
  friend RankPoly operator*(RankPoly a, const mpz_class& c) { return a *= c; }
  friend RankPoly operator*(const mpz_class& c, RankPoly a) { return a *= c; }
  RankPoly operator-() const;

  friend bool operator==(const RankPoly& a, const RankPoly& b) {
    return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
  }

  /// "1 3 5 6": coefficients of q^0 .. q^max (requires offset >= 0).
  std::string to_string() const;
  /// "q^-1 + 2 - 3q^2" style, for diagnostics.
  std::string to_expression() const;

 private:
  void canonicalize();

  int offset_ = 0;
  std::vector<mpz_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const RankPoly& p);

RankPoly poly_add(const RankPoly& a, const RankPoly& b);
RankPoly poly_sub(const RankPoly& a, const RankPoly& b);
RankPoly poly_mul(const RankPoly& a, const RankPoly& b);
/// Multiply by q^k.
RankPoly poly_shift(const RankPoly& p, int k);
/// Map the coefficient of q^k to q^(total - k).
RankPoly poly_reverse(const RankPoly& p, int total);
/// Reflect about a half-integer center: q^k -> q^(2c - k).
/// Throws std::invalid_argument when 2c is not an integer.
RankPoly poly_reverse_about(const RankPoly& p, const mpq_class& center);
mpz_class poly_eval_at_one(const RankPoly& p);
bool is_palindromic_about(const RankPoly& p, const mpq_class& center);

/// First exponent where a and b differ, if any.
struct CoefficientMismatch {
  int exponent;
  mpz_class left;
  mpz_class right;
};
std::optional<CoefficientMismatch> first_mismatch(const RankPoly& a, const RankPoly& b);

void to_json(nlohmann::json& j, const RankPoly& p);
void from_json(const nlohmann::json& j, RankPoly& p);

/// Polynomial in z = q^(1/2): half-integer powers of q are integer powers of z.
class HalfExpPoly {
 public:
  HalfExpPoly() = default;
  explicit HalfExpPoly(RankPoly in_z) : z_(std::move(in_z)) {}

  /// Substitute q = z^2.
  static HalfExpPoly from_q(const RankPoly& p);
  /// z^k, i.e. q^(k/2).
  static HalfExpPoly z_power(int k, const mpz_class& c = 1);

  const RankPoly& in_z() const noexcept { return z_; }
  /// True iff every odd power of z has coefficient 0.
  bool is_integral_in_q() const;
  /// Throws FormulaMismatch when an odd power of z survives.
  RankPoly to_rank_poly() const;

  HalfExpPoly& operator+=(const HalfExpPoly& o) { z_ += o.z_; return *this; }
  HalfExpPoly& operator-=(const HalfExpPoly& o) { z_ -= o.z_; return *this; }
  HalfExpPoly& operator*=(const HalfExpPoly& o) { z_ *= o.z_; return *this; }
  friend HalfExpPoly operator+(HalfExpPoly a, const HalfExpPoly& b) { return a += b; }
  friend HalfExpPoly operator-(HalfExpPoly a, const HalfExpPoly& b) { return a -= b; }
  friend HalfExpPoly operator*(HalfExpPoly a, const HalfExpPoly& b) { return a *= b; }
  friend bool operator==(const HalfExpPoly&, const HalfExpPoly&) = default;

 private:
  RankPoly z_;
};

}  // namespace fence
