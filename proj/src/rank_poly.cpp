#include "fence/rank_poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fence/errors.hpp"

namespace fence {

RankPoly::RankPoly(int offset, std::vector<mpz_class> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
  canonicalize();
}

RankPoly::RankPoly(std::initializer_list<long> coeffs) : offset_(0) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

RankPoly RankPoly::monomial(int exponent, const mpz_class& c) {
  return RankPoly(exponent, {c});
}

RankPoly RankPoly::from_sequence(const std::vector<long>& seq, int offset) {
  std::vector<mpz_class> c;
  c.reserve(seq.size());
  for (long v : seq) c.emplace_back(v);
  return RankPoly(offset, std::move(c));
}

void RankPoly::canonicalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                            [](const mpz_class& c) { return c != 0; });
  offset_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) offset_ = 0;
}

int RankPoly::max_degree() const noexcept {
  return coeffs_.empty() ? 0 : offset_ + static_cast<int>(coeffs_.size()) - 1;
}

mpz_class RankPoly::coeff(int exponent) const {
  const long k = static_cast<long>(exponent) - offset_;
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::vector<mpz_class> RankPoly::sequence() const {
  if (offset_ < 0) throw std::domain_error("sequence() of a polynomial with negative exponents");
  if (coeffs_.empty()) return {};
  std::vector<mpz_class> out(static_cast<std::size_t>(offset_), 0);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

std::vector<long> RankPoly::small_sequence() const {
  std::vector<long> out;
  for (const auto& c : sequence()) {
    if (!c.fits_slong_p()) throw std::overflow_error("coefficient does not fit in long");
    out.push_back(c.get_si());
  }
  return out;
}

RankPoly& RankPoly::operator+=(const RankPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(offset_, o.offset_);
  const int hi = std::max(max_degree(), o.max_degree());
  std::vector<mpz_class> c(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    c[static_cast<std::size_t>(offset_ - lo) + k] += coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
    c[static_cast<std::size_t>(o.offset_ - lo) + k] += o.coeffs_[k];
  offset_ = lo;
  coeffs_ = std::move(c);
  canonicalize();
  return *this;
}

RankPoly& RankPoly::operator-=(const RankPoly& o) { return *this += -o; }

RankPoly& RankPoly::operator*=(const RankPoly& o) {
  if (is_zero() || o.is_zero()) return *this = RankPoly();
  std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  offset_ += o.offset_;
  coeffs_ = std::move(c);
  canonicalize();
  return *this;
}

RankPoly& RankPoly::operator*=(const mpz_class& c) {
  for (auto& x : coeffs_) x *= c;
  canonicalize();
  return *this;
}

RankPoly RankPoly::operator-() const {
  RankPoly r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

std::string RankPoly::to_string() const {
  std::ostringstream os;
  const auto seq = sequence();
  for (std::size_t k = 0; k < seq.size(); ++k) os << (k ? " " : "") << seq[k];
  return os.str();
}

std::string RankPoly::to_expression() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    mpz_class c = coeffs_[k];
    if (c == 0) continue;
    const int e = offset_ + static_cast<int>(k);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (c != 1 || e == 0) os << c;
    if (e != 0) os << 'q';
    if (e != 0 && e != 1) os << '^' << e;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RankPoly& p) { return os << p.to_expression(); }

RankPoly poly_add(const RankPoly& a, const RankPoly& b) { return a + b; }
RankPoly poly_sub(const RankPoly& a, const RankPoly& b) { return a - b; }
RankPoly poly_mul(const RankPoly& a, const RankPoly& b) { return a * b; }

RankPoly poly_shift(const RankPoly& p, int k) {
  if (p.is_zero()) return p;
  return RankPoly(p.offset() + k, p.coeffs());
}

RankPoly poly_reverse(const RankPoly& p, int total) {
  if (p.is_zero()) return p;
  std::vector<mpz_class> c(p.coeffs().rbegin(), p.coeffs().rend());
  return RankPoly(total - p.max_degree(), std::move(c));
}

RankPoly poly_reverse_about(const RankPoly& p, const mpq_class& center) {
  mpq_class twice = 2 * center;
  twice.canonicalize();
  if (twice.get_den() != 1)
    throw std::invalid_argument("reflection center must be a multiple of 1/2");
  const mpz_class total = twice.get_num();
  if (!total.fits_sint_p()) throw std::overflow_error("reflection center out of range");
  return poly_reverse(p, static_cast<int>(total.get_si()));
}

mpz_class poly_eval_at_one(const RankPoly& p) {
  mpz_class sum = 0;
  for (const auto& c : p.coeffs()) sum += c;
  return sum;
}

bool is_palindromic_about(const RankPoly& p, const mpq_class& center) {
  return poly_reverse_about(p, center) == p;
}

std::optional<CoefficientMismatch> first_mismatch(const RankPoly& a, const RankPoly& b) {
  if (a == b) return std::nullopt;
  const int lo = std::min(a.min_degree(), b.min_degree());
  const int hi = std::max(a.max_degree(), b.max_degree());
  for (int e = lo; e <= hi; ++e)
    if (a.coeff(e) != b.coeff(e)) return CoefficientMismatch{e, a.coeff(e), b.coeff(e)};
  return std::nullopt;
}

void to_json(nlohmann::json& j, const RankPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
  j = nlohmann::json{{"offset", p.offset()}, {"coeffs", coeffs}};
}

void from_json(const nlohmann::json& j, RankPoly& p) {
  std::vector<mpz_class> c;
  for (const auto& s : j.at("coeffs")) c.emplace_back(s.get<std::string>(), 10);
  p = RankPoly(j.at("offset").get<int>(), std::move(c));
}

HalfExpPoly HalfExpPoly::from_q(const RankPoly& p) {
  if (p.is_zero()) return {};
  std::vector<mpz_class> c(2 * p.coeffs().size() - 1, 0);
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) c[2 * k] = p.coeffs()[k];
  return HalfExpPoly(RankPoly(2 * p.offset(), std::move(c)));
}

HalfExpPoly HalfExpPoly::z_power(int k, const mpz_class& c) {
  return HalfExpPoly(RankPoly::monomial(k, c));
}

bool HalfExpPoly::is_integral_in_q() const {
  for (int e = z_.min_degree(); e <= z_.max_degree(); ++e)
    if (e % 2 != 0 && z_.coeff(e) != 0) return false;
  return true;
}

RankPoly HalfExpPoly::to_rank_poly() const {
  if (!is_integral_in_q())
    throw FormulaMismatch("half-integer exponents remain: " + z_.to_expression() + " (in z = q^1/2)");
  if (z_.is_zero()) return {};
  std::vector<mpz_class> c;
  for (int e = z_.min_degree(); e <= z_.max_degree(); e += 2) c.push_back(z_.coeff(e));
  return RankPoly(z_.min_degree() / 2, std::move(c));
}

}  // namespace fence
