#include "fence/composition.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace fence {

namespace {

int checked_sum(const std::vector<int>& parts) {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

void enumerate(int remaining, std::vector<int>& prefix,
               std::vector<Composition>& out, int want_parts) {
  if (remaining == 0) {
    if (want_parts < 0 || static_cast<int>(prefix.size()) == want_parts)
      out.emplace_back(prefix);
    return;
  }
  if (want_parts >= 0 && static_cast<int>(prefix.size()) >= want_parts) return;
  for (int first = 1; first <= remaining; ++first) {
    prefix.push_back(first);
    enumerate(remaining - first, prefix, out, want_parts);
    prefix.pop_back();
  }
}

}  // namespace

Composition::Composition(std::vector<int> parts, Unchecked)
    : parts_(std::move(parts)), size_(checked_sum(parts_)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("empty composition");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("composition parts must be >= 1");
  size_ = checked_sum(parts_);
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

Composition Composition::half_open(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("empty composition");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool end = (i == 0 || i + 1 == parts.size());
    if (parts[i] < 0 || (parts[i] == 0 && !end))
      throw std::invalid_argument(
          "only the first and last part of a half-open composition may be 0");
  }
  return Composition(std::move(parts), Unchecked{});
}

Composition Composition::parse(std::string_view text, bool allow_half_open) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("cannot parse composition '" +
                                  std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  return allow_half_open ? half_open(std::move(parts))
                         : Composition(std::move(parts));
}

bool Composition::circular_ok() const noexcept {
  return !parts_.empty() && parts_.size() % 2 == 0 && !is_half_open();
}

bool Composition::is_half_open() const noexcept {
  return std::find(parts_.begin(), parts_.end(), 0) != parts_.end();
}

std::vector<Step> Composition::steps() const {
  std::vector<Step> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (std::size_t i = 0; i < parts_.size(); ++i)
    out.insert(out.end(), static_cast<std::size_t>(parts_[i]),
               i % 2 == 0 ? Step::Up : Step::Down);
  return out;
}

Composition Composition::shift_one() const {
  std::vector<int> p(parts_);
  std::rotate(p.rbegin(), p.rbegin() + 1, p.rend());
  return Composition(std::move(p), Unchecked{});
}

Composition Composition::rotate(std::size_t k) const {
  std::vector<int> p(parts_);
  if (!p.empty()) std::rotate(p.begin(), p.begin() + static_cast<long>(k % p.size()), p.end());
  return Composition(std::move(p), Unchecked{});
}

Composition Composition::reversed() const {
  return Composition(std::vector<int>(parts_.rbegin(), parts_.rend()), Unchecked{});
}

std::string Composition::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Composition& c) {
  return os << '(' << c.to_string() << ')';
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  std::vector<int> prefix;
  if (n >= 1) enumerate(n, prefix, out, -1);
  return out;
}

std::vector<Composition> even_compositions_of(int n) {
  std::vector<Composition> out;
  for (auto& c : compositions_of(n))
    if (c.length() % 2 == 0) out.push_back(std::move(c));
  return out;
}

std::vector<Composition> compositions_with_parts(int n, int k) {
  std::vector<Composition> out;
  std::vector<int> prefix;
  if (n >= 1 && k >= 1) enumerate(n, prefix, out, k);
  return out;
}

Composition dihedral_canonical(const Composition& c) {
  Composition best = c;
  for (std::size_t k = 0; k < c.length(); ++k) {
    Composition r = c.rotate(k);
    best = std::min(best, r);
    best = std::min(best, r.reversed());
  }
  return best;
}

}  // namespace fence
