#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace fence {

/// Direction of one cover step along a zigzag, read left to right.
enum class Step : std::uint8_t { Up, Down };

/// An ordered sequence of segment lengths.
///
/// The public constructor requires every part to be at least 1. Compositions
/// built through half_open() may carry a 0 in the first and/or last position;
/// a leading 0 makes the fence start with a down step.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  static Composition half_open(std::vector<int> parts);

  /// Parses "2,1,1,3". With allow_half_open a leading or trailing "0" is accepted.
  static Composition parse(std::string_view text, bool allow_half_open = false);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  int size() const noexcept { return size_; }
  int operator[](std::size_t i) const { return parts_.at(i); }
  bool circular_ok() const noexcept;
  bool is_half_open() const noexcept;

  /// One step per unit of size; odd-numbered segments (1-based) go up.
  std::vector<Step> steps() const;

  /// (α_2s, α_1, ..., α_2s-1): the composition whose circular fence is the
  /// vertical flip of this one.
  Composition shift_one() const;
  /// Rotate left by k parts.
  Composition rotate(std::size_t k) const;
  Composition reversed() const;

  std::string to_string() const;

  friend bool operator==(const Composition&, const Composition&) = default;
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  struct Unchecked {};
  Composition(std::vector<int> parts, Unchecked);

  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Composition& c);

/// Every composition of n, in lexicographic order on parts.
std::vector<Composition> compositions_of(int n);

/// Compositions of n with an even number of parts.
std::vector<Composition> even_compositions_of(int n);

/// Compositions of n with exactly k parts.
std::vector<Composition> compositions_with_parts(int n, int k);

/// Smallest representative (lexicographically) among all rotations and
/// reversals; used to identify circular compositions up to dihedral symmetry.
Composition dihedral_canonical(const Composition& c);

}  // namespace fence
