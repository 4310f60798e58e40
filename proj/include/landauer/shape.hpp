#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace landauer {

/// Fixed-length binary string describing the lock-key geometry of a subsumer
/// or an input. Position 0 is the leftmost character of the textual form.
///
/// Bits are packed 64 to a word; unused high bits of the last word are kept
/// at zero so that word-wise comparisons are exact.
class Shape {
public:
  /// Parses a string over {0,1}. Throws DomainError on an empty string or on
  /// any other character.
  static Shape parse(std::string_view text);

  /// Builds a shape of `length` bits from the low bits of `value`, position 0
  /// being the most significant of those bits. Requires 1 <= length <= 64.
  static Shape from_bits(std::uint64_t value, std::size_t length);

  /// Builds a shape from explicit 0/1 values.
  static Shape from_vector(const std::vector<int>& bits);

  std::size_t length() const noexcept { return length_; }
  bool bit(std::size_t pos) const;

  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

private:
  Shape(std::vector<std::uint64_t> words, std::size_t length)
      : words_(std::move(words)), length_(length) {}

  friend Shape complement(const Shape& s);
  friend std::size_t differing_positions(const Shape& a, const Shape& b);

  std::vector<std::uint64_t> words_;
  std::size_t length_;
};

/// Flips every bit.
Shape complement(const Shape& s);

/// Number of positions at which the two shapes differ. Throws
/// ComparabilityError when the lengths differ.
std::size_t differing_positions(const Shape& a, const Shape& b);

/// Normalized lock-key affinity D in [0,1]: the fraction of complementary
/// (differing) positions. D = 1 for a perfect complement, 0 for identical
/// shapes.
double matching_metric(const Shape& a, const Shape& b);

}  // namespace landauer
