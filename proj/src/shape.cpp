#include "landauer/shape.hpp"

#include <bit>

#include "landauer/error.hpp"

namespace landauer {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t length) {
  return (length + kWordBits - 1) / kWordBits;
}

}  // namespace

Shape Shape::parse(std::string_view text) {
  if (text.empty()) throw DomainError("shape must have at least one bit");
  std::vector<std::uint64_t> words(word_count(text.size()), 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c != '0' && c != '1') {
      throw DomainError("invalid shape character '" + std::string(1, c) +
                        "' at position " + std::to_string(i + 1));
    }
    if (c == '1') words[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
  }
  return Shape(std::move(words), text.size());
}

Shape Shape::from_bits(std::uint64_t value, std::size_t length) {
  if (length == 0 || length > kWordBits) {
    throw DomainError("from_bits length must be in [1, 64]");
  }
  std::vector<std::uint64_t> words(1, 0);
  for (std::size_t i = 0; i < length; ++i) {
    if ((value >> (length - 1 - i)) & 1u) words[0] |= std::uint64_t{1} << i;
  }
  return Shape(std::move(words), length);
}

Shape Shape::from_vector(const std::vector<int>& bits) {
  std::string text;
  text.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw DomainError("shape bits must be 0 or 1");
    text.push_back(b ? '1' : '0');
  }
  return parse(text);
}

bool Shape::bit(std::size_t pos) const {
  if (pos >= length_) throw DomainError("shape position out of range");
  return (words_[pos / kWordBits] >> (pos % kWordBits)) & 1u;
}

std::string Shape::to_string() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (bit(i)) out[i] = '1';
  }
  return out;
}

Shape complement(const Shape& s) {
  std::vector<std::uint64_t> words = s.words_;
  for (auto& w : words) w = ~w;
  const std::size_t tail = s.length_ % kWordBits;
  if (tail != 0) words.back() &= (std::uint64_t{1} << tail) - 1;
  return Shape(std::move(words), s.length_);
}

std::size_t differing_positions(const Shape& a, const Shape& b) {
  if (a.length_ != b.length_) {
    throw ComparabilityError("cannot compare shapes of length " +
                             std::to_string(a.length_) + " and " +
                             std::to_string(b.length_));
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    count += static_cast<std::size_t>(std::popcount(a.words_[i] ^ b.words_[i]));
  }
  return count;
}

double matching_metric(const Shape& a, const Shape& b) {
  return static_cast<double>(differing_positions(a, b)) /
         static_cast<double>(a.length());
}

}  // namespace landauer
