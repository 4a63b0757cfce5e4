#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace gadel {

/// Fixed-length bitstring. Position 0 is the leftmost character of the
/// textual form.
///
/// Under the two-bits-per-default scheme, encoded default i owns positions
/// 2i (prerequisite assumed provable) and 2i+1 (some justification assumed
/// refuted).
class Chromosome {
 public:
  Chromosome() = default;
  explicit Chromosome(std::size_t length) : size_(length), words_((length + 63) / 64, 0) {}

  /// Parses a string of '0'/'1'; throws std::invalid_argument otherwise.
  static Chromosome from_string(std::string_view bits);

  std::size_t size() const { return size_; }
  std::size_t defaults() const { return size_ / 2; }

  bool bit(std::size_t pos) const { return (words_[pos / 64] >> (pos % 64)) & 1u; }
  void set(std::size_t pos, bool value) {
    const std::uint64_t m = std::uint64_t{1} << (pos % 64);
    if (value) {
      words_[pos / 64] |= m;
    } else {
      words_[pos / 64] &= ~m;
    }
  }
  void flip(std::size_t pos) { words_[pos / 64] ^= std::uint64_t{1} << (pos % 64); }

  bool prereq_bit(std::size_t i) const { return bit(2 * i); }
  bool justif_bit(std::size_t i) const { return bit(2 * i + 1); }
  /// Pattern (1,0): the default is taken as applied.
  bool applies(std::size_t i) const { return prereq_bit(i) && !justif_bit(i); }

  /// Sets every bit that is set in `mask`.
  void force(const Chromosome& mask);
  bool respects(const Chromosome& mask) const;

  std::string to_string() const;
  std::size_t hash() const;
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const Chromosome&) const = default;

  /// Ordering by bitstring value, position i weighing 2^i (rightmost most
  /// significant), so 01001 exceeds 10010.
  static int compare_value(const Chromosome& a, const Chromosome& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ChromosomeHash {
  std::size_t operator()(const Chromosome& c) const { return c.hash(); }
};

}  // namespace gadel
