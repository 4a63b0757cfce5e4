#include "gadel/chromosome.hpp"

#include <stdexcept>

namespace gadel {

Chromosome Chromosome::from_string(std::string_view bits) {
  Chromosome c(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw std::invalid_argument("chromosome must consist of '0' and '1': " + std::string(bits));
    }
    c.set(i, bits[i] == '1');
  }
  return c;
}

void Chromosome::force(const Chromosome& mask) {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= mask.words_[w];
}

bool Chromosome::respects(const Chromosome& mask) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & mask.words_[w]) != mask.words_[w]) return false;
  }
  return true;
}

std::string Chromosome::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (bit(i)) s[i] = '1';
  }
  return s;
}

std::size_t Chromosome::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ size_;
  for (std::uint64_t w : words_) {
    h ^= w;
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

int Chromosome::compare_value(const Chromosome& a, const Chromosome& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_ ? -1 : 1;
  for (std::size_t i = a.size_; i-- > 0;) {
    if (a.bit(i) != b.bit(i)) return a.bit(i) ? 1 : -1;
  }
  return 0;
}

}  // namespace gadel
