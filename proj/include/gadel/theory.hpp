#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gadel/formula.hpp"

namespace gadel {

/// Default rule `prereq : justifs / conseq`. An omitted prerequisite is `true`;
/// the justification list may be empty.
struct Default {
  std::size_t id = 0;
  Formula prereq = Formula::constant(true);
  std::vector<Formula> justifs;
  Formula conseq;

  bool operator==(const Default&) const = default;
};

/// A default theory (W, D). Default ids equal their position in `defaults`.
struct DefaultTheory {
  std::vector<Formula> facts;
  std::vector<Default> defaults;

  /// Appends a default and assigns it the next id.
  const Default& add_default(Formula prereq, std::vector<Formula> justifs, Formula conseq);

  bool operator==(const DefaultTheory&) const = default;
};

/// Theory file format:
///
///   # comment
///   W: a. b | c.
///   D: a : ~b / d.   c : e / e.   : b / ~b.   a : / c.
///
/// `W:` and `D:` must start a line and carry the colon directly. Each section
/// appears at most once, in either order; a missing section is empty.
DefaultTheory parse_theory(std::string_view text);
DefaultTheory load_theory(const std::string& path);

std::string to_string(const Default& d);
std::string to_string(const DefaultTheory& t);

/// Per encoded default: the chromosome bits that are fixed to 1.
struct ForcedBits {
  bool prereq = false;  // W entails the prerequisite
  bool justif = false;  // W entails the negation of some justification

  bool operator==(const ForcedBits&) const = default;
};

struct PreprocessOptions {
  bool extract_constraints = true;
  bool force_bits = true;
};

/// Theory split into the defaults carried by the chromosome and the
/// self-blocking defaults `a : b / ~b` checked as integrity constraints.
struct PreprocessedTheory {
  DefaultTheory base;
  std::vector<std::size_t> encoded;      // ids into base.defaults, ascending
  std::vector<std::size_t> constraints;  // ids into base.defaults, ascending
  std::vector<ForcedBits> forced;        // parallel to `encoded`

  std::size_t chromosome_length() const { return 2 * encoded.size(); }
  const Default& encoded_default(std::size_t i) const { return base.defaults[encoded[i]]; }
};

/// Syntactic test: exactly one justification b and a consequent equal to ~b
/// once double negations are stripped from both sides.
bool is_self_blocking(const Default& d);

PreprocessedTheory preprocess(DefaultTheory t, const PreprocessOptions& opts = {});

}  // namespace gadel
