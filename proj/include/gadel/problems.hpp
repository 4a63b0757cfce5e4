#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gadel/theory.hpp"

namespace gadel::problems {

enum class PeopleVariant { Boy, Girl, Man, Woman, ManStudent, WomanStudent };

/// Accepts boy, girl, man, woman, man_student, woman_student (also
/// "man&student" / "man+student"). Throws std::invalid_argument otherwise.
PeopleVariant parse_people_variant(std::string_view name);
std::string to_string(PeopleVariant v);
inline constexpr PeopleVariant kAllPeopleVariants[] = {
    PeopleVariant::Boy, PeopleVariant::Girl, PeopleVariant::Man,
    PeopleVariant::Woman, PeopleVariant::ManStudent, PeopleVariant::WomanStudent};

/// Taxonomic benchmark: 23 background clauses, 39 defaults, plus the
/// variant's extra facts.
DefaultTheory generate_people(PeopleVariant v);
/// The variant-free background as theory text.
std::string_view people_theory_text();

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  bool operator==(const Edge&) const = default;
};

/// Parses "0-1,1-2,2-0" (also accepts ">" or ":" between endpoints).
std::vector<Edge> parse_edges(std::string_view text);

struct HamiltonInstance {
  std::size_t vertices = 0;
  std::vector<Edge> edges;
  DefaultTheory theory;
  // Choice default id -> (edge index, step). Constraint defaults are absent.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> choice;
};

/// Hamiltonian cycles through vertex 0 as extensions.
///
///   W:  at_0_0, and ~use_v_w | ~use_v_x for every pair of edges leaving v.
///   Choice default per edge (v,w) and step k < n:
///       at_v_k : use_v_w / at_w_{k+1} & use_v_w
///     with steps restricted so that vertex 0 is left only at step 0 and
///     entered only at step n.
///   Constraint defaults (self-blocking):
///       at_w_j & at_w_k : ok / ~ok     for 1 <= j < k <= n-1 (no revisit)
///       : ~at_0_n / ~~at_0_n           (the walk must close)
///
/// A walk is one chain of choice defaults; the extension's generating set is
/// exactly the n chosen edges of one Hamiltonian cycle.
HamiltonInstance generate_hamilton(std::size_t vertices, std::span<const Edge> edges);

/// Edges of the choice defaults in `generating_ids`, or nullopt if they do not
/// form a single Hamiltonian cycle of the instance's graph (checked by walking).
std::optional<std::vector<std::size_t>> decode_cycle(const HamiltonInstance& h,
                                                     std::span<const std::size_t> generating_ids);

}  // namespace gadel::problems
