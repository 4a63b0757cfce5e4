#include "gadel/problems.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gadel::problems {

namespace {

constexpr std::string_view kPeople = R"(# Taxonomic "people" benchmark, background part.
W:
  ~boy | ~girl.          ~boy | kid.             ~girl | kid.
  ~human | male | female.
  ~kid | human.          ~student | human.       ~adult | human.
  ~adult | ~kid.
  ~adult | ~male | man.  ~adult | ~female | woman.
  ~academic | adult.     ~academic | diploma.
  ~doctor | academic.    ~priest | academic.     ~prof | academic.
  ~bishop | priest.      ~cardinal | bishop.
  ~redsuit | suit.       ~whitesuit | suit.      ~blacksuit | suit.
  ~redsuit | ~whitesuit. ~whitesuit | ~blacksuit. ~redsuit | ~blacksuit.
D:
  human : name / name.
  kid : toys / toys.
  student : adult / adult.
  student : ~employed / ~employed.
  student : ~married / ~married.
  student : sports / sports.
  adult : ~student / employed.
  adult : ~student, ~priest / married.
  adult : car / car.
  adult : ~academic / ~toys.
  man : ~prof / beer.
  man : ~vegetarian / steak.
  man : coffee / coffee.
  man | woman : wine / wine.
  woman : tea / tea.
  academic : ~prof / ~employed.
  academic : ~priest / toys.
  academic : books / books.
  academic : glasses / glasses.
  academic : ~priest / late.
  doctor : medicine / medicine.
  doctor : whitesuit / whitesuit.
  prof : employed / employed.
  prof : grey / grey.
  prof : tie / tie.
  prof : water / water.
  prof : conservative / conservative.
  priest : male / male.
  priest : conservative / conservative.
  priest : ~cardinal / blacksuit.
  cardinal : redsuit / redsuit.
  car : mobile / mobile.
  tie : suit / suit.
  wine & steak & coffee : ~sports / heartdisease.
  sports : man / football | rugby | tennis.
  sports : woman / swim | jogging | tennis.
  toys & (football | rugby) : ball / ball.
  toys : boy / weapon.
  toys : girl / doll.
)";

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string at(std::size_t v, std::size_t k) {
  return "at_" + std::to_string(v) + "_" + std::to_string(k);
}

std::string use(std::size_t v, std::size_t w) {
  return "use_" + std::to_string(v) + "_" + std::to_string(w);
}

}  // namespace

std::string_view people_theory_text() { return kPeople; }

PeopleVariant parse_people_variant(std::string_view name) {
  const std::string n = lower(name);
  if (n == "boy") return PeopleVariant::Boy;
  if (n == "girl") return PeopleVariant::Girl;
  if (n == "man") return PeopleVariant::Man;
  if (n == "woman") return PeopleVariant::Woman;
  if (n == "man_student" || n == "man&student" || n == "man+student") {
    return PeopleVariant::ManStudent;
  }
  if (n == "woman_student" || n == "woman&student" || n == "woman+student") {
    return PeopleVariant::WomanStudent;
  }
  throw std::invalid_argument("unknown people variant '" + std::string(name) + "'");
}

std::string to_string(PeopleVariant v) {
  switch (v) {
    case PeopleVariant::Boy: return "boy";
    case PeopleVariant::Girl: return "girl";
    case PeopleVariant::Man: return "man";
    case PeopleVariant::Woman: return "woman";
    case PeopleVariant::ManStudent: return "man_student";
    case PeopleVariant::WomanStudent: return "woman_student";
  }
  return "?";
}

DefaultTheory generate_people(PeopleVariant v) {
  DefaultTheory t = parse_theory(kPeople);
  auto fact = [&](std::string_view a) { t.facts.push_back(Formula::atom(a)); };
  switch (v) {
    case PeopleVariant::Boy: fact("boy"); break;
    case PeopleVariant::Girl: fact("girl"); break;
    case PeopleVariant::Man: fact("man"); break;
    case PeopleVariant::Woman: fact("woman"); break;
    case PeopleVariant::ManStudent: fact("man"); fact("student"); break;
    case PeopleVariant::WomanStudent: fact("woman"); fact("student"); break;
  }
  return t;
}

std::vector<Edge> parse_edges(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t pos = 0;
  auto number = [&]() -> std::size_t {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) {
      throw std::invalid_argument("malformed edge list near position " + std::to_string(start));
    }
    return std::stoul(std::string(text.substr(start, pos - start)));
  };
  while (pos < text.size()) {
    Edge e;
    e.from = number();
    if (pos >= text.size() || (text[pos] != '-' && text[pos] != '>' && text[pos] != ':')) {
      throw std::invalid_argument("expected '-' in edge list near position " + std::to_string(pos));
    }
    ++pos;
    if (pos < text.size() && text[pos] == '>') ++pos;  // "0->1"
    e.to = number();
    edges.push_back(e);
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos < text.size()) {
      if (text[pos] != ',') {
        throw std::invalid_argument("expected ',' in edge list near position " + std::to_string(pos));
      }
      ++pos;
    }
  }
  return edges;
}

HamiltonInstance generate_hamilton(std::size_t vertices, std::span<const Edge> edges) {
  HamiltonInstance h;
  h.vertices = vertices;
  for (const Edge& e : edges) {
    if (e.from >= vertices || e.to >= vertices) {
      throw std::invalid_argument("edge endpoint outside 0.." + std::to_string(vertices - 1));
    }
    if (e.from == e.to) throw std::invalid_argument("self-loops are not allowed");
    if (std::find(h.edges.begin(), h.edges.end(), e) != h.edges.end()) continue;
    h.edges.push_back(e);
  }

  DefaultTheory& t = h.theory;
  const std::size_t n = vertices;
  t.facts.push_back(Formula::atom(at(0, 0)));
  for (std::size_t a = 0; a < h.edges.size(); ++a) {
    for (std::size_t b = a + 1; b < h.edges.size(); ++b) {
      if (h.edges[a].from != h.edges[b].from) continue;
      t.facts.push_back(Formula::disjunction(
          Formula::negation(Formula::atom(use(h.edges[a].from, h.edges[a].to))),
          Formula::negation(Formula::atom(use(h.edges[b].from, h.edges[b].to)))));
    }
  }

  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      const Edge& edge = h.edges[e];
      const bool leaves_start = edge.from == 0;
      const bool enters_start = edge.to == 0;
      if (leaves_start != (k == 0)) continue;
      if (enters_start != (k + 1 == n)) continue;
      const Formula u = Formula::atom(use(edge.from, edge.to));
      t.add_default(Formula::atom(at(edge.from, k)), {u},
                    Formula::conjunction(Formula::atom(at(edge.to, k + 1)), u));
      h.choice.resize(t.defaults.size());
      h.choice.back() = std::make_pair(e, k);
    }
  }

  const Formula ok = Formula::atom("ok");
  for (std::size_t w = 1; w < n; ++w) {
    for (std::size_t j = 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        t.add_default(Formula::conjunction(Formula::atom(at(w, j)), Formula::atom(at(w, k))), {ok},
                      Formula::negation(ok));
      }
    }
  }
  const Formula not_closed = Formula::negation(Formula::atom(at(0, n)));
  t.add_default(Formula::constant(true), {not_closed}, Formula::negation(not_closed));
  h.choice.resize(t.defaults.size());
  return h;
}

std::optional<std::vector<std::size_t>> decode_cycle(const HamiltonInstance& h,
                                                     std::span<const std::size_t> generating_ids) {
  const std::size_t n = h.vertices;
  std::vector<std::optional<Edge>> by_step(n);
  for (std::size_t id : generating_ids) {
    if (id >= h.choice.size() || !h.choice[id]) return std::nullopt;
    const auto [e, k] = *h.choice[id];
    if (by_step[k]) return std::nullopt;
    by_step[k] = h.edges[e];
  }
  std::vector<std::size_t> order;
  std::vector<bool> visited(n, false);
  std::size_t current = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (!by_step[k] || by_step[k]->from != current || visited[current]) return std::nullopt;
    visited[current] = true;
    order.push_back(current);
    current = by_step[k]->to;
  }
  if (current != 0) return std::nullopt;
  return order;
}

}  // namespace gadel::problems
