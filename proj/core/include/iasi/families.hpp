#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iasi/graph.hpp"

namespace iasi {

enum class Family {
  path,
  cycle,
  complete,
  complete_bipartite,
  wheel,
  double_wheel,
  m_wheel,
  fan,
  gear,
  complete_sun,
  complete_split,
  windmill,
};

/// A family and its integer parameters, in the family's documented order:
///   path(n) cycle(n) complete(n)        n vertices
///   complete_bipartite(m, n)            parts a1..am, b1..bn
///   wheel(n)                            hub + rim cycle on n vertices
///   double_wheel(n)                     m_wheel(2, n)
///   m_wheel(m, n)                       hub + m disjoint rims C_n
///   fan(n)                              hub + path on n vertices
///   gear(n)                             wheel(n) with each rim edge subdivided
///   complete_sun(n)                     clique u1..un, w_j ~ u_j, u_{j+1}
///   complete_split(r, s)                clique k1..kr joined to s1..ss
///   windmill(n, k)                      k copies of K_n sharing "center"
struct FamilySpec {
  Family family = Family::path;
  std::vector<long> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

std::string_view family_name(Family f);
/// Accepts canonical names and the aliases sun, split.
std::optional<Family> family_from_name(std::string_view name);
std::size_t family_arity(Family f);

/// Parses "wheel:5" or "windmill:3,2". Throws InvalidInput.
FamilySpec parse_family_spec(std::string_view text);
/// "wheel(5)"
std::string to_string(const FamilySpec& spec);

/// Throws InvalidInput naming the violated constraint.
void validate(const FamilySpec& spec);

/// Canonical family member. Vertex naming per family:
///   path/cycle/complete: v1..vn; wheel/fan: "hub", v1..vn;
///   m_wheel/double_wheel: "hub", "c<j>:v<i>"; gear: "hub", rim v1..vn,
///   subdivision w1..wn (w_i between v_i and v_{i+1});
///   complete_sun: u1..un, w1..wn; complete_split: k1..kr, s1..ss;
///   windmill: "center", "b<j>_<i>" for blade j.
Graph generate(const FamilySpec& spec);

Graph generate(Family family, std::vector<long> params);

/// Erdos-Renyi G(n, p); fully determined by (n, p, seed).
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

}  // namespace iasi
