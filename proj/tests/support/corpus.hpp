#pragma once

#include <vector>

#include "iasi/error.hpp"
#include "iasi/families.hpp"

namespace corpus {

/// Every catalog family member with order at most `max_order`, trying all
/// parameter values in 1..max_order and skipping invalid combinations.
inline std::vector<iasi::Graph> catalog(std::size_t max_order) {
  using iasi::Family;
  const Family all[] = {Family::path,         Family::cycle,        Family::complete,
                        Family::complete_bipartite, Family::wheel,  Family::double_wheel,
                        Family::m_wheel,      Family::fan,          Family::gear,
                        Family::complete_sun, Family::complete_split, Family::windmill};
  const auto top = static_cast<long>(max_order);
  std::vector<iasi::Graph> out;
  auto consider = [&](Family f, std::vector<long> params) {
    try {
      auto g = iasi::generate(f, std::move(params));
      if (g.order() <= max_order) out.push_back(std::move(g));
    } catch (const iasi::InvalidInput&) {
    }
  };
  for (auto f : all) {
    if (iasi::family_arity(f) == 1) {
      for (long a = 1; a <= top; ++a) consider(f, {a});
    } else {
      for (long a = 1; a <= top; ++a)
        for (long b = 1; b <= top; ++b) consider(f, {a, b});
    }
  }
  return out;
}

struct RandomCase {
  std::size_t n;
  double p;
  std::uint64_t seed;
};

/// The 200 seeded random graphs: n cycles through 1..12, p through
/// {0.2, 0.5, 0.8}.
inline std::vector<RandomCase> random_cases() {
  const double ps[] = {0.2, 0.5, 0.8};
  std::vector<RandomCase> out;
  for (std::uint64_t i = 0; i < 200; ++i) out.push_back({1 + i % 12, ps[i % 3], 1000 + i});
  return out;
}

}  // namespace corpus
