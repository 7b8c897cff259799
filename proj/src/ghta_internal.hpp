#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gradelic/ghta.hpp"

namespace gradelic::detail {

inline std::uint64_t mask_of(const std::vector<std::int32_t>& coords) {
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] >= 0) m |= std::uint64_t{1} << i;
  }
  return m;
}

// Coordinates 0..g-1 run the automaton for psi, g..2g-1 the prefix closure
// of its negation.
inline const Nbw& automaton_for(const ExistsInfo& c, std::size_t i) {
  return i < c.grade ? *c.plus : *c.minus;
}

inline bool all_coordinates_move(const ExistsInfo& c, const std::vector<std::int32_t>& coords,
                                 Letter sub) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0) continue;
    if (automaton_for(c, i).successors(static_cast<std::size_t>(coords[i]), sub).empty()) return false;
  }
  return true;
}

// A member that follows two or more psi coordinates must keep each of their
// partners alive and away from the sink, so distinct paths stay distinct.
inline bool separated(const ExistsInfo& c, const std::vector<std::int32_t>& m) {
  const std::size_t g = c.grade;
  std::size_t psi = 0;
  for (std::size_t i = 0; i < g; ++i) psi += m[i] >= 0;
  if (psi < 2) return true;
  for (std::size_t i = 0; i < g; ++i) {
    if (m[i] < 0) continue;
    const std::int32_t partner = m[i + g];
    if (partner < 0 || static_cast<std::size_t>(partner) == c.minus->top) return false;
  }
  return true;
}

using MemberFn = std::function<void(const std::vector<std::int32_t>&)>;
using DistributionFn = std::function<void(const std::vector<std::vector<std::int32_t>>&)>;

void for_each_member(const ExistsInfo& c, const std::vector<std::int32_t>& coords, Letter sub,
                     const MemberFn& fn);
void for_each_distribution(const ExistsInfo& c, const std::vector<std::int32_t>& coords, Letter sub,
                           const DistributionFn& fn);

}  // namespace gradelic::detail
