#include <algorithm>

#include "ghta_internal.hpp"

namespace gradelic::detail {

namespace {

struct Moves {
  std::vector<std::size_t> active;                 // active coordinate indices
  std::vector<std::vector<std::size_t>> succ;      // successors per active coordinate
};

bool moves_of(const ExistsInfo& c, const std::vector<std::int32_t>& coords, Letter sub, Moves& out) {
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0) continue;
    auto s = automaton_for(c, i).successors(static_cast<std::size_t>(coords[i]), sub);
    if (s.empty()) return false;
    out.active.push_back(i);
    out.succ.push_back(std::move(s));
  }
  return !out.active.empty();
}

// Odometer over one successor per active coordinate.
template <class F>
void for_each_choice(const Moves& mv, F&& f) {
  std::vector<std::size_t> pick(mv.active.size(), 0);
  while (true) {
    f(pick);
    std::size_t k = 0;
    while (k < pick.size() && ++pick[k] == mv.succ[k].size()) pick[k++] = 0;
    if (k == pick.size()) return;
  }
}

}  // namespace

void for_each_member(const ExistsInfo& c, const std::vector<std::int32_t>& coords, Letter sub,
                     const MemberFn& fn) {
  Moves mv;
  if (!moves_of(c, coords, sub, mv)) return;
  const std::size_t k = mv.active.size();
  for_each_choice(mv, [&](const std::vector<std::size_t>& pick) {
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
      std::vector<std::int32_t> m(coords.size(), -1);
      for (std::size_t j = 0; j < k; ++j) {
        if ((s >> j) & 1u) m[mv.active[j]] = static_cast<std::int32_t>(mv.succ[j][pick[j]]);
      }
      if (separated(c, m)) fn(m);
    }
  });
}

void for_each_distribution(const ExistsInfo& c, const std::vector<std::int32_t>& coords, Letter sub,
                           const DistributionFn& fn) {
  Moves mv;
  if (!moves_of(c, coords, sub, mv)) return;
  const std::size_t k = mv.active.size();
  for_each_choice(mv, [&](const std::vector<std::size_t>& pick) {
    // set partitions as restricted growth strings
    std::vector<std::size_t> block(k, 0);
    while (true) {
      std::size_t blocks = 0;
      for (std::size_t b : block) blocks = std::max(blocks, b + 1);
      std::vector<std::vector<std::int32_t>> x(blocks, std::vector<std::int32_t>(coords.size(), -1));
      for (std::size_t j = 0; j < k; ++j) {
        x[block[j]][mv.active[j]] = static_cast<std::int32_t>(mv.succ[j][pick[j]]);
      }
      bool ok = true;
      for (const auto& m : x) ok = ok && separated(c, m);
      if (ok) fn(x);
      // next restricted growth string
      std::size_t j = k;
      bool advanced = false;
      while (!advanced && j > 1) {
        --j;
        std::size_t mx = 0;
        for (std::size_t i = 0; i < j; ++i) mx = std::max(mx, block[i]);
        if (block[j] <= mx) {
          ++block[j];
          for (std::size_t i = j + 1; i < k; ++i) block[i] = 0;
          advanced = true;
        }
      }
      if (!advanced) return;
    }
  });
}

}  // namespace gradelic::detail
