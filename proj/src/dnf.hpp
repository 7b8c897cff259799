#pragma once

// Operations on positive Boolean formulas stored as sets of minimal
// satisfying sets (see Dnf in word_automata.hpp).

#include <algorithm>
#include <vector>

#include "gradelic/word_automata.hpp"

namespace gradelic::dnf {

inline Dnf truth() { return Dnf{{}}; }
inline Dnf falsity() { return Dnf{}; }
inline Dnf atom(std::size_t q) { return Dnf{{q}}; }

// Drops duplicates and non-minimal disjuncts.
inline Dnf minimize(Dnf d) {
  for (auto& c : d) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(d.begin(), d.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  d.erase(std::unique(d.begin(), d.end()), d.end());
  Dnf out;
  for (auto& c : d) {
    bool subsumed = std::any_of(out.begin(), out.end(), [&](const auto& k) {
      return std::includes(c.begin(), c.end(), k.begin(), k.end());
    });
    if (!subsumed) out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Dnf lor(const Dnf& a, const Dnf& b) {
  Dnf out = a;
  out.insert(out.end(), b.begin(), b.end());
  return minimize(std::move(out));
}

inline Dnf land(const Dnf& a, const Dnf& b) {
  Dnf out;
  for (const auto& x : a) {
    for (const auto& y : b) {
      auto c = x;
      c.insert(c.end(), y.begin(), y.end());
      out.push_back(std::move(c));
    }
  }
  return minimize(std::move(out));
}

}  // namespace gradelic::dnf
