#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gradelic/formula.hpp"

namespace gradelic {

/// Structural problem in an LTS description (bad JSON, dangling edge,
/// totality violation, unknown atom, ...).
class LtsError : public Error {
 public:
  using Error::Error;
};

using StateId = std::size_t;

/// Finite labelled transition system with a total edge relation.
///
/// States are dense indices; `name(s)` keeps the external identifier.
/// Successor lists are sorted and duplicate free, so the i-th successor of
/// a state is a well-defined tree direction.
class Lts {
 public:
  Lts() = default;

  /// Builds and validates. `labels[s]` and `succ[s]` are indexed by state.
  Lts(std::vector<std::string> atoms, std::vector<std::string> names,
      std::vector<std::vector<std::string>> labels,
      std::vector<std::vector<StateId>> succ, StateId initial);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& atoms() const noexcept { return atoms_; }
  const std::string& name(StateId s) const { return names_.at(s); }
  StateId initial() const noexcept { return initial_; }
  const std::vector<StateId>& successors(StateId s) const { return succ_.at(s); }
  const std::vector<std::string>& label(StateId s) const { return labels_.at(s); }
  bool holds(StateId s, std::string_view atom) const;
  std::size_t degree(StateId s) const { return succ_.at(s).size(); }
  std::size_t max_degree() const noexcept;
  StateId find(std::string_view name) const;  // throws LtsError if missing

  /// Same structure rooted elsewhere.
  Lts with_initial(StateId s) const;

 private:
  std::vector<std::string> atoms_;
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> labels_;  // sorted
  std::vector<std::vector<StateId>> succ_;
  StateId initial_ = 0;
};

/// Incremental construction by name; `build()` validates.
class LtsBuilder {
 public:
  LtsBuilder& atoms(std::vector<std::string> names);
  LtsBuilder& state(std::string id, std::vector<std::string> label = {});
  LtsBuilder& edge(std::string_view from, std::string_view to);
  LtsBuilder& initial(std::string_view id);
  Lts build() const;

 private:
  std::vector<std::string> atoms_;
  bool explicit_atoms_ = false;
  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> labels_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::string initial_;
};

/// Reads the JSON format
/// {"atoms": [...], "states": [{"id": .., "label": [..]}], "edges": [[a,b]], "initial": id}.
Lts load_lts(std::string_view text);
Lts load_lts_file(const std::string& path);
std::string to_json(const Lts& lts);
std::string to_dot(const Lts& lts);

/// Finite path given as a state sequence.
using Path = std::vector<StateId>;

/// Ultimately periodic path stem . loop^omega.
struct Lasso {
  Path stem;
  Path loop;
};

bool is_path(const Lts& lts, const Path& p);
bool is_lasso(const Lts& lts, const Lasso& l);
/// Prefix order on finite paths.
bool is_prefix(const Path& a, const Path& b);

/// All paths from `from` with 1..max_len states, in lexicographic order.
std::vector<Path> enumerate_paths(const Lts& lts, StateId from, std::size_t max_len);

/// Unwinds the first k levels of `s` into a tree whose depth-k frontier
/// edges back into a copy of `s`. The unwinding from the new initial state
/// is isomorphic to the unwinding of `s`.
Lts unroll(const Lts& s, std::size_t k);

/// Replaces labels: `labels[s]` becomes the label of state s over the new
/// atom universe `atoms`.
Lts relabel(const Lts& s, std::vector<std::string> atoms,
            const std::vector<std::vector<std::string>>& labels);

}  // namespace gradelic
