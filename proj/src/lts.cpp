#include "gradelic/lts.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gradelic {

using json = nlohmann::json;

Lts::Lts(std::vector<std::string> atoms, std::vector<std::string> names,
         std::vector<std::vector<std::string>> labels,
         std::vector<std::vector<StateId>> succ, StateId initial)
    : atoms_(std::move(atoms)),
      names_(std::move(names)),
      labels_(std::move(labels)),
      succ_(std::move(succ)),
      initial_(initial) {
  std::sort(atoms_.begin(), atoms_.end());
  atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  if (names_.empty()) throw LtsError("LTS has no states");
  if (labels_.size() != names_.size() || succ_.size() != names_.size()) {
    throw LtsError("LTS: label/successor tables do not match the state count");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw LtsError("duplicate state id " + n);
  }
  if (initial_ >= names_.size()) throw LtsError("initial state out of range");
  for (std::size_t s = 0; s < names_.size(); ++s) {
    auto& l = labels_[s];
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    for (const auto& a : l) {
      if (!std::binary_search(atoms_.begin(), atoms_.end(), a)) {
        throw LtsError("state " + names_[s] + " uses undeclared atom " + a);
      }
    }
    auto& out = succ_[s];
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    for (StateId t : out) {
      if (t >= names_.size()) throw LtsError("dangling edge from " + names_[s]);
    }
    if (out.empty()) throw LtsError("state " + names_[s] + " has no successor");
  }
}

bool Lts::holds(StateId s, std::string_view atom) const {
  const auto& l = labels_.at(s);
  return std::binary_search(l.begin(), l.end(), atom);
}

std::size_t Lts::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& s : succ_) d = std::max(d, s.size());
  return d;
}

StateId Lts::find(std::string_view name) const {
  for (StateId s = 0; s < names_.size(); ++s) {
    if (names_[s] == name) return s;
  }
  throw LtsError("unknown state " + std::string(name));
}

Lts Lts::with_initial(StateId s) const {
  if (s >= size()) throw LtsError("initial state out of range");
  Lts copy = *this;
  copy.initial_ = s;
  return copy;
}

LtsBuilder& LtsBuilder::atoms(std::vector<std::string> names) {
  atoms_ = std::move(names);
  explicit_atoms_ = true;
  return *this;
}

LtsBuilder& LtsBuilder::state(std::string id, std::vector<std::string> label) {
  if (!explicit_atoms_) {
    for (const auto& a : label) atoms_.push_back(a);
  }
  names_.push_back(std::move(id));
  labels_.push_back(std::move(label));
  return *this;
}

LtsBuilder& LtsBuilder::edge(std::string_view from, std::string_view to) {
  edges_.emplace_back(std::string(from), std::string(to));
  return *this;
}

LtsBuilder& LtsBuilder::initial(std::string_view id) {
  initial_ = std::string(id);
  return *this;
}

Lts LtsBuilder::build() const {
  std::map<std::string, StateId> index;
  for (StateId s = 0; s < names_.size(); ++s) index.emplace(names_[s], s);
  std::vector<std::vector<StateId>> succ(names_.size());
  for (const auto& [a, b] : edges_) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw LtsError("dangling edge " + a + " -> " + b);
    }
    succ[ia->second].push_back(ib->second);
  }
  StateId init = 0;
  if (!initial_.empty()) {
    auto it = index.find(initial_);
    if (it == index.end()) throw LtsError("unknown initial state " + initial_);
    init = it->second;
  }
  return Lts(atoms_, names_, labels_, std::move(succ), init);
}

Lts load_lts(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw LtsError(std::string("LTS parse error: ") + e.what());
  }
  try {
    LtsBuilder b;
    if (j.contains("atoms")) b.atoms(j.at("atoms").get<std::vector<std::string>>());
    for (const auto& s : j.at("states")) {
      std::vector<std::string> label;
      if (s.contains("label")) label = s.at("label").get<std::vector<std::string>>();
      b.state(s.at("id").get<std::string>(), std::move(label));
    }
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw LtsError("edge must be a pair");
      b.edge(e[0].get<std::string>(), e[1].get<std::string>());
    }
    if (j.contains("initial")) b.initial(j.at("initial").get<std::string>());
    return b.build();
  } catch (const json::exception& e) {
    throw LtsError(std::string("LTS format error: ") + e.what());
  }
}

Lts load_lts_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LtsError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_lts(ss.str());
}

std::string to_json(const Lts& lts) {
  json j;
  j["atoms"] = lts.atoms();
  j["states"] = json::array();
  j["edges"] = json::array();
  for (StateId s = 0; s < lts.size(); ++s) {
    j["states"].push_back({{"id", lts.name(s)}, {"label", lts.label(s)}});
    for (StateId t : lts.successors(s)) {
      j["edges"].push_back({lts.name(s), lts.name(t)});
    }
  }
  j["initial"] = lts.name(lts.initial());
  return j.dump(2);
}

std::string to_dot(const Lts& lts) {
  std::ostringstream o;
  o << "digraph lts {\n";
  for (StateId s = 0; s < lts.size(); ++s) {
    o << "  n" << s << " [label=\"" << lts.name(s) << "\\n{";
    for (std::size_t i = 0; i < lts.label(s).size(); ++i) {
      o << (i ? "," : "") << lts.label(s)[i];
    }
    o << "}\"" << (s == lts.initial() ? ", peripheries=2" : "") << "];\n";
    for (StateId t : lts.successors(s)) o << "  n" << s << " -> n" << t << ";\n";
  }
  o << "}\n";
  return o.str();
}

bool is_path(const Lts& lts, const Path& p) {
  if (p.empty()) return false;
  for (StateId s : p) {
    if (s >= lts.size()) return false;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const auto& out = lts.successors(p[i]);
    if (!std::binary_search(out.begin(), out.end(), p[i + 1])) return false;
  }
  return true;
}

bool is_lasso(const Lts& lts, const Lasso& l) {
  if (l.loop.empty()) return false;
  Path whole = l.stem;
  whole.insert(whole.end(), l.loop.begin(), l.loop.end());
  whole.push_back(l.loop.front());
  return is_path(lts, whole);
}

bool is_prefix(const Path& a, const Path& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

std::vector<Path> enumerate_paths(const Lts& lts, StateId from, std::size_t max_len) {
  std::vector<Path> out;
  if (max_len == 0) return out;
  Path cur{from};
  auto rec = [&](auto& self) -> void {
    out.push_back(cur);
    if (cur.size() == max_len) return;
    for (StateId t : lts.successors(cur.back())) {
      cur.push_back(t);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

Lts unroll(const Lts& s, std::size_t k) {
  // Copy of s first (ids prefixed), then the tree levels 0..k.
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> labels;
  std::vector<std::vector<StateId>> succ;
  for (StateId q = 0; q < s.size(); ++q) {
    names.push_back("c:" + s.name(q));
    labels.push_back(s.label(q));
    succ.push_back(s.successors(q));
  }
  const StateId root = names.size();
  // Breadth-first over paths; each tree node remembers its last S-state.
  struct Item {
    StateId node;
    StateId last;
    std::string id;
    std::size_t depth;
  };
  std::vector<Item> frontier{{root, s.initial(), s.name(s.initial()), 0}};
  names.push_back("u:" + s.name(s.initial()));
  labels.push_back(s.label(s.initial()));
  succ.emplace_back();
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    Item it = frontier[i];
    for (StateId t : s.successors(it.last)) {
      if (it.depth == k) {
        succ[it.node].push_back(t);  // into the copy
        continue;
      }
      StateId child = names.size();
      std::string id = it.id + "." + s.name(t);
      names.push_back("u:" + id);
      labels.push_back(s.label(t));
      succ.emplace_back();
      succ[it.node].push_back(child);
      frontier.push_back({child, t, id, it.depth + 1});
    }
  }
  return Lts(s.atoms(), std::move(names), std::move(labels), std::move(succ), root);
}

Lts relabel(const Lts& s, std::vector<std::string> atoms,
            const std::vector<std::vector<std::string>>& labels) {
  if (labels.size() != s.size()) throw LtsError("relabel: assignment is not total");
  std::vector<std::string> names;
  std::vector<std::vector<StateId>> succ;
  for (StateId q = 0; q < s.size(); ++q) {
    names.push_back(s.name(q));
    succ.push_back(s.successors(q));
  }
  return Lts(std::move(atoms), std::move(names), labels, std::move(succ), s.initial());
}

}  // namespace gradelic
