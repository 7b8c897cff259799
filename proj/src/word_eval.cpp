#include <map>

#include "gradelic/word_automata.hpp"

namespace gradelic {

namespace {

class WeakEval {
 public:
  explicit WeakEval(const Word& w) : w_(w) {}

  bool at(const Ltl& f, std::size_t i) {
    auto key = std::make_pair(f.id(), i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool v = compute(f, i);
    memo_.emplace(key, v);
    return v;
  }

 private:
  bool compute(const Ltl& f, std::size_t i) {
    using K = Ltl::Kind;
    const std::size_t n = w_.size();
    switch (f.kind()) {
      case K::True: return true;
      case K::False: return false;
      case K::Atom: return (w_[i] >> f.index()) & 1u;
      case K::Not: return !at(f.lhs(), i);
      case K::Or: return at(f.lhs(), i) || at(f.rhs(), i);
      case K::And: return at(f.lhs(), i) && at(f.rhs(), i);
      case K::Next: return i + 1 < n && at(f.lhs(), i + 1);
      case K::Until:
        for (std::size_t j = i; j < n; ++j) {
          if (at(f.rhs(), j)) return true;
          if (!at(f.lhs(), j)) return false;
        }
        return false;
      case K::Release: {
        // every position holds rhs until lhs has been seen, and on a finite
        // word lhs must be seen somewhere
        bool released = false;
        for (std::size_t j = i; j < n; ++j) {
          if (!released && !at(f.rhs(), j)) return false;
          if (at(f.lhs(), j)) released = true;
        }
        return released;
      }
    }
    return false;
  }

  const Word& w_;
  std::map<std::pair<std::size_t, std::size_t>, bool> memo_;
};

class LassoEval {
 public:
  LassoEval(const Word& stem, const Word& loop) : stem_(stem.size()) {
    pos_ = stem;
    pos_.insert(pos_.end(), loop.begin(), loop.end());
  }

  const std::vector<bool>& eval(const Ltl& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    std::vector<bool> v = compute(f);
    return memo_.emplace(f.id(), std::move(v)).first->second;
  }

 private:
  std::size_t next(std::size_t i) const { return i + 1 < pos_.size() ? i + 1 : stem_; }

  std::vector<bool> compute(const Ltl& f) {
    using K = Ltl::Kind;
    const std::size_t n = pos_.size();
    std::vector<bool> v(n);
    switch (f.kind()) {
      case K::True: v.assign(n, true); break;
      case K::False: break;
      case K::Atom:
        for (std::size_t i = 0; i < n; ++i) v[i] = (pos_[i] >> f.index()) & 1u;
        break;
      case K::Not: {
        auto a = eval(f.lhs());
        for (std::size_t i = 0; i < n; ++i) v[i] = !a[i];
        break;
      }
      case K::Or:
      case K::And: {
        auto a = eval(f.lhs());
        auto b = eval(f.rhs());
        for (std::size_t i = 0; i < n; ++i) v[i] = f.kind() == K::Or ? a[i] || b[i] : a[i] && b[i];
        break;
      }
      case K::Next: {
        auto a = eval(f.lhs());
        for (std::size_t i = 0; i < n; ++i) v[i] = a[next(i)];
        break;
      }
      case K::Until:
      case K::Release: {
        // least fixpoint for U, greatest for R
        const bool until = f.kind() == K::Until;
        auto a = eval(f.lhs());
        auto b = eval(f.rhs());
        v.assign(n, !until);
        for (bool changed = true; changed;) {
          changed = false;
          for (std::size_t i = n; i-- > 0;) {
            bool x = until ? b[i] || (a[i] && v[next(i)]) : b[i] && (a[i] || v[next(i)]);
            if (x != v[i]) {
              v[i] = x;
              changed = true;
            }
          }
        }
        break;
      }
    }
    return v;
  }

  std::size_t stem_;
  Word pos_;
  std::map<std::size_t, std::vector<bool>> memo_;
};

}  // namespace

bool eval_weak(const Ltl& psi, const Word& w) {
  if (w.empty()) return false;
  WeakEval e(w);
  return e.at(psi, 0);
}

bool eval_lasso(const Ltl& psi, const Word& stem, const Word& loop) {
  if (loop.empty()) throw Error("eval_lasso: empty loop");
  LassoEval e(stem, loop);
  return e.eval(psi)[0];
}

}  // namespace gradelic
