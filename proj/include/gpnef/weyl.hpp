#pragma once

#include <span>
#include <string>
#include <vector>

#include "gpnef/root_system.hpp"

namespace gpnef {

namespace detail {

// Applies s_{i_1} ... s_{i_l} to a weight, rightmost factor first.
template <class T>
inline T apply_word(const RootSystem& rs, std::span<const int> word, T x) {
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    x = reflect(x, rs.simple_root(*it));
  return x;
}

// Recovers the lexicographically least reduced word of w from nu = w(mu),
// mu dominant, by stripping the smallest left descent at each step. For a
// regular mu this is exactly w; for mu on a wall it is the minimal-length
// coset representative modulo the stabilizer of mu.
inline std::vector<int> lex_min_word_from_image(const RootSystem& rs, Weight nu) {
  std::vector<int> word;
  const int n = rs.rank();
  for (;;) {
    int i = 1;
    while (i <= n && nu[i - 1] >= 0) ++i;
    if (i > n) break;
    word.push_back(i);
    nu = reflect(nu, rs.simple_root(i));
  }
  return word;
}

}  // namespace detail

// An element of the Weyl group, stored as its lexicographically least
// reduced word in the simple reflections (1-based node indices).
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(const RootSystem& rs) {
    return WeylElement(rs, {});
  }

  static WeylElement simple_reflection(const RootSystem& rs, int i) {
    rs.simple_root(i);  // validates the index
    return WeylElement(rs, {i});
  }

  // Accepts any word; the result stores the canonical reduced word.
  static WeylElement from_word(const RootSystem& rs, std::span<const int> word) {
    for (int i : word) rs.simple_root(i);
    Weight nu = detail::apply_word(rs, word, rs.rho());
    return WeylElement(rs, detail::lex_min_word_from_image(rs, std::move(nu)));
  }
  static WeylElement from_word(const RootSystem& rs, std::initializer_list<int> word) {
    return from_word(rs, std::span<const int>(word.begin(), word.size()));
  }

  // The reflection s_alpha along a (positive or negative) root of rs.
  static WeylElement reflection(const RootSystem& rs, const Root& alpha) {
    rs.positive_root_index(alpha);  // validates membership
    return WeylElement(rs, detail::lex_min_word_from_image(rs, reflect(rs.rho(), alpha)));
  }

  const RootSystem& system() const { return rs_; }
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }
  bool is_identity() const { return word_.empty(); }

  Weight act(const Weight& lambda) const {
    return detail::apply_word(rs_, word_, lambda);
  }
  Root act(const Root& alpha) const {
    return detail::apply_word(rs_, word_, alpha);
  }

  WeylElement inverse() const {
    std::vector<int> rev(word_.rbegin(), word_.rend());
    return from_word(rs_, rev);
  }

  // Composition of actions: (u * v)(x) = u(v(x)).
  WeylElement operator*(const WeylElement& v) const {
    if (!rs_.same_system(v.rs_))
      throw UsageError("Weyl product across different root systems");
    Weight nu = act(v.act(rs_.rho()));
    return WeylElement(rs_, detail::lex_min_word_from_image(rs_, std::move(nu)));
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.rs_.same_system(b.rs_) && a.word_ == b.word_;
  }

  // Length-then-lex comparison, the order used for fixed-point IDs.
  friend bool operator<(const WeylElement& a, const WeylElement& b) {
    if (a.word_.size() != b.word_.size())
      return a.word_.size() < b.word_.size();
    return a.word_ < b.word_;
  }

  std::string to_string() const {
    if (word_.empty()) return "e";
    std::string s;
    for (size_t k = 0; k < word_.size(); ++k) {
      if (k) s += ' ';
      s += 's' + std::to_string(word_[k]);
    }
    return s;
  }

 private:
  WeylElement(RootSystem rs, std::vector<int> canon)
      : rs_(std::move(rs)), word_(std::move(canon)) {}

  RootSystem rs_;
  std::vector<int> word_;
};

inline Weight weyl_act(const WeylElement& w, const Weight& lambda) {
  return w.act(lambda);
}

inline Root weyl_act(const WeylElement& w, const Root& alpha) {
  return w.act(alpha);
}

}  // namespace gpnef
