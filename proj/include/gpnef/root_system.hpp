#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "gpnef/cartan.hpp"
#include "gpnef/errors.hpp"

namespace gpnef {

using Ivec = std::vector<std::int64_t>;

namespace detail {

inline void check_same_size(const Ivec& a, const Ivec& b, const char* what) {
  if (a.size() != b.size())
    throw UsageError(std::string(what) + ": rank mismatch (" +
                     std::to_string(a.size()) + " vs " +
                     std::to_string(b.size()) + ")");
}

}  // namespace detail

// An integral weight in the fundamental-weight basis: fw[i] = <lambda, alpha_{i+1}^vee>.
struct Weight {
  Ivec fw;

  Weight() = default;
  explicit Weight(Ivec coeffs) : fw(std::move(coeffs)) {}

  int rank() const { return static_cast<int>(fw.size()); }
  std::int64_t operator[](int i) const { return fw[static_cast<size_t>(i)]; }

  bool is_zero() const {
    return std::all_of(fw.begin(), fw.end(), [](std::int64_t v) { return v == 0; });
  }
  bool is_dominant() const {
    return std::all_of(fw.begin(), fw.end(), [](std::int64_t v) { return v >= 0; });
  }

  friend bool operator==(const Weight&, const Weight&) = default;
};

inline Weight operator+(const Weight& a, const Weight& b) {
  detail::check_same_size(a.fw, b.fw, "weight sum");
  Weight r = a;
  for (size_t k = 0; k < r.fw.size(); ++k) r.fw[k] += b.fw[k];
  return r;
}

inline Weight operator-(const Weight& a, const Weight& b) {
  detail::check_same_size(a.fw, b.fw, "weight difference");
  Weight r = a;
  for (size_t k = 0; k < r.fw.size(); ++k) r.fw[k] -= b.fw[k];
  return r;
}

inline Weight operator-(const Weight& a) {
  Weight r = a;
  for (auto& v : r.fw) v = -v;
  return r;
}

inline Weight operator*(std::int64_t c, const Weight& a) {
  Weight r = a;
  for (auto& v : r.fw) v *= c;
  return r;
}

// A root together with its coroot, in three integral coordinate systems:
//   on_simple_roots[j]        coefficient of alpha_{j+1} in alpha
//   on_simple_coroots[j]      coefficient of alpha_{j+1}^vee in alpha^vee
//   on_fundamental_weights[j] <alpha, alpha_{j+1}^vee>, i.e. alpha as a Weight
struct Root {
  Ivec on_simple_roots;
  Ivec on_simple_coroots;
  Ivec on_fundamental_weights;

  int rank() const { return static_cast<int>(on_simple_roots.size()); }

  std::int64_t height() const {
    return std::accumulate(on_simple_roots.begin(), on_simple_roots.end(),
                           std::int64_t{0});
  }

  bool is_positive() const {
    bool nonzero = false;
    for (std::int64_t v : on_simple_roots) {
      if (v < 0) return false;
      if (v > 0) nonzero = true;
    }
    return nonzero;
  }

  Weight as_weight() const { return Weight(on_fundamental_weights); }

  friend bool operator==(const Root&, const Root&) = default;
};

inline Root operator-(const Root& a) {
  Root r = a;
  for (auto& v : r.on_simple_roots) v = -v;
  for (auto& v : r.on_simple_coroots) v = -v;
  for (auto& v : r.on_fundamental_weights) v = -v;
  return r;
}

// <lambda, alpha^vee>, an integer.
inline std::int64_t pairing(const Weight& lambda, const Root& alpha) {
  detail::check_same_size(lambda.fw, alpha.on_simple_coroots, "pairing");
  std::int64_t s = 0;
  for (size_t j = 0; j < lambda.fw.size(); ++j)
    s += alpha.on_simple_coroots[j] * lambda.fw[j];
  return s;
}

// s_alpha(lambda) = lambda - <lambda, alpha^vee> alpha.
inline Weight reflect(const Weight& lambda, const Root& alpha) {
  const std::int64_t p = pairing(lambda, alpha);
  Weight r = lambda;
  for (size_t j = 0; j < r.fw.size(); ++j)
    r.fw[j] -= p * alpha.on_fundamental_weights[j];
  return r;
}

// s_alpha(beta), reflecting the coroot side along (s_alpha beta)^vee =
// beta^vee - <alpha, beta^vee> alpha^vee.
inline Root reflect(const Root& beta, const Root& alpha) {
  const std::int64_t p = pairing(beta.as_weight(), alpha);
  const std::int64_t q = pairing(alpha.as_weight(), beta);
  Root r = beta;
  for (size_t j = 0; j < r.on_simple_roots.size(); ++j) {
    r.on_simple_roots[j] -= p * alpha.on_simple_roots[j];
    r.on_simple_coroots[j] -= q * alpha.on_simple_coroots[j];
    r.on_fundamental_weights[j] -= p * alpha.on_fundamental_weights[j];
  }
  return r;
}

// Immutable, cheaply copyable handle to a built root system. Positive roots
// are ordered by (height, simple-root coefficients lex), so simple roots come
// first and the highest root last.
class RootSystem {
 public:
  RootSystem() = default;

  const CartanType& type() const { return data().type; }
  int rank() const { return data().type.rank; }
  const IntMatrix& cartan() const { return data().cartan; }

  const std::vector<Root>& positive_roots() const { return data().positive; }
  int positive_count() const { return static_cast<int>(data().positive.size()); }

  // 1-based node index.
  const Root& simple_root(int i) const {
    check_node(i);
    return data().positive[static_cast<size_t>(data().simple_pos[static_cast<size_t>(i - 1)])];
  }

  const Root& highest_root() const { return data().positive.back(); }

  // Index into positive_roots(); alpha may be given as a negative root.
  int positive_root_index(const Root& alpha) const {
    Ivec key = alpha.is_positive() ? alpha.on_simple_roots
                                   : (-alpha).on_simple_roots;
    auto it = data().index.find(key);
    if (it == data().index.end())
      throw UsageError("root does not belong to this root system");
    return it->second;
  }

  Weight fundamental_weight(int i) const {
    check_node(i);
    Ivec v(static_cast<size_t>(rank()), 0);
    v[static_cast<size_t>(i - 1)] = 1;
    return Weight(std::move(v));
  }

  Weight rho() const { return Weight(Ivec(static_cast<size_t>(rank()), 1)); }
  Weight zero_weight() const { return Weight(Ivec(static_cast<size_t>(rank()), 0)); }

  bool same_system(const RootSystem& other) const {
    return d_ == other.d_ || type() == other.type();
  }

  explicit operator bool() const { return static_cast<bool>(d_); }

  friend RootSystem build_root_system(const CartanType& ct);

 private:
  struct Data {
    CartanType type;
    IntMatrix cartan;
    std::vector<Root> positive;
    std::map<Ivec, int> index;    // simple-root coefficients -> position
    std::vector<int> simple_pos;  // node i-1 -> position of alpha_i
  };

  const Data& data() const {
    if (!d_) throw UsageError("empty RootSystem handle");
    return *d_;
  }

  void check_node(int i) const {
    if (i < 1 || i > rank())
      throw UsageError("node index " + std::to_string(i) +
                       " out of range 1.." + std::to_string(rank()));
  }

  std::shared_ptr<const Data> d_;
};

// Closure of the simple roots under the simple reflections.
inline RootSystem build_root_system(const CartanType& ct) {
  auto data = std::make_shared<RootSystem::Data>();
  data->type = CartanType::make(ct.family, ct.rank);  // revalidates
  data->cartan = cartan_matrix(ct);
  const int n = ct.rank;

  std::vector<Root> simple;
  simple.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Root a;
    a.on_simple_roots.assign(static_cast<size_t>(n), 0);
    a.on_simple_coroots.assign(static_cast<size_t>(n), 0);
    a.on_fundamental_weights.resize(static_cast<size_t>(n));
    a.on_simple_roots[static_cast<size_t>(i)] = 1;
    a.on_simple_coroots[static_cast<size_t>(i)] = 1;
    for (int k = 0; k < n; ++k)
      a.on_fundamental_weights[static_cast<size_t>(k)] = data->cartan[k][i];
    simple.push_back(std::move(a));
  }

  std::map<Ivec, Root> all;
  std::deque<Root> queue;
  for (const Root& a : simple) {
    all.emplace(a.on_simple_roots, a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root b = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      Root c = reflect(b, simple[static_cast<size_t>(i)]);
      if (all.emplace(c.on_simple_roots, c).second) queue.push_back(c);
    }
  }

  for (auto& [key, root] : all)
    if (root.is_positive()) data->positive.push_back(root);
  std::sort(data->positive.begin(), data->positive.end(),
            [](const Root& x, const Root& y) {
              auto hx = x.height(), hy = y.height();
              if (hx != hy) return hx < hy;
              return x.on_simple_roots < y.on_simple_roots;
            });
  for (size_t k = 0; k < data->positive.size(); ++k)
    data->index.emplace(data->positive[k].on_simple_roots, static_cast<int>(k));
  data->simple_pos.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    Ivec key(static_cast<size_t>(n), 0);
    key[static_cast<size_t>(i)] = 1;
    data->simple_pos[static_cast<size_t>(i)] = data->index.at(key);
  }

  RootSystem rs;
  rs.d_ = std::move(data);
  return rs;
}

}  // namespace gpnef
