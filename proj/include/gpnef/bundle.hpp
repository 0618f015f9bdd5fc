#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gpnef/flag.hpp"

namespace gpnef {

namespace detail {

inline constexpr std::int64_t kMaxSymWedgeExponent = 20;
inline constexpr std::int64_t kMaxSymWedgeRank = 64;
inline constexpr std::int64_t kMaxSplitEntries = 1 << 20;

inline std::int64_t checked_add_rank(std::int64_t a, std::int64_t b) {
  if (a > INT64_MAX - b) throw UsageError("bundle rank exceeds the 64-bit range");
  return a + b;
}

inline std::int64_t checked_mul_rank(std::int64_t a, std::int64_t b) {
  __int128 v = static_cast<__int128>(a) * b;
  if (v > INT64_MAX) throw UsageError("bundle rank exceeds the 64-bit range");
  return static_cast<std::int64_t>(v);
}

inline std::int64_t checked_binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 acc = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned __int128>(n - k + i);
    acc /= static_cast<unsigned __int128>(i);  // exact: i! divides any i consecutive integers
    if (acc > static_cast<unsigned __int128>(INT64_MAX))
      throw UsageError("bundle rank exceeds the 64-bit range");
  }
  return static_cast<std::int64_t>(acc);
}

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detail

enum class BundleKind {
  Line,
  TautSub,
  TautQuot,
  Tangent,
  Trivial,
  Dual,
  Sum,
  Tensor,
  Sym,
  Wedge,
  Det,
};

// Immutable expression tree over the bundle generators. Grassmannian-only
// leaves (S, Q, T) are validated at evaluation time, when the ambient space
// is known.
class BundleExpr {
 public:
  static BundleExpr line(Weight lambda) {
    return make(BundleKind::Line, std::move(lambda), 0, {});
  }

  static BundleExpr taut_sub() { return make(BundleKind::TautSub, {}, 0, {}); }
  static BundleExpr taut_quot() { return make(BundleKind::TautQuot, {}, 0, {}); }
  static BundleExpr tangent() { return make(BundleKind::Tangent, {}, 0, {}); }

  static BundleExpr trivial(std::int64_t r) {
    if (r < 1)
      throw UsageError("triv(" + std::to_string(r) + "): rank must be positive");
    return make(BundleKind::Trivial, {}, r, {});
  }

  static BundleExpr dual(BundleExpr a) {
    return make(BundleKind::Dual, {}, 0, {std::move(a)});
  }

  static BundleExpr sum(BundleExpr a, BundleExpr b) {
    return make(BundleKind::Sum, {}, 0, {std::move(a), std::move(b)});
  }

  static BundleExpr tensor(BundleExpr a, BundleExpr b) {
    return make(BundleKind::Tensor, {}, 0, {std::move(a), std::move(b)});
  }

  static BundleExpr sym(std::int64_t k, BundleExpr a) {
    check_exponent("sym", k);
    return make(BundleKind::Sym, {}, k, {std::move(a)});
  }

  static BundleExpr wedge(std::int64_t k, BundleExpr a) {
    check_exponent("wedge", k);
    return make(BundleKind::Wedge, {}, k, {std::move(a)});
  }

  static BundleExpr det(BundleExpr a) {
    return make(BundleKind::Det, {}, 0, {std::move(a)});
  }

  BundleKind kind() const { return n_->kind; }
  const Weight& line_weight() const { return n_->lambda; }
  std::int64_t parameter() const { return n_->param; }  // Trivial r, Sym/Wedge k
  const BundleExpr& child(size_t i = 0) const { return n_->kids[i]; }
  size_t child_count() const { return n_->kids.size(); }

  // Round-trips through the DSL parser.
  std::string to_string() const { return print(0); }

  friend bool operator==(const BundleExpr& a, const BundleExpr& b) {
    if (a.n_ == b.n_) return true;
    if (a.kind() != b.kind() || a.n_->param != b.n_->param ||
        a.n_->lambda != b.n_->lambda || a.child_count() != b.child_count())
      return false;
    for (size_t i = 0; i < a.child_count(); ++i)
      if (!(a.child(i) == b.child(i))) return false;
    return true;
  }

 private:
  struct Node {
    BundleKind kind;
    Weight lambda;
    std::int64_t param = 0;
    std::vector<BundleExpr> kids;
  };

  static BundleExpr make(BundleKind k, Weight lambda, std::int64_t param,
                         std::vector<BundleExpr> kids) {
    BundleExpr e;
    e.n_ = std::make_shared<const Node>(
        Node{k, std::move(lambda), param, std::move(kids)});
    return e;
  }

  BundleExpr() = default;

  static void check_exponent(const char* what, std::int64_t k) {
    if (k < 0)
      throw UsageError(std::string(what) + " exponent must be nonnegative (got " +
                       std::to_string(k) + ")");
    if (k > detail::kMaxSymWedgeExponent)
      throw UsageError(std::string(what) + " exponent " + std::to_string(k) +
                       " exceeds the supported maximum " +
                       std::to_string(detail::kMaxSymWedgeExponent));
  }

  // parent_prec: 0 sum context, 1 tensor context, 2 atom context.
  std::string print(int parent_prec) const {
    auto wrap = [&](const std::string& s, int prec) {
      return prec < parent_prec ? "(" + s + ")" : s;
    };
    switch (kind()) {
      case BundleKind::Line: {
        std::string s = "L[";
        for (int i = 0; i < n_->lambda.rank(); ++i)
          s += (i ? "," : "") + std::to_string(n_->lambda[i]);
        return s + "]";
      }
      case BundleKind::TautSub:
        return "S";
      case BundleKind::TautQuot:
        return "Q";
      case BundleKind::Tangent:
        return "T";
      case BundleKind::Trivial:
        return "triv(" + std::to_string(n_->param) + ")";
      case BundleKind::Dual:
        return "dual(" + child().print(0) + ")";
      case BundleKind::Det:
        return "det(" + child().print(0) + ")";
      case BundleKind::Sym:
        return "sym(" + std::to_string(n_->param) + "," + child().print(0) + ")";
      case BundleKind::Wedge:
        return "wedge(" + std::to_string(n_->param) + "," + child().print(0) + ")";
      case BundleKind::Sum:
        return wrap(child(0).print(0) + " + " + child(1).print(0), 0);
      case BundleKind::Tensor:
        return wrap(child(0).print(1) + "*" + child(1).print(1), 1);
    }
    throw UsageError("corrupt bundle expression");
  }

  std::shared_ptr<const Node> n_;
};

// Multiset of Grothendieck splitting exponents a_1 >= ... >= a_r, for
// E|_C = O(a_1) + ... + O(a_r) on an invariant curve C.
class SplittingType {
 public:
  SplittingType() = default;

  explicit SplittingType(std::vector<std::int64_t> entries)
      : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
  }

  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }

  std::int64_t min_entry() const {
    if (entries_.empty()) throw UsageError("empty splitting type");
    return entries_.back();
  }

  std::int64_t total() const {
    std::int64_t s = 0;
    for (std::int64_t v : entries_) s += v;
    return s;
  }

  std::string to_string() const {
    std::string s = "{";
    for (size_t k = 0; k < entries_.size(); ++k)
      s += (k ? ", " : "") + std::to_string(entries_[k]);
    return s + "}";
  }

  friend bool operator==(const SplittingType&, const SplittingType&) = default;

 private:
  std::vector<std::int64_t> entries_;
};

// The ambient space as Gr(d, n): type A_{n-1} with exactly one omitted node d.
struct GrassmannianShape {
  std::int64_t d = 0;
  std::int64_t n = 0;
};

inline std::optional<GrassmannianShape> grassmannian_shape(const RootSystem& rs,
                                                           const Parabolic& p) {
  if (rs.type().family != Family::A || p.omitted().size() != 1) return std::nullopt;
  return GrassmannianShape{p.omitted().front(), rs.rank() + 1};
}

namespace detail {

inline GrassmannianShape require_grassmannian(const GkmGraph& g, const char* leaf) {
  auto sh = grassmannian_shape(g.system(), g.parabolic());
  if (!sh) {
    std::string om;
    for (size_t k = 0; k < g.parabolic().omitted().size(); ++k)
      om += (k ? "," : "") + std::to_string(g.parabolic().omitted()[k]);
    throw UsageError(std::string(leaf) +
                     " is defined only on Grassmannians (type A, exactly one "
                     "omitted node); the ambient space is " +
                     g.system().type().to_string() + " with omitted {" + om + "}");
  }
  return *sh;
}

}  // namespace detail

// Line bundles on G/P are the characters of P: the weight must vanish on the
// Levi coroots, i.e. have coefficient 0 at every Levi node.
inline void require_line_weight(const Weight& lambda, const GkmGraph& g) {
  if (lambda.rank() != g.system().rank())
    throw UsageError("line bundle weight has " + std::to_string(lambda.rank()) +
                     " coefficients; the root system has rank " +
                     std::to_string(g.system().rank()));
  for (int i : g.parabolic().levi())
    if (lambda[i - 1] != 0)
      throw UsageError(
          "weight with nonzero coefficient at Levi node " + std::to_string(i) +
          " is not a character of P; line bundles on this space carry weights "
          "supported on the omitted nodes");
}

// Degree of the line bundle L_lambda on the invariant curve C. With w a
// representative of an endpoint and alpha the root label, the degree is
// sign(<w(rho), alpha^vee>) * <w(lambda), alpha^vee>; the sign factor makes
// the value independent of the chosen endpoint. At the tail (the shorter
// endpoint) the sign is +1.
inline std::int64_t line_degree(const Weight& lambda, const GkmGraph& g,
                                const InvariantCurve& c) {
  require_line_weight(lambda, g);
  const FixedPoint& x = g.point(c.tail);
  const Root& alpha = g.curve_root(c);
  const std::int64_t orient = pairing(x.rho_image, alpha) > 0 ? 1 : -1;
  return orient * pairing(x.rep.act(lambda), alpha);
}

// Rank of the bundle; validates context-dependent leaves and exponents.
inline std::int64_t bundle_rank(const BundleExpr& e, const GkmGraph& g) {
  switch (e.kind()) {
    case BundleKind::Line:
      require_line_weight(e.line_weight(), g);
      return 1;
    case BundleKind::Trivial:
      return e.parameter();
    case BundleKind::TautSub:
      return detail::require_grassmannian(g, "S").d;
    case BundleKind::TautQuot: {
      auto sh = detail::require_grassmannian(g, "Q");
      return sh.n - sh.d;
    }
    case BundleKind::Tangent: {
      auto sh = detail::require_grassmannian(g, "T");
      return sh.d * (sh.n - sh.d);
    }
    case BundleKind::Dual:
      return bundle_rank(e.child(), g);
    case BundleKind::Sum:
      return detail::checked_add_rank(bundle_rank(e.child(0), g),
                                      bundle_rank(e.child(1), g));
    case BundleKind::Tensor:
      return detail::checked_mul_rank(bundle_rank(e.child(0), g),
                                      bundle_rank(e.child(1), g));
    case BundleKind::Sym: {
      const std::int64_t r = bundle_rank(e.child(), g);
      if (r > detail::kMaxSymWedgeRank)
        throw UsageError("sym operand rank " + std::to_string(r) +
                         " exceeds the supported maximum " +
                         std::to_string(detail::kMaxSymWedgeRank));
      return detail::checked_binomial(r + e.parameter() - 1, e.parameter());
    }
    case BundleKind::Wedge: {
      const std::int64_t r = bundle_rank(e.child(), g);
      if (r > detail::kMaxSymWedgeRank)
        throw UsageError("wedge operand rank " + std::to_string(r) +
                         " exceeds the supported maximum " +
                         std::to_string(detail::kMaxSymWedgeRank));
      if (e.parameter() > r)
        throw UsageError("wedge exponent " + std::to_string(e.parameter()) +
                         " exceeds the operand rank " + std::to_string(r));
      return detail::checked_binomial(r, e.parameter());
    }
    case BundleKind::Det:
      bundle_rank(e.child(), g);  // validates the subtree
      return 1;
  }
  throw UsageError("corrupt bundle expression");
}

namespace detail {

inline void check_expansion(std::int64_t r) {
  if (r > kMaxSplitEntries)
    throw UsageError("splitting with " + std::to_string(r) +
                     " entries exceeds the expansion cap " +
                     std::to_string(kMaxSplitEntries));
}

inline std::vector<std::int64_t> restrict_entries(const BundleExpr& e,
                                                  const GkmGraph& g,
                                                  const InvariantCurve& c) {
  switch (e.kind()) {
    case BundleKind::Line:
      return {line_degree(e.line_weight(), g, c)};
    case BundleKind::Trivial:
      return std::vector<std::int64_t>(static_cast<size_t>(e.parameter()), 0);
    case BundleKind::TautQuot: {
      // Q|_C = O(1) + O^(n-d-1), uniformly over all invariant curves.
      auto sh = require_grassmannian(g, "Q");
      std::vector<std::int64_t> v(static_cast<size_t>(sh.n - sh.d), 0);
      v.front() = 1;
      return v;
    }
    case BundleKind::TautSub: {
      // S|_C sits inside the trivial bundle, so all exponents are <= 0, and
      // det(S|_C) = -det(Q|_C) = O(-1): rank d, degree -1 forces {0^(d-1), -1}.
      auto sh = require_grassmannian(g, "S");
      std::vector<std::int64_t> v(static_cast<size_t>(sh.d), 0);
      v.back() = -1;
      return v;
    }
    case BundleKind::Tangent: {
      require_grassmannian(g, "T");
      return restrict_entries(BundleExpr::tensor(BundleExpr::dual(BundleExpr::taut_sub()),
                                                 BundleExpr::taut_quot()),
                              g, c);
    }
    case BundleKind::Dual: {
      std::vector<std::int64_t> v = restrict_entries(e.child(), g, c);
      for (auto& a : v) a = -a;
      return v;
    }
    case BundleKind::Sum: {
      std::vector<std::int64_t> v = restrict_entries(e.child(0), g, c);
      std::vector<std::int64_t> w = restrict_entries(e.child(1), g, c);
      v.insert(v.end(), w.begin(), w.end());
      return v;
    }
    case BundleKind::Tensor: {
      check_expansion(bundle_rank(e, g));
      std::vector<std::int64_t> a = restrict_entries(e.child(0), g, c);
      std::vector<std::int64_t> b = restrict_entries(e.child(1), g, c);
      std::vector<std::int64_t> v;
      v.reserve(a.size() * b.size());
      for (std::int64_t x : a)
        for (std::int64_t y : b) v.push_back(x + y);
      return v;
    }
    case BundleKind::Sym: {
      const std::int64_t k = e.parameter();
      check_expansion(bundle_rank(e, g));
      std::vector<std::int64_t> a = restrict_entries(e.child(), g, c);
      if (k == 0) return {0};
      const std::int64_t r = static_cast<std::int64_t>(a.size());
      if (r == 0)
        throw UsageError("sym of a rank-0 restriction");
      std::vector<std::int64_t> idx(static_cast<size_t>(k), 0);  // nondecreasing
      std::vector<std::int64_t> v;
      for (;;) {
        std::int64_t s = 0;
        for (std::int64_t i : idx) s += a[static_cast<size_t>(i)];
        v.push_back(s);
        std::int64_t j = k - 1;
        while (j >= 0 && idx[static_cast<size_t>(j)] == r - 1) --j;
        if (j < 0) break;
        const std::int64_t next = idx[static_cast<size_t>(j)] + 1;
        for (std::int64_t t = j; t < k; ++t) idx[static_cast<size_t>(t)] = next;
      }
      return v;
    }
    case BundleKind::Wedge: {
      const std::int64_t k = e.parameter();
      check_expansion(bundle_rank(e, g));
      std::vector<std::int64_t> a = restrict_entries(e.child(), g, c);
      if (k == 0) return {0};
      const std::int64_t r = static_cast<std::int64_t>(a.size());
      std::vector<std::int64_t> idx(static_cast<size_t>(k));  // increasing
      for (std::int64_t t = 0; t < k; ++t) idx[static_cast<size_t>(t)] = t;
      std::vector<std::int64_t> v;
      for (;;) {
        std::int64_t s = 0;
        for (std::int64_t i : idx) s += a[static_cast<size_t>(i)];
        v.push_back(s);
        std::int64_t j = k - 1;
        while (j >= 0 && idx[static_cast<size_t>(j)] == r - k + j) --j;
        if (j < 0) break;
        ++idx[static_cast<size_t>(j)];
        for (std::int64_t t = j + 1; t < k; ++t)
          idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
      }
      return v;
    }
    case BundleKind::Det: {
      std::vector<std::int64_t> a = restrict_entries(e.child(), g, c);
      std::int64_t s = 0;
      for (std::int64_t x : a) s += x;
      return {s};
    }
  }
  throw UsageError("corrupt bundle expression");
}

}  // namespace detail

// Grothendieck splitting type of e restricted to the curve c.
inline SplittingType restrict(const BundleExpr& e, const GkmGraph& g,
                              const InvariantCurve& c) {
  return SplittingType(detail::restrict_entries(e, g, c));
}

// One splitting per curve, indexed by curve id.
struct RestrictionTable {
  std::vector<SplittingType> rows;
};

inline RestrictionTable restriction_table(const BundleExpr& e, const GkmGraph& g) {
  RestrictionTable t;
  t.rows.reserve(g.curves().size());
  for (const InvariantCurve& c : g.curves()) t.rows.push_back(restrict(e, g, c));
  return t;
}

// Stable 64-bit FNV-1a hash of the table, for regression pinning.
inline std::string table_digest(const RestrictionTable& t) {
  std::string buf;
  for (size_t id = 0; id < t.rows.size(); ++id) {
    buf += std::to_string(id);
    buf += ':';
    const auto& entries = t.rows[id].entries();
    for (size_t k = 0; k < entries.size(); ++k) {
      if (k) buf += ',';
      buf += std::to_string(entries[k]);
    }
    buf += ';';
  }
  const std::uint64_t h = detail::fnv1a64(buf);
  std::string hex(16, '0');
  for (int k = 0; k < 16; ++k)
    hex[static_cast<size_t>(15 - k)] = "0123456789abcdef"[(h >> (4 * k)) & 0xf];
  return hex;
}

}  // namespace gpnef
