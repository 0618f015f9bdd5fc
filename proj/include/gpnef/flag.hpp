#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gpnef/weyl.hpp"

namespace gpnef {

// A parabolic subgroup P >= B, recorded by its Levi node set (1-based).
// The complement ("omitted" nodes) determines the flag variety G/P.
class Parabolic {
 public:
  static Parabolic from_levi(const RootSystem& rs, std::vector<int> levi) {
    return Parabolic(rs.rank(), normalize(rs.rank(), std::move(levi), "Levi"));
  }

  static Parabolic from_omitted(const RootSystem& rs, std::vector<int> omitted) {
    std::vector<int> om = normalize(rs.rank(), std::move(omitted), "omitted");
    std::vector<int> levi;
    size_t k = 0;
    for (int i = 1; i <= rs.rank(); ++i) {
      if (k < om.size() && om[k] == i)
        ++k;
      else
        levi.push_back(i);
    }
    return Parabolic(rs.rank(), std::move(levi));
  }

  int rank() const { return rank_; }
  const std::vector<int>& levi() const { return levi_; }        // sorted
  const std::vector<int>& omitted() const { return omitted_; }  // sorted

  bool is_levi_node(int i) const {
    return std::binary_search(levi_.begin(), levi_.end(), i);
  }

  // Sum of the fundamental weights at the omitted nodes. Its W-orbit indexes
  // W/W_P: the stabilizer is exactly W_P.
  Weight base_weight() const {
    Ivec v(static_cast<size_t>(rank_), 0);
    for (int i : omitted_) v[static_cast<size_t>(i - 1)] = 1;
    return Weight(std::move(v));
  }

  friend bool operator==(const Parabolic&, const Parabolic&) = default;

 private:
  friend class GkmGraph;
  Parabolic() = default;  // empty handle, used only inside GkmGraph

  Parabolic(int rank, std::vector<int> levi) : rank_(rank), levi_(std::move(levi)) {
    if (static_cast<int>(levi_.size()) == rank_)
      throw ConfigError(
          "the Levi set is the full diagram (P = G): the flag variety "
          "degenerates to a point; omit at least one node");
    size_t k = 0;
    for (int i = 1; i <= rank_; ++i) {
      if (k < levi_.size() && levi_[k] == i)
        ++k;
      else
        omitted_.push_back(i);
    }
  }

  static std::vector<int> normalize(int rank, std::vector<int> nodes,
                                    const char* what) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (int i : nodes)
      if (i < 1 || i > rank)
        throw ConfigError(std::string(what) + " node " + std::to_string(i) +
                          " out of range 1.." + std::to_string(rank));
    return nodes;
  }

  int rank_ = 0;
  std::vector<int> levi_;
  std::vector<int> omitted_;
};

namespace detail {

// Multiplicative integer kept as prime exponents, so Weyl group orders can
// be divided without ever evaluating them in fixed width.
struct PrimeExp {
  std::map<std::int64_t, int> e;

  void mul_int(std::int64_t n, int mult = 1) {
    for (std::int64_t p = 2; p * p <= n; ++p)
      while (n % p == 0) {
        e[p] += mult;
        n /= p;
      }
    if (n > 1) e[n] += mult;
  }

  void mul_factorial(int n, int mult = 1) {
    for (int p = 2; p <= n; ++p) {
      bool prime = true;
      for (int q = 2; q * q <= p; ++q)
        if (p % q == 0) {
          prime = false;
          break;
        }
      if (!prime) continue;
      int exp = 0;
      for (std::int64_t pw = p; pw <= n; pw *= p) exp += n / static_cast<int>(pw);
      e[p] += exp * mult;
    }
  }

  void mul(const PrimeExp& o, int sign) {
    for (auto& [p, k] : o.e) e[p] += k * sign;
  }
};

// Unsigned decimal accumulator (base 1e9 limbs), enough to print exact
// coset counts in cap-refusal messages.
struct BigDec {
  std::vector<std::uint32_t> limbs{1};  // little-endian

  void mul_small(std::uint32_t m) {
    std::uint64_t carry = 0;
    for (auto& limb : limbs) {
      std::uint64_t v = static_cast<std::uint64_t>(limb) * m + carry;
      limb = static_cast<std::uint32_t>(v % 1000000000u);
      carry = v / 1000000000u;
    }
    while (carry) {
      limbs.push_back(static_cast<std::uint32_t>(carry % 1000000000u));
      carry /= 1000000000u;
    }
  }

  std::string str() const {
    std::string s = std::to_string(limbs.back());
    for (auto it = limbs.rbegin() + 1; it != limbs.rend(); ++it) {
      std::string part = std::to_string(*it);
      s += std::string(9 - part.size(), '0') + part;
    }
    return s;
  }
};

// Order of the reflection group of one connected sub-diagram, classified by
// bond multiplicities and branch shape.
inline PrimeExp component_order(const IntMatrix& cartan,
                                const std::vector<int>& comp /*0-based*/) {
  PrimeExp ord;
  const int k = static_cast<int>(comp.size());
  if (k == 1) {
    ord.mul_int(2);
    return ord;
  }
  auto adjacent = [&](int a, int b) { return cartan[a][b] != 0; };
  int bond_max = 1;
  int da = -1, db = -1;  // ends of a double bond, if any
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y) {
      int a = comp[static_cast<size_t>(x)], b = comp[static_cast<size_t>(y)];
      if (!adjacent(a, b)) continue;
      int m = cartan[a][b] * cartan[b][a];
      if (m > bond_max) bond_max = m;
      if (m == 2) {
        da = a;
        db = b;
      }
    }
  auto degree = [&](int a) {
    int d = 0;
    for (int b : comp)
      if (b != a && adjacent(a, b)) ++d;
    return d;
  };
  if (bond_max == 3) {  // G2
    ord.mul_int(12);
    return ord;
  }
  if (bond_max == 2) {
    if (k == 2) {  // B2
      ord.mul_int(8);
      return ord;
    }
    if (degree(da) >= 2 && degree(db) >= 2) {  // F4
      ord.mul_int(1152);
      return ord;
    }
    ord.mul_factorial(k);  // B_k / C_k
    ord.mul_int(2, k);
    return ord;
  }
  // Simply laced: path, fork, or an E diagram.
  int branch = -1;
  for (int a : comp)
    if (degree(a) >= 3) branch = a;
  if (branch < 0) {  // A_k
    ord.mul_factorial(k + 1);
    return ord;
  }
  std::vector<int> arms;
  for (int b : comp) {
    if (b == branch || !adjacent(branch, b)) continue;
    int len = 0, prev = branch, cur = b;
    for (;;) {
      ++len;
      int next = -1;
      for (int c : comp)
        if (c != prev && c != cur && adjacent(cur, c)) next = c;
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 1) {  // D_k
    ord.mul_factorial(k);
    ord.mul_int(2, k - 1);
    return ord;
  }
  if (arms.size() == 3 && arms[0] == 1 && arms[1] == 2) {
    if (k == 6) ord.mul_int(51840);
    if (k == 7) ord.mul_int(2903040);
    if (k == 8) ord.mul_int(696729600);
    if (k >= 6 && k <= 8) return ord;
  }
  throw UsageError("unrecognized diagram component");  // unreachable for valid input
}

inline PrimeExp diagram_order(const IntMatrix& cartan, std::vector<int> nodes) {
  PrimeExp ord;
  std::set<int> todo(nodes.begin(), nodes.end());
  while (!todo.empty()) {
    std::vector<int> comp;
    std::deque<int> queue{*todo.begin()};
    todo.erase(todo.begin());
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      comp.push_back(a);
      for (auto it = todo.begin(); it != todo.end();) {
        if (cartan[a][*it] != 0) {
          queue.push_back(*it);
          it = todo.erase(it);
        } else {
          ++it;
        }
      }
    }
    ord.mul(component_order(cartan, comp), 1);
  }
  return ord;
}

}  // namespace detail

struct CosetCount {
  bool fits_u64 = false;
  std::uint64_t value = 0;  // meaningful only when fits_u64
  std::string decimal;      // always the exact value
};

// |W/W_P| by the order formulas, never by enumeration.
inline CosetCount count_cosets(const RootSystem& rs, const Parabolic& p) {
  if (p.rank() != rs.rank())
    throw UsageError("parabolic rank does not match the root system");
  std::vector<int> all(static_cast<size_t>(rs.rank()));
  for (int i = 0; i < rs.rank(); ++i) all[static_cast<size_t>(i)] = i;
  std::vector<int> levi0;
  for (int i : p.levi()) levi0.push_back(i - 1);

  detail::PrimeExp q = detail::diagram_order(rs.cartan(), all);
  q.mul(detail::diagram_order(rs.cartan(), levi0), -1);

  CosetCount cc;
  cc.fits_u64 = true;
  unsigned __int128 acc = 1;
  detail::BigDec dec;
  for (auto& [prime, exp] : q.e) {
    if (exp < 0) throw UsageError("Levi order does not divide the group order");
    for (int t = 0; t < exp; ++t) {
      dec.mul_small(static_cast<std::uint32_t>(prime));
      if (cc.fits_u64) {
        acc *= static_cast<unsigned __int128>(prime);
        if (acc > static_cast<unsigned __int128>(UINT64_MAX)) cc.fits_u64 = false;
      }
    }
  }
  if (cc.fits_u64) cc.value = static_cast<std::uint64_t>(acc);
  cc.decimal = dec.str();
  return cc;
}

inline constexpr std::uint64_t kDefaultCosetCap = 10'000'000;

// The minimal-length representative of w W_P.
inline WeylElement coset_min_rep(const WeylElement& w, const Parabolic& p) {
  const RootSystem& rs = w.system();
  if (p.rank() != rs.rank())
    throw UsageError("parabolic rank does not match the root system");
  Weight mu = w.act(p.base_weight());
  return WeylElement::from_word(
      rs, detail::lex_min_word_from_image(rs, std::move(mu)));
}

// A T-fixed point of G/P: a coset wW_P with its minimal representative.
// orbit_weight = rep(base weight) determines the coset; rho_image = rep(rho)
// carries the inversion data needed for restriction degree signs.
struct FixedPoint {
  int id = -1;
  WeylElement rep;
  Weight orbit_weight;
  Weight rho_image;
};

// A T-invariant curve: an unordered pair of fixed points labeled by the
// positive root whose reflection exchanges them. tail has the smaller
// (length, word) representative.
struct InvariantCurve {
  int id = -1;
  int tail = -1;
  int head = -1;
  int root_index = -1;  // into positive_roots()
};

class GkmGraph {
 public:
  GkmGraph() = default;

  const RootSystem& system() const { return rs_; }
  const Parabolic& parabolic() const { return p_; }
  const std::vector<FixedPoint>& points() const { return points_; }
  const std::vector<InvariantCurve>& curves() const { return curves_; }

  const FixedPoint& point(int id) const {
    if (id < 0 || id >= static_cast<int>(points_.size()))
      throw UsageError("unknown fixed point id " + std::to_string(id));
    return points_[static_cast<size_t>(id)];
  }

  const InvariantCurve& curve(int id) const {
    if (id < 0 || id >= static_cast<int>(curves_.size()))
      throw UsageError("unknown curve id " + std::to_string(id));
    return curves_[static_cast<size_t>(id)];
  }

  const Root& curve_root(const InvariantCurve& c) const {
    return rs_.positive_roots()[static_cast<size_t>(c.root_index)];
  }

  // Ids of the curves having the given fixed point as an endpoint.
  const std::vector<int>& curves_through_ids(int point_id) const {
    point(point_id);
    return through_[static_cast<size_t>(point_id)];
  }

  int fixed_point_id(const WeylElement& w) const {
    Weight mu = w.act(p_.base_weight());
    auto it = coset_index_.find(mu.fw);
    if (it == coset_index_.end())
      throw UsageError("element does not reduce into this fixed point set");
    return it->second;
  }

  // Complex dimension of G/P: positive roots not supported on the Levi set.
  int dimension() const {
    int levi_pos = 0;
    for (const Root& a : rs_.positive_roots()) {
      bool on_levi = true;
      for (int i : p_.omitted())
        if (a.on_simple_roots[static_cast<size_t>(i - 1)] != 0) on_levi = false;
      if (on_levi) ++levi_pos;
    }
    return rs_.positive_count() - levi_pos;
  }

  friend GkmGraph invariant_curves(const RootSystem& rs, const Parabolic& p,
                                   std::uint64_t max_cosets);

 private:
  RootSystem rs_;
  Parabolic p_;
  std::vector<FixedPoint> points_;
  std::vector<InvariantCurve> curves_;
  std::vector<std::vector<int>> through_;
  std::map<Ivec, int> coset_index_;  // orbit weight -> fixed point id
};

namespace detail {

inline void check_coset_cap(const RootSystem& rs, const Parabolic& p,
                            std::uint64_t max_cosets) {
  CosetCount cc = count_cosets(rs, p);
  if (!cc.fits_u64 || cc.value > max_cosets) {
    std::string where = rs.type().to_string() + " with Levi {";
    for (size_t k = 0; k < p.levi().size(); ++k)
      where += (k ? "," : "") + std::to_string(p.levi()[k]);
    where += "}";
    throw CapError("enumeration refused: |W/W_P| = " + cc.decimal + " for " +
                       where + " exceeds the cap " + std::to_string(max_cosets),
                   cc.decimal);
  }
}

}  // namespace detail

// All of W/W_P, ordered by (length, canonical word) of the minimal
// representatives; ids follow that order.
inline std::vector<FixedPoint> fixed_points(
    const RootSystem& rs, const Parabolic& p,
    std::uint64_t max_cosets = kDefaultCosetCap) {
  detail::check_coset_cap(rs, p, max_cosets);

  const Weight base = p.base_weight();
  std::set<Ivec> seen{base.fw};
  std::deque<Weight> queue{base};
  std::vector<Weight> orbit{base};
  while (!queue.empty()) {
    Weight mu = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i <= rs.rank(); ++i) {
      Weight nu = reflect(mu, rs.simple_root(i));
      if (seen.insert(nu.fw).second) {
        orbit.push_back(nu);
        queue.push_back(nu);
      }
    }
  }

  std::vector<FixedPoint> pts;
  pts.reserve(orbit.size());
  for (Weight& mu : orbit) {
    FixedPoint x;
    x.rep = WeylElement::from_word(
        rs, detail::lex_min_word_from_image(rs, mu));
    x.orbit_weight = std::move(mu);
    x.rho_image = x.rep.act(rs.rho());
    pts.push_back(std::move(x));
  }
  std::sort(pts.begin(), pts.end(), [](const FixedPoint& a, const FixedPoint& b) {
    return a.rep < b.rep;
  });
  for (size_t k = 0; k < pts.size(); ++k) pts[k].id = static_cast<int>(k);
  return pts;
}

// The full GKM graph: fixed points plus invariant curves. For each point x
// and positive root alpha, s_alpha moves x's coset to the coset whose orbit
// weight is mu - <mu, alpha^vee> alpha; a nonzero pairing yields the curve
// {x, s_alpha x} labeled alpha.
inline GkmGraph invariant_curves(const RootSystem& rs, const Parabolic& p,
                                 std::uint64_t max_cosets = kDefaultCosetCap) {
  GkmGraph g;
  g.rs_ = rs;
  g.p_ = p;
  g.points_ = fixed_points(rs, p, max_cosets);
  for (const FixedPoint& x : g.points_)
    g.coset_index_.emplace(x.orbit_weight.fw, x.id);
  g.through_.assign(g.points_.size(), {});

  const auto& pos = rs.positive_roots();
  for (const FixedPoint& x : g.points_) {
    for (size_t ai = 0; ai < pos.size(); ++ai) {
      const Root& alpha = pos[ai];
      const std::int64_t t = pairing(x.orbit_weight, alpha);
      if (t == 0) continue;
      Ivec partner = x.orbit_weight.fw;
      for (size_t j = 0; j < partner.size(); ++j)
        partner[j] -= t * alpha.on_fundamental_weights[j];
      const int y = g.coset_index_.at(partner);
      if (y < x.id) continue;  // emitted from the other endpoint
      InvariantCurve c;
      c.id = static_cast<int>(g.curves_.size());
      c.tail = x.id;
      c.head = y;
      c.root_index = static_cast<int>(ai);
      g.through_[static_cast<size_t>(x.id)].push_back(c.id);
      g.through_[static_cast<size_t>(y)].push_back(c.id);
      g.curves_.push_back(c);
    }
  }
  return g;
}

// Curves having x as an endpoint; "through x" means exactly that, since the
// T-fixed locus of an invariant curve is its two endpoints.
inline std::vector<InvariantCurve> curves_through(const GkmGraph& g,
                                                  const FixedPoint& x) {
  std::vector<InvariantCurve> out;
  for (int cid : g.curves_through_ids(x.id)) out.push_back(g.curve(cid));
  return out;
}

inline std::vector<InvariantCurve> curves_through(const GkmGraph& g, int point_id) {
  return curves_through(g, g.point(point_id));
}

}  // namespace gpnef
