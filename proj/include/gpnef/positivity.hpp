#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gpnef/bundle.hpp"

namespace gpnef {

enum class PositivityStatus {
  Ample,        // every splitting exponent on every curve is > 0
  NefNotAmple,  // all exponents >= 0, some exponent = 0
  NotNef,       // some exponent < 0
};

inline const char* to_string(PositivityStatus s) {
  switch (s) {
    case PositivityStatus::Ample:
      return "ample";
    case PositivityStatus::NefNotAmple:
      return "nef-not-ample";
    case PositivityStatus::NotNef:
      return "not-nef";
  }
  return "?";
}

struct PositivityWitness {
  int curve = -1;
  std::int64_t entry = 0;
};

struct PositivityVerdict {
  PositivityStatus status = PositivityStatus::NotNef;
  std::int64_t global_min = 0;
  PositivityWitness witness;  // first curve (by id) attaining global_min
  std::string table_digest;
};

// Nef/ample certificate: the verdict is read off the minimum splitting
// exponent over all invariant curves, which decides both properties at once.
inline PositivityVerdict positivity(const BundleExpr& e, const GkmGraph& g) {
  const RestrictionTable table = restriction_table(e, g);
  PositivityVerdict v;
  v.table_digest = table_digest(table);
  bool first = true;
  for (size_t id = 0; id < table.rows.size(); ++id) {
    const std::int64_t m = table.rows[id].min_entry();
    if (first || m < v.global_min) {
      v.global_min = m;
      v.witness = {static_cast<int>(id), m};
      first = false;
    }
  }
  if (first) throw UsageError("positivity needs at least one invariant curve");
  v.status = v.global_min > 0    ? PositivityStatus::Ample
             : v.global_min == 0 ? PositivityStatus::NefNotAmple
                                 : PositivityStatus::NotNef;
  return v;
}

inline PositivityVerdict line_positivity(const Weight& lambda, const GkmGraph& g) {
  return positivity(BundleExpr::line(lambda), g);
}

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  std::string to_string() const {
    return std::to_string(num) + "/" + std::to_string(den);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

struct SeshadriResult {
  Rational value;
  std::vector<PositivityWitness> attaining;  // one pair per attaining curve
};

// Seshadri constant of a nef bundle at a fixed point: the minimum splitting
// exponent over the invariant curves through x. Integer-valued here, carried
// as a rational for interface stability.
inline SeshadriResult seshadri(const BundleExpr& e, const GkmGraph& g,
                               const FixedPoint& x) {
  const PositivityVerdict v = positivity(e, g);
  if (v.status == PositivityStatus::NotNef)
    throw PreconditionError(
        "the Seshadri constant is defined for nef bundles only, and this "
        "bundle is not nef: restriction to curve " +
        std::to_string(v.witness.curve) + " has exponent " +
        std::to_string(v.witness.entry) + " < 0");
  g.point(x.id);  // validates membership

  SeshadriResult r;
  bool first = true;
  std::vector<std::pair<int, std::int64_t>> mins;
  for (int cid : g.curves_through_ids(x.id)) {
    const std::int64_t m = restrict(e, g, g.curve(cid)).min_entry();
    mins.emplace_back(cid, m);
    if (first || m < r.value.num) {
      r.value = {m, 1};
      first = false;
    }
  }
  if (first) throw UsageError("fixed point lies on no invariant curve");
  for (auto& [cid, m] : mins)
    if (m == r.value.num) r.attaining.push_back({cid, m});
  return r;
}

inline SeshadriResult seshadri(const BundleExpr& e, const GkmGraph& g,
                               int point_id) {
  return seshadri(e, g, g.point(point_id));
}

}  // namespace gpnef
