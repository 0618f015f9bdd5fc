#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "gpnef/bundle.hpp"
#include "oracles.hpp"

using namespace gpnef;

namespace {

GkmGraph grassmannian(int d, int n) {
  const RootSystem rs = build_root_system({Family::A, n - 1});
  return invariant_curves(rs, Parabolic::from_omitted(rs, {d}));
}

Weight fundamental(const GkmGraph& g, int i) {
  return g.system().fundamental_weight(i);
}

const BundleExpr Q = BundleExpr::taut_quot();
const BundleExpr S = BundleExpr::taut_sub();
const BundleExpr T = BundleExpr::tangent();

}  // namespace

TEST_CASE("bundle ranks") {
  const GkmGraph g24 = grassmannian(2, 4);
  CHECK(bundle_rank(BundleExpr::trivial(5), g24) == 5);
  CHECK(bundle_rank(Q, g24) == 2);
  CHECK(bundle_rank(S, g24) == 2);
  CHECK(bundle_rank(T, g24) == 4);
  CHECK(bundle_rank(BundleExpr::line(fundamental(g24, 2)), g24) == 1);
  CHECK(bundle_rank(BundleExpr::det(T), g24) == 1);
  CHECK(bundle_rank(BundleExpr::sum(Q, S), g24) == 4);
  CHECK(bundle_rank(BundleExpr::tensor(Q, T), g24) == 8);
  CHECK(bundle_rank(BundleExpr::sym(2, Q), g24) == 3);
  CHECK(bundle_rank(BundleExpr::wedge(2, T), g24) == 6);
  CHECK(bundle_rank(BundleExpr::wedge(0, T), g24) == 1);
  CHECK(bundle_rank(BundleExpr::sym(0, S), g24) == 1);

  const GkmGraph g14 = grassmannian(1, 4);
  CHECK(bundle_rank(Q, g14) == 3);
  CHECK(bundle_rank(BundleExpr::wedge(2, Q), g14) == 3);
  CHECK(bundle_rank(T, g14) == 3);

  // binomial growth stays exact up to the guard boundary:
  // sym^20 of a rank-64 bundle has rank C(83,20)
  CHECK(bundle_rank(BundleExpr::sym(20, BundleExpr::trivial(64)), g24) ==
        8179808679272664720LL);
}

TEST_CASE("rank guards") {
  const GkmGraph g = grassmannian(2, 4);
  CHECK_THROWS_AS(BundleExpr::trivial(0), UsageError);
  CHECK_THROWS_AS(BundleExpr::trivial(-3), UsageError);
  CHECK_THROWS_AS(BundleExpr::sym(-1, Q), UsageError);
  CHECK_THROWS_WITH(BundleExpr::sym(25, Q),
                    Catch::Matchers::ContainsSubstring("exceeds the supported maximum 20"));
  CHECK_THROWS_AS(BundleExpr::wedge(21, Q), UsageError);

  // operand rank cap for sym/wedge
  CHECK_THROWS_WITH(bundle_rank(BundleExpr::sym(2, BundleExpr::trivial(65)), g),
                    Catch::Matchers::ContainsSubstring("operand rank 65"));
  CHECK_THROWS_WITH(bundle_rank(BundleExpr::wedge(2, BundleExpr::trivial(100)), g),
                    Catch::Matchers::ContainsSubstring("operand rank 100"));

  // wedge beyond the operand rank
  CHECK_THROWS_WITH(bundle_rank(BundleExpr::wedge(3, Q), g),
                    Catch::Matchers::ContainsSubstring(
                        "wedge exponent 3 exceeds the operand rank 2"));

  // 64-bit overflow in sums and products of ranks
  CHECK_THROWS_AS(bundle_rank(BundleExpr::sum(BundleExpr::trivial(INT64_MAX),
                                              BundleExpr::trivial(1)),
                              g),
                  UsageError);
  CHECK_THROWS_AS(
      bundle_rank(BundleExpr::tensor(BundleExpr::trivial(4611686018427387904LL),
                                     BundleExpr::trivial(4)),
                  g),
      UsageError);
}

TEST_CASE("context validation for Grassmannian leaves and line weights") {
  const RootSystem b2 = build_root_system({Family::B, 2});
  const GkmGraph gb = invariant_curves(b2, Parabolic::from_omitted(b2, {1}));
  CHECK_THROWS_WITH(bundle_rank(Q, gb),
                    Catch::Matchers::ContainsSubstring("defined only on Grassmannians"));
  CHECK_THROWS_WITH(bundle_rank(T, gb), Catch::Matchers::ContainsSubstring("B2"));

  const RootSystem a3 = build_root_system({Family::A, 3});
  const GkmGraph g2f = invariant_curves(a3, Parabolic::from_omitted(a3, {1, 2}));
  CHECK_THROWS_AS(bundle_rank(S, g2f), UsageError);  // two omitted nodes
  CHECK(bundle_rank(BundleExpr::line(Weight{{1, 2, 0}}), g2f) == 1);

  const GkmGraph g24 = grassmannian(2, 4);
  CHECK_THROWS_WITH(bundle_rank(BundleExpr::line(Weight{{1, 0, 0}}), g24),
                    Catch::Matchers::ContainsSubstring("Levi node 1"));
  CHECK_THROWS_WITH(bundle_rank(BundleExpr::line(Weight{{1}}), g24),
                    Catch::Matchers::ContainsSubstring("rank 3"));
}

TEST_CASE("line degrees") {
  SECTION("projective line") {
    const GkmGraph g = grassmannian(1, 2);
    const InvariantCurve& c = g.curve(0);
    for (std::int64_t k = -5; k <= 5; ++k)
      CHECK(line_degree(Weight{{k}}, g, c) == k);
  }

  SECTION("the Pluecker weight has degree one on every curve") {
    for (int n = 2; n <= 6; ++n)
      for (int d = 1; d < n; ++d) {
        const GkmGraph g = grassmannian(d, n);
        const Weight w = fundamental(g, d);
        for (const InvariantCurve& c : g.curves()) {
          INFO("Gr(" << d << "," << n << ") curve " << c.id);
          REQUIRE(line_degree(w, g, c) == 1);
        }
      }
  }

  SECTION("degrees are linear in the weight") {
    const GkmGraph g = grassmannian(2, 4);
    const Weight w = fundamental(g, 2);
    for (const InvariantCurve& c : g.curves()) {
      CHECK(line_degree(2 * w, g, c) == 2);
      CHECK(line_degree(-w, g, c) == -1);
      CHECK(line_degree(Weight{{0, 0, 0}}, g, c) == 0);
    }
  }

  SECTION("the value does not depend on the endpoint used") {
    for (const CartanType& ct :
         {CartanType{Family::A, 3}, CartanType{Family::B, 3},
          CartanType{Family::G, 2}}) {
      const RootSystem rs = build_root_system(ct);
      for (const std::vector<int>& omit :
           {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{1, 2}}) {
        const Parabolic p = Parabolic::from_omitted(rs, omit);
        const GkmGraph g = invariant_curves(rs, p);
        const Weight lam = p.base_weight();
        for (const InvariantCurve& c : g.curves()) {
          const FixedPoint& h = g.point(c.head);
          const Root& alpha = g.curve_root(c);
          const std::int64_t sgn = pairing(h.rho_image, alpha) > 0 ? 1 : -1;
          REQUIRE(sgn * pairing(h.rep.act(lam), alpha) ==
                  line_degree(lam, g, c));
          // raw pairings at the two endpoints are opposite
          REQUIRE(pairing(g.point(c.tail).rep.act(lam), alpha) ==
                  -pairing(h.rep.act(lam), alpha));
        }
      }
    }
  }
}

TEST_CASE("splitting types of the generators") {
  SECTION("tautological bundles on Gr(2,4)") {
    const GkmGraph g = grassmannian(2, 4);
    for (const InvariantCurve& c : g.curves()) {
      CHECK(restrict(Q, g, c).to_string() == "{1, 0}");
      CHECK(restrict(S, g, c).to_string() == "{0, -1}");
      CHECK(restrict(T, g, c).to_string() == "{2, 1, 1, 0}");
    }
  }

  SECTION("tangent bundle of projective space") {
    for (int n = 2; n <= 6; ++n) {
      const GkmGraph g = grassmannian(1, n);
      std::vector<std::int64_t> expected(static_cast<size_t>(n - 1), 1);
      expected.front() = 2;
      for (const InvariantCurve& c : g.curves())
        REQUIRE(restrict(T, g, c) == SplittingType(expected));
    }
  }

  SECTION("derived operations on Gr(2,4)") {
    const GkmGraph g = grassmannian(2, 4);
    const InvariantCurve& c = g.curve(0);
    CHECK(restrict(BundleExpr::sym(2, Q), g, c).to_string() == "{2, 1, 0}");
    CHECK(restrict(BundleExpr::wedge(2, T), g, c).to_string() ==
          "{3, 3, 2, 2, 1, 1}");
    CHECK(restrict(BundleExpr::det(T), g, c).to_string() == "{4}");
    CHECK(restrict(BundleExpr::dual(S), g, c).to_string() == "{1, 0}");
    CHECK(restrict(BundleExpr::sum(Q, BundleExpr::trivial(2)), g, c).to_string() ==
          "{1, 0, 0, 0}");
    CHECK(restrict(BundleExpr::tensor(Q, Q), g, c).to_string() == "{2, 1, 1, 0}");
    CHECK(restrict(BundleExpr::sym(0, Q), g, c).to_string() == "{0}");
    CHECK(restrict(BundleExpr::wedge(0, Q), g, c).to_string() == "{0}");
  }

  SECTION("line bundle products add degrees") {
    const GkmGraph g = grassmannian(1, 2);
    const InvariantCurve& c = g.curve(0);
    const BundleExpr e = BundleExpr::tensor(BundleExpr::line(Weight{{2}}),
                                            BundleExpr::line(Weight{{3}}));
    CHECK(restrict(e, g, c).to_string() == "{5}");
  }
}

TEST_CASE("splitting identities") {
  const GkmGraph g24 = grassmannian(2, 4);
  const GkmGraph g25 = grassmannian(2, 5);
  for (const GkmGraph& g : {g24, g25}) {
    const std::vector<BundleExpr> shapes = {
        Q, S, T, BundleExpr::sum(Q, S), BundleExpr::tensor(Q, BundleExpr::dual(S)),
        BundleExpr::sym(2, Q), BundleExpr::wedge(2, T),
        BundleExpr::line(fundamental(g, 2))};
    for (const BundleExpr& e : shapes) {
      for (const InvariantCurve& c : g.curves()) {
        const SplittingType se = restrict(e, g, c);
        // dual is an involution on splittings
        CHECK(restrict(BundleExpr::dual(BundleExpr::dual(e)), g, c) == se);
        // det carries the total degree
        CHECK(restrict(BundleExpr::det(e), g, c).entries() ==
              std::vector<std::int64_t>{se.total()});
        // tensoring with a rank-one trivial changes nothing
        CHECK(restrict(BundleExpr::tensor(e, BundleExpr::trivial(1)), g, c) == se);
        // sym^1 and wedge^1 are the identity
        CHECK(restrict(BundleExpr::sym(1, e), g, c) == se);
        CHECK(restrict(BundleExpr::wedge(1, e), g, c) == se);
        // top wedge is det
        const std::int64_t r = bundle_rank(e, g);
        if (r <= detail::kMaxSymWedgeExponent)
          CHECK(restrict(BundleExpr::wedge(r, e), g, c).entries() ==
                std::vector<std::int64_t>{se.total()});
        // rank agreement
        CHECK(se.size() == r);
      }
    }
  }
}

TEST_CASE("the tautological sequence is exact on every curve") {
  for (int n = 2; n <= 6; ++n)
    for (int d = 1; d < n; ++d) {
      const GkmGraph g = grassmannian(d, n);
      for (const InvariantCurve& c : g.curves()) {
        const SplittingType both = restrict(BundleExpr::sum(S, Q), g, c);
        REQUIRE(both.size() == n);
        REQUIRE(both.total() == 0);  // det(S + Q) = det(O^n)
      }
    }
}

TEST_CASE("restriction tables and digests") {
  const GkmGraph g = grassmannian(2, 4);
  const RestrictionTable tq = restriction_table(Q, g);
  REQUIRE(tq.rows.size() == g.curves().size());
  for (const SplittingType& row : tq.rows) CHECK(row.to_string() == "{1, 0}");

  const std::string dq = table_digest(tq);
  CHECK(dq.size() == 16);
  CHECK(dq.find_first_not_of("0123456789abcdef") == std::string::npos);
  CHECK(table_digest(restriction_table(Q, g)) == dq);  // deterministic
  CHECK(table_digest(restriction_table(S, g)) != dq);  // sensitive to content

  const RestrictionTable tt = restriction_table(T, g);
  for (const SplittingType& row : tt.rows) CHECK(row.min_entry() == 0);
}

TEST_CASE("expansion caps") {
  const GkmGraph g = grassmannian(2, 4);
  const InvariantCurve& c = g.curve(0);
  // rank C(49,20) = 28277527346376 exceeds the expansion cap
  CHECK_THROWS_WITH(restrict(BundleExpr::sym(20, BundleExpr::trivial(30)), g, c),
                    Catch::Matchers::ContainsSubstring("expansion cap"));
  CHECK_THROWS_WITH(
      restrict(BundleExpr::tensor(BundleExpr::trivial(1 << 11),
                                  BundleExpr::trivial(1 << 11)),
               g, c),
      Catch::Matchers::ContainsSubstring("expansion cap"));
  // the boundary itself is allowed
  CHECK_NOTHROW(restrict(BundleExpr::trivial(1 << 20), g, c));
}

TEST_CASE("splitting type ordering and accessors") {
  const SplittingType s({0, 2, -1, 2});
  CHECK(s.entries() == std::vector<std::int64_t>{2, 2, 0, -1});
  CHECK(s.size() == 4);
  CHECK(s.min_entry() == -1);
  CHECK(s.total() == 3);
  CHECK(s.to_string() == "{2, 2, 0, -1}");
  const SplittingType empty{std::vector<std::int64_t>{}};
  CHECK(empty.size() == 0);
  CHECK_THROWS_AS(empty.min_entry(), UsageError);
}
