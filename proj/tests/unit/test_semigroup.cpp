#include <string>
#include <vector>

#include "catch_amalgamated.hpp"
#include "relsemi/error.hpp"
#include "relsemi/semigroup.hpp"

using namespace relsemi;

namespace {
  // {0, a, b} with a * a = a, b * b = b and every other product 0.
  AbstractSemigroup two_idempotents() {
    return AbstractSemigroup::validate({"0", "a", "b"}, std::vector<std::vector<std::size_t>>{
                                                            {0, 0, 0},
                                                            {0, 1, 0},
                                                            {0, 0, 2},
                                                        });
  }

  std::vector<std::size_t> iota(std::size_t m) {
    std::vector<std::size_t> v(m);
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = i;
    }
    return v;
  }
}  // namespace

TEST_CASE("validation", "[semigroup]") {
  using Rows = std::vector<std::vector<std::size_t>>;
  CHECK_NOTHROW(two_idempotents());
  // x * (x * x) = x * y = x but (x * x) * x = y * x = y.
  CHECK_THROWS_WITH(AbstractSemigroup::validate({"x", "y"}, Rows{{1, 0}, {1, 1}}),
                    Catch::Matchers::ContainsSubstring("(0, 0, 0)"));
  CHECK_THROWS_AS(AbstractSemigroup::validate({"x", "x"}, Rows{{0, 0}, {0, 0}}), InputError);
  CHECK_THROWS_AS(AbstractSemigroup::validate({"x", "y"}, Rows{{0, 2}, {0, 0}}), InputError);
  CHECK_THROWS_AS(AbstractSemigroup::validate({"x", "y"}, Rows{{0}, {0, 0}}), InputError);
  CHECK_THROWS_AS(AbstractSemigroup::validate({""}, Rows{{0}}), InputError);
}

TEST_CASE("identity, zero and idempotents", "[semigroup]") {
  auto const h = two_idempotents();
  CHECK_FALSE(identity(h));
  CHECK(zero(h) == 0u);
  CHECK(idempotents(h) == std::vector<std::size_t>{0, 1, 2});
  CHECK(nontrivial_idempotents(h) == std::vector<std::size_t>{1, 2});
  CHECK(h.index_of("b") == 2u);
  CHECK_FALSE(h.index_of("c"));

  auto const g = cyclic_group(3);
  CHECK(identity(g) == 0u);
  CHECK_FALSE(zero(g));
  CHECK(idempotents(g) == std::vector<std::size_t>{0});

  auto const trivial = cyclic_group(1);
  CHECK(identity(trivial) == 0u);
  CHECK_FALSE(zero(trivial));
}

TEST_CASE("adjoining an identity or a zero", "[semigroup]") {
  auto const h  = two_idempotents();
  auto const h1 = adjoin_identity(h);
  REQUIRE(h1.size() == 4);
  CHECK(h1.name(3) == "1");
  CHECK(identity(h1) == 3u);
  CHECK(adjoin_identity(h1) == h1);

  auto const g0 = adjoin_zero(cyclic_group(2));
  CHECK(g0.size() == 3);
  CHECK(zero(g0) == 2u);

  // Fresh names are primed until unique.
  auto const n = null_band(1);
  CHECK(adjoin_zero(n).name(2) == "0'");
}

TEST_CASE("ideals and subsemigroups", "[semigroup]") {
  auto const                     h = two_idempotents();
  std::vector<std::size_t> const zero_only{0}, with_a{0, 1}, a_b{1, 2};
  CHECK(is_ideal(h, zero_only));
  CHECK(is_ideal(h, with_a));
  CHECK(is_subsemigroup(h, with_a));
  CHECK_FALSE(is_subsemigroup(h, a_b));
  CHECK_THROWS_AS(is_ideal(h, std::vector<std::size_t>{}), PreconditionError);

  auto const sub = restrict_to(h, with_a);
  CHECK(sub.names() == std::vector<std::string>{"0", "a"});
  CHECK_THROWS_AS(restrict_to(h, a_b), PreconditionError);

  CHECK(generated_by(h, a_b) == std::vector<std::size_t>{0, 1, 2});
  std::vector<std::size_t> const g{1};
  CHECK(generated_by(cyclic_group(4), g) == iota(4));
}

TEST_CASE("small named semigroups", "[semigroup]") {
  auto const r = right_zero_semigroup(3);
  auto const l = left_zero_semigroup(3);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t y = 0; y < 3; ++y) {
      CHECK(r.product(x, y) == y);
      CHECK(l.product(x, y) == x);
    }
  }
  auto const g = cyclic_group(4);
  CHECK(g.product(3, 2) == 1);
  auto const n = null_band(3);
  CHECK(n.size() == 4);
  CHECK(zero(n) == 0u);
  CHECK(nontrivial_idempotents(n).size() == 3);
}

TEST_CASE("natural order of a commutative band", "[semigroup]") {
  auto const h     = adjoin_identity(two_idempotents());
  auto const order = band_order(h, idempotents(h));
  CHECK(order.elements == std::vector<std::size_t>{0, 1, 2, 3});
  using Edge = std::pair<std::size_t, std::size_t>;
  // i2 <= i1 iff i1 * i2 = i1: the zero is greatest, the identity least.
  CHECK(order.covers == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK(order.leq[3][0]);
  CHECK_FALSE(order.leq[0][3]);
  CHECK_FALSE(order.leq[1][2]);

  auto const dot = to_dot(h, order);
  CHECK(dot.rfind("digraph hasse {", 0) == 0);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);

  CHECK_THROWS_AS(band_order(cyclic_group(2), iota(2)), PreconditionError);
  CHECK_THROWS_AS(band_order(right_zero_semigroup(2), iota(2)), PreconditionError);
  CHECK_THROWS_AS(band_order(h, std::vector<std::size_t>{}), PreconditionError);
}

TEST_CASE("isomorphisms", "[semigroup]") {
  auto const r = right_zero_semigroup(3);
  auto const l = left_zero_semigroup(3);
  CHECK_FALSE(find_isomorphism(r, l));
  auto const self = find_isomorphism(r, r);
  REQUIRE(self);
  CHECK(*self == iota(3));

  // Relabel the cyclic group of order 5 by x -> 2x.
  auto const                     g = cyclic_group(5);
  std::vector<std::size_t> const twice{0, 2, 4, 1, 3};
  std::vector<std::string>       names(5);
  std::vector<AbstractSemigroup::index_type> table(25);
  for (std::size_t x = 0; x < 5; ++x) {
    names[twice[x]] = "z" + std::to_string(x);
    for (std::size_t y = 0; y < 5; ++y) {
      table[twice[x] * 5 + twice[y]] = twice[g.product(x, y)];
    }
  }
  auto const relabelled = AbstractSemigroup::validate(names, table);
  auto const phi        = find_isomorphism(g, relabelled);
  REQUIRE(phi);
  CHECK(is_homomorphism(g, relabelled, *phi));
  CHECK_FALSE(find_isomorphism(g, cyclic_group(4)));
  CHECK_FALSE(find_isomorphism(cyclic_group(4), adjoin_zero(cyclic_group(3))));
}

TEST_CASE("unions with a core", "[semigroup]") {
  auto const core = two_idempotents();
  auto const u    = band_union_with_core(core, {cyclic_group(2)});
  REQUIRE(u.size() == 5);
  CHECK(zero(u) == 0u);
  CHECK(u.product(3, 4) == 4);
  CHECK(u.product(4, 4) == 3);
  CHECK(u.product(1, 4) == 0);
  CHECK_THROWS_AS(band_union_with_core(cyclic_group(2), {}), PreconditionError);

  auto const v = identity_absorbing_union(core, cyclic_group(2));
  REQUIRE(v.size() == 5);
  CHECK(v.product(3, 1) == 1);
  CHECK(v.product(2, 4) == 2);
  CHECK(v.product(4, 4) == 3);
}
