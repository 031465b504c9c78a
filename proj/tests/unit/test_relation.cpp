#include <vector>

#include "catch_amalgamated.hpp"
#include "relsemi/error.hpp"
#include "relsemi/relation.hpp"

using namespace relsemi;

namespace {
  BinaryRelation rel(std::size_t n, std::vector<Pair> const& pairs) {
    return BinaryRelation::from_pairs(n, pairs);
  }
}  // namespace

TEST_CASE("constructors", "[relation]") {
  CHECK(BinaryRelation::empty(3).count() == 0);
  CHECK(BinaryRelation::diagonal(3).count() == 3);
  CHECK(BinaryRelation::full(3).count() == 9);
  std::vector<std::size_t> a{0, 1}, b{2};
  auto const               r = BinaryRelation::product(3, a, b);
  CHECK(r == rel(3, {{0, 2}, {1, 2}}));
  CHECK_THROWS_AS(BinaryRelation(0), InputError);
  CHECK_THROWS_AS(rel(2, {{0, 2}}), InputError);
}

TEST_CASE("insert, erase and queries", "[relation]") {
  BinaryRelation r(4);
  CHECK(r.is_empty());
  r.insert(1, 3);
  r.insert(1, 3);
  r.insert(2, 0);
  CHECK(r.count() == 2);
  CHECK(r.contains(1, 3));
  CHECK_FALSE(r.contains(3, 1));
  r.erase(1, 3);
  CHECK(r.pairs() == std::vector<Pair>{{2, 0}});
  CHECK_THROWS(r.insert(4, 0));
}

TEST_CASE("composition follows the definition", "[relation]") {
  auto const r = rel(3, {{0, 1}, {1, 2}});
  auto const s = rel(3, {{1, 0}, {2, 2}});
  CHECK(compose(r, s) == rel(3, {{0, 0}, {1, 2}}));
  CHECK(compose(s, r) == rel(3, {{1, 1}}));
  CHECK(compose(r, BinaryRelation::diagonal(3)) == r);
  CHECK(compose(BinaryRelation::empty(3), r).is_empty());
  CHECK_THROWS_AS(compose(r, BinaryRelation(2)), InputError);
}

TEST_CASE("composition across several words per row", "[relation]") {
  std::size_t const n = 130;
  BinaryRelation    r(n), s(n);
  r.insert(0, 70);
  r.insert(129, 64);
  s.insert(70, 129);
  s.insert(64, 3);
  CHECK(r.words_per_row() == 3);
  CHECK(compose(r, s) == rel(n, {{0, 129}, {129, 3}}));
}

TEST_CASE("converse, domain and range", "[relation]") {
  auto const r = rel(4, {{0, 1}, {0, 3}, {2, 1}});
  CHECK(converse(r) == rel(4, {{1, 0}, {3, 0}, {1, 2}}));
  CHECK(converse(converse(r)) == r);
  CHECK(domain(r) == std::vector<std::size_t>{0, 2});
  CHECK(range(r) == std::vector<std::size_t>{1, 3});
}

TEST_CASE("set operations and order", "[relation]") {
  auto const a = rel(3, {{0, 0}, {1, 2}});
  auto const b = rel(3, {{1, 2}, {2, 2}});
  CHECK((a | b).count() == 3);
  CHECK((a & b) == rel(3, {{1, 2}}));
  CHECK(a.intersects(b));
  CHECK((a & b).is_subset_of(a));
  CHECK_FALSE(a.is_subset_of(b));
  CHECK(a.complement().count() == 7);
  CHECK((a <=> a) == std::strong_ordering::equal);
  CHECK((a < b) != (b < a));
  CHECK(a.hash() == rel(3, {{1, 2}, {0, 0}}).hash());
}

TEST_CASE("equivalence laws", "[relation]") {
  auto const eq = rel(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}});
  CHECK(is_equivalence(eq));
  CHECK_FALSE(violated_equivalence_law(eq));

  auto not_refl = eq;
  not_refl.erase(2, 2);
  CHECK_FALSE(is_reflexive(not_refl));
  REQUIRE(violated_equivalence_law(not_refl));

  auto not_sym = eq;
  not_sym.erase(1, 0);
  CHECK_FALSE(is_symmetric(not_sym));

  auto const not_trans = rel(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 0}, {1, 2}, {2, 1}});
  CHECK_FALSE(is_transitive(not_trans));
  CHECK(is_symmetric(not_trans));
}

TEST_CASE("text form", "[relation]") {
  CHECK(rel(2, {{0, 1}}).to_string() == "{(0,1)}");
  CHECK(BinaryRelation::empty(2).to_string() == "{}");
}
