#include <vector>

#include "catch_amalgamated.hpp"
#include "relsemi/error.hpp"
#include "relsemi/generation.hpp"
#include "relsemi/represent.hpp"

using namespace relsemi;

namespace {
  AbstractSemigroup closure(std::size_t k, ProductKind kind) {
    return from_partition(Partition::singletons(k), kind).abstract();
  }

  SearchOptions bounded(std::size_t max_ground) {
    SearchOptions o;
    o.max_ground = max_ground;
    return o;
  }
}  // namespace

TEST_CASE("right and left zero constructions", "[represent]") {
  for (std::size_t m = 1; m <= 4; ++m) {
    CAPTURE(m);
    auto const r = represent_right_zero(right_zero_semigroup(m));
    CHECK(r.ground == m);
    CHECK(verify_witness(right_zero_semigroup(m), r));
    auto const l = represent_left_zero(left_zero_semigroup(m));
    CHECK(verify_witness(left_zero_semigroup(m), l));
  }
  CHECK_THROWS_AS(represent_right_zero(left_zero_semigroup(2)), PreconditionError);
  CHECK_THROWS_AS(represent_left_zero(cyclic_group(2)), PreconditionError);
}

TEST_CASE("class members come with witnesses", "[represent]") {
  CHECK(verify_witness(closure(3, ProductKind::plain),
                       represent_class_member(closure(3, ProductKind::plain), SemigroupClass::h1)));
  CHECK(verify_witness(closure(3, ProductKind::unit),
                       represent_class_member(closure(3, ProductKind::unit),
                                              SemigroupClass::h1_unit)));
  CHECK(verify_witness(closure(3, ProductKind::sym),
                       represent_class_member(closure(3, ProductKind::sym), SemigroupClass::hs)));
  CHECK(verify_witness(closure(3, ProductKind::sym_unit),
                       represent_class_member(closure(3, ProductKind::sym_unit),
                                              SemigroupClass::hs_unit)));
  CHECK_THROWS_AS(represent_class_member(cyclic_group(2), SemigroupClass::h1), PreconditionError);
}

TEST_CASE("witness checks catch malformed witnesses", "[represent]") {
  auto const h    = right_zero_semigroup(2);
  auto const good = represent_right_zero(h);
  REQUIRE(verify_witness(h, good));

  auto overlap = good;
  overlap.blocks[0].insert(0, 1);
  CHECK_FALSE(verify_witness(h, overlap));

  auto gap = good;
  gap.blocks[0].erase(0, 0);
  CHECK_FALSE(verify_witness(h, gap));

  auto swapped = good;
  std::swap(swapped.images[0], swapped.images[1]);
  CHECK_FALSE(verify_witness(h, swapped));

  // The group of order 2 with a zero: the identity of the closure of a
  // witness for the group must not stand in for the zero.
  auto const g0 = adjoin_zero(cyclic_group(2));
  auto const w  = search_d_transitive(cyclic_group(2), bounded(2));
  REQUIRE(w.found());
  auto bad   = *w.witness;
  bad.images.push_back(BinaryRelation::full(bad.ground));
  bad.generator_map.push_back(std::nullopt);
  auto const r = verify_witness(g0, bad);
  CHECK_FALSE(r);
  CHECK_FALSE(r.reason.empty());
}

TEST_CASE("admissible block counts", "[represent]") {
  CHECK(admissible_block_counts(cyclic_group(2)) == std::set<std::size_t>{1, 2});
  CHECK(admissible_block_counts(right_zero_semigroup(3)) == std::set<std::size_t>{3});
  // (0,1) and (1,0) already generate the plain closure on two blocks.
  CHECK(admissible_block_counts(closure(2, ProductKind::plain))
        == std::set<std::size_t>{2, 3, 4});
  // Nonzero elements of a group with zero do not generate the zero.
  CHECK(admissible_block_counts(adjoin_zero(cyclic_group(2))).empty());
  CHECK(admissible_block_counts(null_band(3)) == std::set<std::size_t>{3});
  CHECK_THROWS_AS(admissible_block_counts(closure(4, ProductKind::plain)), GuardError);
}

TEST_CASE("search finds canonical witnesses", "[represent]") {
  auto const g = search_d_transitive(cyclic_group(2), bounded(3));
  REQUIRE(g.found());
  CHECK(g.witness->ground == 2);
  CHECK(verify_witness(cyclic_group(2), *g.witness));

  for (std::size_t m = 2; m <= 3; ++m) {
    CAPTURE(m);
    auto const r = search_d_transitive(right_zero_semigroup(m), bounded(m));
    REQUIRE(r.found());
    CHECK(r.witness->ground == m);
    auto const l = search_d_transitive(left_zero_semigroup(m), bounded(m));
    REQUIRE(l.found());
    CHECK(verify_witness(left_zero_semigroup(m), *l.witness));
  }

  auto const trivial = search_d_transitive(cyclic_group(1), bounded(1));
  REQUIRE(trivial.found());
  CHECK(trivial.witness->ground == 1);
}

TEST_CASE("search exhausts known negatives", "[represent]") {
  auto const n = search_d_transitive(null_band(3), bounded(3));
  CHECK_FALSE(n.found());
  CHECK(n.max_ground == 3);

  auto const g0 = search_d_transitive(adjoin_zero(cyclic_group(2)), bounded(3));
  CHECK_FALSE(g0.found());
  CHECK(g0.candidates_examined == 0);
}

TEST_CASE("search results do not depend on the thread count", "[represent]") {
  auto const h = right_zero_semigroup(3);
  auto       o = bounded(3);
  auto const a = search_d_transitive(h, o);
  o.threads    = 3;
  auto const b = search_d_transitive(h, o);
  REQUIRE(a.found());
  REQUIRE(b.found());
  CHECK(a.candidates_examined == b.candidates_examined);
  CHECK(a.witness->blocks == b.witness->blocks);
}

TEST_CASE("search budget and explicit block counts", "[represent]") {
  auto o             = bounded(4);
  o.candidate_budget = 100;
  CHECK_THROWS_AS(search_d_transitive(null_band(3), o), GuardError);

  auto p         = bounded(2);
  p.block_counts = std::set<std::size_t>{3};
  CHECK_FALSE(search_d_transitive(cyclic_group(2), p).found());

  CHECK(partitions_up_to(4, 4) == 15);
  CHECK(partitions_up_to(9, 2) == 256);
  CHECK(partitions_up_to(200, 200) == static_cast<std::size_t>(-1));
}

TEST_CASE("class names", "[represent]") {
  for (auto c : {SemigroupClass::h1, SemigroupClass::h1_unit, SemigroupClass::hs,
                 SemigroupClass::hs_unit}) {
    CHECK(parse_semigroup_class(to_string(c)) == c);
  }
  CHECK(parse_semigroup_class("hs_unit") == SemigroupClass::hs_unit);
  CHECK_FALSE(parse_semigroup_class("H2"));
}
