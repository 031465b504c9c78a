#include <vector>

#include "catch_amalgamated.hpp"
#include "relsemi/error.hpp"
#include "relsemi/partition.hpp"

using namespace relsemi;

namespace {
  Partition part(std::size_t n, std::vector<std::vector<std::size_t>> const& blocks) {
    return Partition::from_blocks(n, blocks);
  }
}  // namespace

TEST_CASE("partition construction normalises block numbers", "[partition]") {
  std::vector<block_index> a{7, 3, 7, 5};
  auto const               p = Partition::from_assignment(a);
  CHECK(p.block_count() == 3);
  CHECK(p.blocks() == std::vector<std::vector<std::size_t>>{{0, 2}, {1}, {3}});
  CHECK(p == part(4, {{3}, {1}, {2, 0}}));
  CHECK(Partition::singletons(3).block_count() == 3);
  CHECK(Partition::one_block(3).block_count() == 1);
}

TEST_CASE("partition construction rejects non-partitions", "[partition]") {
  CHECK_THROWS_AS(part(3, {{0, 1}}), InputError);
  CHECK_THROWS_AS(part(3, {{0, 1}, {1, 2}}), InputError);
  CHECK_THROWS_AS(part(3, {{0, 1, 2}, {}}), InputError);
  CHECK_THROWS_AS(part(3, {{0, 1, 3}}), InputError);
  CHECK_THROWS_AS(Partition::from_assignment({}), InputError);
}

TEST_CASE("partitions and equivalences correspond", "[partition]") {
  auto const p = part(4, {{0, 2}, {1}, {3}});
  auto const r = to_equivalence(p);
  CHECK(r.count() == 6);
  CHECK(is_equivalence(r));
  CHECK(from_equivalence(r) == p);
  CHECK_THROWS_AS(from_equivalence(BinaryRelation::empty(2)), PreconditionError);
}

TEST_CASE("refinement", "[partition]") {
  auto const fine   = part(4, {{0}, {1}, {2, 3}});
  auto const coarse = part(4, {{0, 1}, {2, 3}});
  auto const other  = part(4, {{0, 2}, {1, 3}});
  CHECK(is_refinement(fine, coarse));
  CHECK_FALSE(is_refinement(coarse, fine));
  CHECK_FALSE(is_refinement(fine, other));
  CHECK(is_refinement_by_relations(fine, coarse));
  CHECK(is_refinement_by_unions(fine, coarse));
  CHECK(factor_map(fine, coarse) == std::vector<block_index>{0, 0, 1});
  CHECK_THROWS_AS(factor_map(coarse, fine), PreconditionError);
  CHECK_THROWS_AS(is_refinement(fine, Partition::singletons(3)), InputError);
}

TEST_CASE("product block counts", "[partition]") {
  for (std::size_t k = 1; k <= 5; ++k) {
    auto const p = Partition::singletons(k);
    for (auto kind : all_product_kinds) {
      CAPTURE(k, to_string(kind));
      CHECK(product(p, kind).block_count() == product_block_count(kind, k));
    }
  }
  CHECK(product_block_count(ProductKind::plain, 3) == 9);
  CHECK(product_block_count(ProductKind::unit, 3) == 7);
  CHECK(product_block_count(ProductKind::sym, 3) == 6);
  CHECK(product_block_count(ProductKind::sym_unit, 3) == 4);
}

TEST_CASE("product blocks and labels", "[partition]") {
  auto const p = part(3, {{0, 1}, {2}});
  auto const q = product(p, ProductKind::unit);
  REQUIRE(q.block_count() == 3);
  auto const rp = to_equivalence(p);
  bool       found_rp = false;
  for (block_index b = 0; b < q.block_count(); ++b) {
    if (q.label(b) == "R_P") {
      found_rp = true;
      CHECK(q.block_relation(b) == rp);
    }
  }
  CHECK(found_rp);
  CHECK(q.block_of(0, 2) != q.block_of(2, 0));

  auto const s = product(p, ProductKind::sym);
  CHECK(is_symmetric_partition(s));
  CHECK(s.block_of(0, 2) == s.block_of(2, 0));
  CHECK_FALSE(is_symmetric_partition(product(p, ProductKind::plain)));
}

TEST_CASE("products are coherent with R_P", "[partition]") {
  auto const p  = part(4, {{0, 3}, {1}, {2}});
  auto const rp = to_equivalence(p);
  for (auto kind : all_product_kinds) {
    CAPTURE(to_string(kind));
    CHECK(is_coherent(product(p, kind), rp, kind));
  }
  // The plain product has no constant diagonal once there are two blocks.
  CHECK_FALSE(is_coherent_unit(product(p, ProductKind::plain), rp));
  CHECK_FALSE(is_coherent_sym(product(p, ProductKind::plain), rp));
  CHECK_THROWS_AS(is_coherent(product(p, ProductKind::plain), BinaryRelation::empty(4)),
                  PreconditionError);
}

TEST_CASE("canonical labelling agrees with the product", "[partition]") {
  for (auto const& p : enumerate_partitions(4, 4)) {
    for (auto kind : all_product_kinds) {
      CHECK(canonical_labeling(p, kind).base() == product(p, kind).base());
    }
  }
}

TEST_CASE("restricted-growth enumeration", "[partition]") {
  // Bell numbers and Stirling partial sums.
  CHECK(enumerate_partitions(1, 1).size() == 1);
  CHECK(enumerate_partitions(4, 4).size() == 15);
  CHECK(enumerate_partitions(5, 5).size() == 52);
  CHECK(enumerate_partitions(5, 2).size() == 16);
  CHECK(enumerate_partitions(9, 9).size() == 21147);

  PartitionEnumerator e(4, 4);
  std::vector<block_index> prev(e.rgs().begin(), e.rgs().end());
  CHECK(prev == std::vector<block_index>{0, 0, 0, 0});
  std::size_t count = 1;
  for (e.advance(); !e.done(); e.advance()) {
    std::vector<block_index> cur(e.rgs().begin(), e.rgs().end());
    CHECK(prev < cur);
    prev = cur;
    ++count;
  }
  CHECK(count == 15);
  CHECK(prev == std::vector<block_index>{0, 1, 2, 3});
}

TEST_CASE("product is the least partition of its class", "[partition]") {
  for (auto const& p : enumerate_partitions(2, 2)) {
    for (auto kind : all_product_kinds) {
      auto const r = verify_smallest(p, kind, 2);
      CAPTURE(to_string(kind), r.detail);
      CHECK(r.verified);
      CHECK(r.partitions_examined == 15);
    }
  }
  CHECK_THROWS_AS(verify_smallest(Partition::singletons(3), ProductKind::plain, 2), GuardError);
}

TEST_CASE("product kind names", "[partition]") {
  for (auto kind : all_product_kinds) {
    CHECK(parse_product_kind(to_string(kind)) == kind);
  }
  CHECK(parse_product_kind("symunit") == ProductKind::sym_unit);
  CHECK_FALSE(parse_product_kind("bogus"));
}
