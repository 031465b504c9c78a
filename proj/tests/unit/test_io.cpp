#include <sstream>
#include <string>

#include "catch_amalgamated.hpp"
#include "relsemi/error.hpp"
#include "relsemi/fixtures.hpp"
#include "relsemi/generation.hpp"
#include "relsemi/io.hpp"

using namespace relsemi;

namespace {
  template <typename F>
  auto parse(std::string const& text, F read) {
    std::istringstream in(text);
    return read(in);
  }

  BinaryRelation rel(std::string const& text) {
    return parse(text, [](std::istream& in) { return read_relation(in); });
  }

  Partition part(std::string const& text) {
    return parse(text, [](std::istream& in) { return read_partition(in); });
  }

  AbstractSemigroup cay(std::string const& text) {
    return parse(text, [](std::istream& in) { return read_cayley(in); });
  }

  std::string const data_dir = RELSEMI_DATA_DIR;
}  // namespace

TEST_CASE("relation format", "[io]") {
  auto const r = rel("# a comment\nn: 3\n0 1   # trailing\n\n2 2\n");
  CHECK(r.pairs() == std::vector<Pair>{{0, 1}, {2, 2}});
  CHECK(to_text(r) == "n: 3\n0 1\n2 2\n");
  CHECK(rel(to_text(r)) == r);
  CHECK(rel("n: 2\n").is_empty());

  CHECK_THROWS_WITH(rel("n: 2\n0 2\n"), Catch::Matchers::ContainsSubstring("line 2"));
  CHECK_THROWS_AS(rel("n: 0\n"), InputError);
  CHECK_THROWS_AS(rel("size: 2\n"), InputError);
  CHECK_THROWS_AS(rel("n: 2\n0\n"), InputError);
  CHECK_THROWS_AS(rel("n: 2\n0 x\n"), InputError);
  CHECK_THROWS_AS(rel(""), InputError);
}

TEST_CASE("partition format", "[io]") {
  auto const p = part("n: 4\nblock: 0 3\nblock: 1\nblock: 2\n");
  CHECK(p == Partition::from_blocks(4, {{0, 3}, {1}, {2}}));
  CHECK(to_text(p) == "n: 4\nblock: 0 3\nblock: 1\nblock: 2\n");
  CHECK(part(to_text(p)) == p);
  CHECK_THROWS_WITH(part("n: 3\nblock: 0 1\n"),
                    Catch::Matchers::ContainsSubstring("not a partition"));
  CHECK_THROWS_AS(part("n: 3\nblock:\n"), InputError);
  CHECK_THROWS_AS(part("n: 3\nblocks: 0 1 2\n"), InputError);
}

TEST_CASE("Cayley table format", "[io]") {
  auto const text = "elements: e a\ntable:\ne a\na e\n";
  auto const h    = cay(text);
  CHECK(h.size() == 2);
  CHECK(h.product(1, 1) == 0);
  CHECK(to_text(h) == text);
  CHECK(cay(to_text(h)) == h);

  CHECK_THROWS_WITH(cay("elements: x y\ntable:\ny x\ny y\n"),
                    Catch::Matchers::ContainsSubstring("(0, 0, 0)"));
  CHECK_THROWS_AS(cay("elements: e a\ntable:\ne a\n"), InputError);
  CHECK_THROWS_AS(cay("elements: e a\ntable:\ne b\na e\n"), InputError);
  CHECK_THROWS_AS(cay("elements: e a\ntable: e\ne a\na e\n"), InputError);
  CHECK_THROWS_AS(cay("elements:\ntable:\n"), InputError);
}

TEST_CASE("wide names are padded and re-read", "[io]") {
  auto const h    = from_partition(Partition::singletons(2), ProductKind::unit).abstract();
  auto const text = to_text(h);
  CHECK(text.find("R_P   ") != std::string::npos);
  CHECK(cay(text) == h);
}

TEST_CASE("fixture file matches the embedded table", "[io]") {
  auto const file = load_cayley(data_dir + "/identity_absorbing.cay");
  CHECK(file == fixtures::identity_absorbing_example());
  CHECK(file.size() == 7);
}

TEST_CASE("data files load", "[io]") {
  CHECK(load_partition(data_dir + "/tri.part") == Partition::singletons(3));
  CHECK(load_partition(data_dir + "/pair.part") == Partition::singletons(2));
  CHECK_THROWS_WITH(load_partition(data_dir + "/missing.part"),
                    Catch::Matchers::ContainsSubstring("missing.part"));
}

TEST_CASE("witness text", "[io]") {
  auto const h = right_zero_semigroup(2);
  DTransitiveWitness w;
  w.ground = 2;
  w.blocks = {BinaryRelation::from_pairs(2, std::vector<Pair>{{0, 0}, {1, 0}}),
              BinaryRelation::from_pairs(2, std::vector<Pair>{{0, 1}, {1, 1}})};
  w.block_labels  = {"B0", "B1"};
  w.images        = w.blocks;
  w.generator_map = {0, 1};
  std::ostringstream out;
  write_witness(out, h, w);
  CHECK(out.str()
        == "ground: 2\nblock B0: (0,0) (1,0)\nblock B1: (0,1) (1,1)\n"
           "r0 -> block B0\nr1 -> block B1\n");
}
