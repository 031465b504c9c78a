// Independent reference implementations used as oracles by the tests.
// Nothing here calls into the library.

#ifndef RELSEMI_TESTS_SUPPORT_NAIVE_HPP_
#define RELSEMI_TESTS_SUPPORT_NAIVE_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace naive {

  using Relation = std::set<std::pair<std::size_t, std::size_t>>;
  using Table    = std::vector<std::vector<std::size_t>>;

  Relation compose(Relation const& r, Relation const& s);

  // All relations reachable as nonempty products of the generators, or
  // nullopt once more than cap have been found.
  std::optional<std::set<Relation>> closure(std::vector<Relation> const& gens,
                                            std::size_t cap = 1'000'000);

  // Generators of the products of a partition given by its blocks, built
  // directly from the definitions. kind: 0 plain, 1 unit, 2 sym, 3 sym unit.
  std::vector<Relation> product_blocks(std::vector<std::vector<std::size_t>> const& blocks,
                                       int                                          kind);

  // Idempotents of a closure and the covers of e <= f iff e = ef = fe.
  struct Hasse {
    std::size_t nodes = 0;
    std::size_t edges = 0;
  };
  Hasse idempotent_hasse(std::set<Relation> const& elements);

  bool is_associative(Table const& t);

  // One representative of every isomorphism class of semigroups of each order
  // 1..max_order, by backtracking over Cayley tables.
  std::vector<Table> semigroups_up_to_iso(std::size_t max_order);

  std::optional<std::size_t> zero_of(Table const& t);

  // Least n <= max_n for which some partition of the n x n cells generates a
  // closure isomorphic to t with the zero of t, if any, sent to the empty
  // relation. Every partition of the cells and every bijection is tried.
  class RepresentationOracle {
   public:
    RepresentationOracle(std::size_t max_n, std::size_t max_order);
    std::optional<std::size_t> least_ground(Table const& t) const;

   private:
    struct Closure {
      std::size_t                ground;
      Table                      table;
      std::optional<std::size_t> empty;  // index of the empty relation
    };
    std::vector<Closure> closures_;  // ascending ground size
  };

  // Restricted-growth strings of length m, lexicographic.
  std::vector<std::vector<std::size_t>> set_partitions(std::size_t m);

}  // namespace naive

#endif  // RELSEMI_TESTS_SUPPORT_NAIVE_HPP_
