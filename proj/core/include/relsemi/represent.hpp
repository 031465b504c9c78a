// d-transitive representations: injective homomorphisms h -> B_X under
// which some generating set of h is sent onto a partition of X^2, with the
// zero of h (if any) sent to the empty relation.

#ifndef RELSEMI_REPRESENT_HPP_
#define RELSEMI_REPRESENT_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "relsemi/partition.hpp"
#include "relsemi/relation.hpp"
#include "relsemi/semigroup.hpp"

namespace relsemi {

  struct DTransitiveWitness {
    std::size_t ground = 0;
    // Generator images. Kept as plain relations so that a malformed
    // witness (overlapping or non-covering blocks) can still be checked.
    std::vector<BinaryRelation> blocks;
    std::vector<std::string>    block_labels;
    // images[x] is the relation representing element x of h.
    std::vector<BinaryRelation> images;
    // generator_map[x] = index of the block equal to images[x], if x is one
    // of the generators.
    std::vector<std::optional<std::size_t>> generator_map;

    // Throws InputError when the blocks do not partition X^2.
    LabeledPartition partition() const;
  };

  // Pass/fail with the first failing check described.
  struct WitnessCheck {
    bool        ok = false;
    std::string reason;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  // Rechecks from scratch: blocks partition X^2, images are distinct and
  // multiply like h, the block preimages generate h, the zero goes to the
  // empty relation.
  WitnessCheck verify_witness(AbstractSemigroup const& h, DTransitiveWitness const& w);

  // X = h, x |-> X x {x} (right zero) or {x} x X (left zero). Throw
  // PreconditionError when h is not of that kind.
  DTransitiveWitness represent_right_zero(AbstractSemigroup const& h);
  DTransitiveWitness represent_left_zero(AbstractSemigroup const& h);

  enum class SemigroupClass { h1, h1_unit, hs, hs_unit };

  std::string_view              to_string(SemigroupClass c) noexcept;
  std::optional<SemigroupClass> parse_semigroup_class(std::string_view text);

  // The canonical model of a class member, read as a representation. Throws
  // PreconditionError when h is not in the class.
  DTransitiveWitness represent_class_member(AbstractSemigroup const& h, SemigroupClass c);

  // Sizes of generating sets of h avoiding the zero, i.e. every size from
  // the least such set up to the number of nonzero elements; empty when the
  // nonzero elements do not generate h. Throws GuardError when |h| > 16.
  std::set<std::size_t> admissible_block_counts(AbstractSemigroup const& h);

  struct SearchOptions {
    std::size_t max_ground = 4;
    // Overrides admissible_block_counts when set.
    std::optional<std::set<std::size_t>> block_counts;
    // Upper bound on partitions of X^2 enumerated over all n.
    std::size_t candidate_budget = 200'000'000;
    std::size_t threads          = 1;
  };

  struct SearchReport {
    std::optional<DTransitiveWitness> witness;
    // Partitions of X^2 whose block count is admissible, up to and
    // including the witness.
    std::size_t           candidates_examined = 0;
    std::size_t           max_ground          = 0;
    std::set<std::size_t> block_counts;

    bool found() const noexcept {
      return witness.has_value();
    }
  };

  // For n = 1..max_ground, tries every partition of X^2 (restricted-growth
  // order) with an admissible number of blocks; a candidate succeeds when
  // its closure is isomorphic to h and contains the empty relation if h
  // has a zero. The first success at the least n is reported. Throws
  // GuardError when the enumeration would exceed the budget.
  SearchReport search_d_transitive(AbstractSemigroup const& h,
                                   SearchOptions const&     options = {});

  // Number of partitions of an m-set into at most k blocks, saturating.
  std::size_t partitions_up_to(std::size_t m, std::size_t k);

}  // namespace relsemi

#endif  // RELSEMI_REPRESENT_HPP_
