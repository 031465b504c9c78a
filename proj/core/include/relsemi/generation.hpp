// Subsemigroups of (B_X, o) spanned by finite sets of relations.

#ifndef RELSEMI_GENERATION_HPP_
#define RELSEMI_GENERATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "relsemi/partition.hpp"
#include "relsemi/relation.hpp"
#include "relsemi/semigroup.hpp"

namespace relsemi {

  inline constexpr std::size_t default_element_cap = 100'000;

  // The closure of a set of generators under composition.
  //
  // Element order: distinct generators in the order given, then one block
  // per breadth-first level (words one letter longer), each block sorted by
  // the bit representation of the relations.
  class GeneratedSemigroup {
   public:
    std::size_t ground_size() const noexcept {
      return elements_.front().ground_size();
    }
    std::size_t size() const noexcept {
      return elements_.size();
    }
    std::vector<BinaryRelation> const& elements() const noexcept {
      return elements_;
    }
    BinaryRelation const& element(std::size_t i) const {
      return elements_.at(i);
    }
    std::size_t product(std::size_t i, std::size_t j) const noexcept {
      return table_[i * elements_.size() + j];
    }
    // Position of each generator, in the order the generators were given.
    std::vector<std::size_t> const& generator_indices() const noexcept {
      return generator_indices_;
    }
    // Label of each generator as given (may be empty).
    std::vector<std::string> const& generator_labels() const noexcept {
      return generator_labels_;
    }
    std::optional<std::size_t> index_of(BinaryRelation const& r) const;

    // Cayley table. Names: "0" for the empty relation, the generator label
    // where one was given, "w<i>" otherwise; collisions get primes.
    AbstractSemigroup abstract() const;

   private:
    friend GeneratedSemigroup generate(std::vector<BinaryRelation> const&,
                                       std::vector<std::string>,
                                       std::size_t);

    std::vector<BinaryRelation>                elements_;
    std::vector<AbstractSemigroup::index_type> table_;
    std::vector<std::size_t>                   generator_indices_;
    std::vector<std::string>                   generator_labels_;
    std::unordered_map<BinaryRelation, std::size_t> index_;
  };

  // Throws InputError on an empty list or mixed ground sets and GuardError
  // once more than element_cap elements have been found.
  GeneratedSemigroup generate(std::vector<BinaryRelation> const& gens,
                              std::vector<std::string>           labels = {},
                              std::size_t element_cap = default_element_cap);

  // Closure of the blocks of product(p, kind), keeping the block labels.
  GeneratedSemigroup from_partition(Partition const& p,
                                    ProductKind      kind,
                                    std::size_t      element_cap = default_element_cap);

  // Closure of the blocks of a partition of X^2, keeping its labels.
  GeneratedSemigroup from_blocks(LabeledPartition const& q,
                                 std::size_t element_cap = default_element_cap);

  // The closure elements in no particular order, or nullopt as soon as
  // there are more than cap of them. Meant for hot loops that only need
  // the size or membership.
  std::optional<std::vector<BinaryRelation>>
  closure_elements(std::span<BinaryRelation const> gens, std::size_t cap);

}  // namespace relsemi

#endif  // RELSEMI_GENERATION_HPP_
