// Finite semigroups given by Cayley tables.
//
// Elements are the indices 0, ..., m - 1; names are only for presentation
// and file I/O. Subsets of elements are passed as index vectors; order and
// duplicates are ignored unless stated otherwise.

#ifndef RELSEMI_SEMIGROUP_HPP_
#define RELSEMI_SEMIGROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relsemi {

  class AbstractSemigroup {
   public:
    using index_type = std::uint32_t;

    // Checks the table and associativity. Throws InputError naming the
    // first failing triple (i, j, k) in lexicographic order, a duplicate
    // name, a wrong row length or an out-of-range entry.
    static AbstractSemigroup validate(std::vector<std::string>               names,
                                      std::vector<std::vector<std::size_t>> const& rows);
    // Same, from a row-major table of m * m entries.
    static AbstractSemigroup validate(std::vector<std::string>      names,
                                      std::span<index_type const>   table);

    std::size_t size() const noexcept {
      return names_.size();
    }
    std::string const& name(std::size_t i) const {
      return names_.at(i);
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::optional<std::size_t> index_of(std::string_view name) const;

    std::size_t product(std::size_t i, std::size_t j) const noexcept {
      return table_[i * names_.size() + j];
    }
    std::span<index_type const> table() const noexcept {
      return table_;
    }

    friend bool operator==(AbstractSemigroup const&,
                           AbstractSemigroup const&) = default;

   private:
    AbstractSemigroup(std::vector<std::string> names,
                      std::vector<index_type>  table)
        : names_(std::move(names)), table_(std::move(table)) {}

    std::vector<std::string> names_;
    std::vector<index_type>  table_;
  };

  // A two-sided identity, if any.
  std::optional<std::size_t> identity(AbstractSemigroup const& h);
  // A two-sided zero, if any. A one-element semigroup has an identity and
  // never a zero.
  std::optional<std::size_t> zero(AbstractSemigroup const& h);
  bool                       is_idempotent(AbstractSemigroup const& h, std::size_t x);
  std::vector<std::size_t>   idempotents(AbstractSemigroup const& h);
  // Idempotents other than the identity and the zero.
  std::vector<std::size_t> nontrivial_idempotents(AbstractSemigroup const& h);

  // h itself when it has an identity, otherwise h with a fresh element "1"
  // (primed until unique) appended as the identity.
  AbstractSemigroup adjoin_identity(AbstractSemigroup const& h);

  // Both throw PreconditionError on an empty subset.
  bool is_ideal(AbstractSemigroup const& h, std::span<std::size_t const> subset);
  bool is_subsemigroup(AbstractSemigroup const&     h,
                       std::span<std::size_t const> subset);

  // The subsemigroup on the given elements, renumbered in ascending order
  // of their indices in h. Throws PreconditionError unless the subset is
  // nonempty and closed.
  AbstractSemigroup restrict_to(AbstractSemigroup const&     h,
                                std::span<std::size_t const> subset);

  // The least subsemigroup containing the given elements, sorted.
  std::vector<std::size_t> generated_by(AbstractSemigroup const&     h,
                                        std::span<std::size_t const> gens);

  // Natural order on a commutative band E: i2 <= i1 iff i1 * i2 = i1.
  struct BandOrder {
    std::vector<std::size_t> elements;  // ascending indices of h
    // leq[a][b] means elements[a] <= elements[b].
    std::vector<std::vector<bool>> leq;
    // Cover edges (greater, smaller) as indices of h, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> covers;
  };

  // Throws PreconditionError when E is empty or not a commutative band.
  BandOrder band_order(AbstractSemigroup const&     h,
                       std::span<std::size_t const> e);

  // Graphviz digraph of the cover edges, greater -> smaller.
  std::string to_dot(AbstractSemigroup const& h, BandOrder const& order);

  // True when map (indexed by elements of a) is a homomorphism a -> b.
  bool is_homomorphism(AbstractSemigroup const&     a,
                       AbstractSemigroup const&     b,
                       std::span<std::size_t const> map);

  // A bijection phi with phi(x * y) = phi(x) * phi(y), or nullopt. The
  // result is the first witness found when elements of h1 are assigned in
  // index order and candidates are tried in index order of h2.
  std::optional<std::vector<std::size_t>>
  find_isomorphism(AbstractSemigroup const& h1, AbstractSemigroup const& h2);

  // Disjoint union of a core with a zero and the given semigroups; products
  // within one part are kept, all others are the zero of the core. The core
  // comes first in the result, then each group in turn. Throws
  // PreconditionError if the core has no zero.
  AbstractSemigroup band_union_with_core(AbstractSemigroup const&              core,
                                         std::vector<AbstractSemigroup> const& groups);

  // Union of c and s where every element of s acts as a two-sided identity
  // on c. Elements of c come first.
  AbstractSemigroup identity_absorbing_union(AbstractSemigroup const& c,
                                             AbstractSemigroup const& s);

  // Small named semigroups.
  AbstractSemigroup cyclic_group(std::size_t m);
  AbstractSemigroup right_zero_semigroup(std::size_t m);
  AbstractSemigroup left_zero_semigroup(std::size_t m);
  // m idempotents e1..em with pairwise products equal to an extra zero.
  AbstractSemigroup null_band(std::size_t m);
  // h with a fresh zero "0" (primed until unique) appended.
  AbstractSemigroup adjoin_zero(AbstractSemigroup const& h);

}  // namespace relsemi

#endif  // RELSEMI_SEMIGROUP_HPP_
