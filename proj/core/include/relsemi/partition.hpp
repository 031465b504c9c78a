// Partitions of finite sets, the refinement order, the correspondence with
// equivalence relations, the four product partitions of X^2 built from a
// partition of X, and coherent labelings of X^2.
//
// Pairs of X^2 are encoded as cells: (x, y) |-> x * n + y, where n = |X|.
// Every partition of X^2 in this library uses that encoding.

#ifndef RELSEMI_PARTITION_HPP_
#define RELSEMI_PARTITION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relsemi/relation.hpp"

namespace relsemi {

  using block_index = std::uint32_t;

  // A partition of {0, ..., n - 1} in canonical form: block indices are
  // numbered in order of the least element they contain, so two equal
  // partitions have identical assignment vectors.
  class Partition {
   public:
    // Any labelling of blocks by integers is accepted and renumbered.
    static Partition from_assignment(std::span<block_index const> assignment);
    // Throws InputError unless the blocks are nonempty, disjoint and cover
    // {0, ..., n - 1}.
    static Partition from_blocks(std::size_t                                  n,
                                 std::vector<std::vector<std::size_t>> const& blocks);
    static Partition singletons(std::size_t n);
    static Partition one_block(std::size_t n);

    std::size_t ground_size() const noexcept {
      return assignment_.size();
    }
    std::size_t block_count() const noexcept {
      return block_count_;
    }
    block_index block_of(std::size_t x) const {
      return assignment_.at(x);
    }
    std::span<block_index const> assignment() const noexcept {
      return assignment_;
    }
    // Blocks in canonical order, elements ascending.
    std::vector<std::vector<std::size_t>> blocks() const;
    std::vector<std::size_t>              block(block_index b) const;

    friend bool operator==(Partition const&, Partition const&) = default;
    friend auto operator<=>(Partition const&, Partition const&) = default;

   private:
    Partition() = default;

    std::vector<block_index> assignment_;
    std::size_t              block_count_ = 0;
  };

  enum class ProductKind {
    plain,     // all X_i x X_j
    unit,      // R_P together with X_i x X_j for i != j
    sym,       // (X_i x X_j) u (X_j x X_i) for all i, j
    sym_unit,  // R_P together with the symmetrised blocks for i != j
  };

  inline constexpr ProductKind all_product_kinds[] = {ProductKind::plain,
                                                      ProductKind::unit,
                                                      ProductKind::sym,
                                                      ProductKind::sym_unit};

  std::string_view to_string(ProductKind kind) noexcept;
  // Accepts "plain", "unit", "sym", "symunit" and "sym_unit".
  std::optional<ProductKind> parse_product_kind(std::string_view text);

  // Number of blocks of the kind's product of a partition with k blocks.
  std::size_t product_block_count(ProductKind kind, std::size_t k) noexcept;

  // A partition of X^2 (cells x * n + y) with optional per-block names.
  // Stands for a surjection with domain X^2 up to renaming its codomain.
  class LabeledPartition {
   public:
    LabeledPartition(std::size_t              x_size,
                     Partition                base,
                     std::vector<std::string> labels = {});

    // Builds from relations that must partition X^2.
    static LabeledPartition from_relations(std::size_t                        x_size,
                                           std::vector<BinaryRelation> const& blocks,
                                           std::vector<std::string> labels = {});

    std::size_t x_size() const noexcept {
      return x_size_;
    }
    Partition const& base() const noexcept {
      return base_;
    }
    std::size_t block_count() const noexcept {
      return base_.block_count();
    }
    std::size_t cell(std::size_t x, std::size_t y) const noexcept {
      return x * x_size_ + y;
    }
    block_index block_of(std::size_t x, std::size_t y) const {
      return base_.block_of(cell(x, y));
    }
    bool has_labels() const noexcept {
      return !labels_.empty();
    }
    std::string                     label(block_index b) const;
    std::vector<std::string> const& labels() const noexcept {
      return labels_;
    }

    BinaryRelation              block_relation(block_index b) const;
    std::vector<BinaryRelation> block_relations() const;

   private:
    std::size_t              x_size_;
    Partition                base_;
    std::vector<std::string> labels_;
  };

  // R_P: the union of the squares of the blocks.
  BinaryRelation to_equivalence(Partition const& p);
  // The partition into equivalence classes. Throws PreconditionError naming
  // the first violated law when r is not an equivalence.
  Partition from_equivalence(BinaryRelation const& r);

  // p1 <= p2 (p1 is finer). The default form checks class inclusion
  // [x]_1 subset of [x]_2 for every x; the other two are the relation
  // inclusion R_{p1} subset of R_{p2} and "every block of p2 is a union of
  // blocks of p1". All three throw InputError on ground mismatch.
  bool is_refinement(Partition const& p1, Partition const& p2);
  bool is_refinement_by_relations(Partition const& p1, Partition const& p2);
  bool is_refinement_by_unions(Partition const& p1, Partition const& p2);

  // The surjection from p1-blocks onto p2-blocks induced by p1 <= p2.
  // Throws PreconditionError when p1 does not refine p2.
  std::vector<block_index> factor_map(Partition const& p1, Partition const& p2);

  // Product partition of X^2 built directly from the block definitions.
  // Labels: "(i,j)" for X_i x X_j, "{i,j}" (i <= j) for symmetrised blocks,
  // "R_P" for the union of block squares.
  LabeledPartition product(Partition const& p, ProductKind kind);

  bool is_symmetric_partition(LabeledPartition const& q);

  // q seen as a mapping on X^2 is r-coherent: labels of (x1, x2) and
  // (x3, x4) agree whenever (x1, x3) and (x2, x4) are in r. The variants add
  // a constant diagonal (unit), symmetry (sym) or both (sym_unit). All throw
  // PreconditionError when r is not an equivalence on the same X.
  bool is_coherent(LabeledPartition const& q, BinaryRelation const& r);
  bool is_coherent_unit(LabeledPartition const& q, BinaryRelation const& r);
  bool is_coherent_sym(LabeledPartition const& q, BinaryRelation const& r);
  bool is_coherent_sym_unit(LabeledPartition const& q, BinaryRelation const& r);
  // Dispatches to the coherence class matching the product kind.
  bool is_coherent(LabeledPartition const& q,
                   BinaryRelation const&   r,
                   ProductKind             kind);

  // The explicit labelling X^2 -> J^2 -> ... obtained by composing the block
  // map (x, y) |-> <i, j> with the collapsing maps for the kind. Its
  // underlying partition coincides with product(p, kind).
  LabeledPartition canonical_labeling(Partition const& p, ProductKind kind);

  // Restricted-growth strings of length m with at most max_blocks distinct
  // values, in lexicographic order.
  class PartitionEnumerator {
   public:
    PartitionEnumerator(std::size_t m, std::size_t max_blocks);

    bool done() const noexcept {
      return done_;
    }
    std::span<block_index const> rgs() const noexcept {
      return rgs_;
    }
    std::size_t block_count() const noexcept {
      return prefix_max_.empty() ? 0 : blocks_;
    }
    Partition current() const {
      return Partition::from_assignment(rgs_);
    }
    void advance();

   private:
    std::size_t              max_blocks_;
    std::vector<block_index> rgs_;
    // prefix_max_[i] = max(rgs_[0..i]).
    std::vector<block_index> prefix_max_;
    std::size_t              blocks_ = 0;
    bool                     done_   = false;
  };

  // All partitions of an m-set with at most max_blocks blocks, in
  // restricted-growth order.
  std::vector<Partition> enumerate_partitions(std::size_t m,
                                              std::size_t max_blocks);

  struct SmallestReport {
    ProductKind              kind;
    bool                     verified = false;
    std::size_t              partitions_examined = 0;
    std::size_t              class_members       = 0;
    // Symmetric partitions above the base product (sym kinds only).
    std::size_t              symmetric_checked   = 0;
    std::optional<Partition> counterexample;
    std::string              detail;
  };

  // Exhaustively checks, over every partition of X^2, that product(p, kind)
  // lies in the kind's coherence class and refines every member of it. For
  // the symmetric kinds it also checks that the product refines every
  // symmetric partition lying above product(p, plain), resp.
  // product(p, unit). Throws GuardError when |X| > max_ground.
  SmallestReport verify_smallest(Partition const& p,
                                 ProductKind      kind,
                                 std::size_t      max_ground = 3);

}  // namespace relsemi

#endif  // RELSEMI_PARTITION_HPP_
