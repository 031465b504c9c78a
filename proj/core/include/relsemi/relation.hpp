// Finite binary relations over the ground set {0, ..., n - 1}.
//
// A relation is stored as n rows of ceil(n / 64) machine words; bit y of
// row x is set iff (x, y) belongs to the relation. For n <= 64 every row is
// a single word, which is the case all composition hot paths are tuned for.

#ifndef RELSEMI_RELATION_HPP_
#define RELSEMI_RELATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace relsemi {

  // The index set {0, ..., size - 1} with optional presentation labels.
  class GroundSet {
   public:
    explicit GroundSet(std::size_t size);
    GroundSet(std::size_t size, std::vector<std::string> labels);

    std::size_t size() const noexcept {
      return size_;
    }
    bool has_labels() const noexcept {
      return !labels_.empty();
    }
    // Label of x, or its decimal index when no labels are attached.
    std::string label(std::size_t x) const;

    // Ground sets are compared by size only; labels are presentation.
    friend bool operator==(GroundSet const& a, GroundSet const& b) noexcept {
      return a.size_ == b.size_;
    }

   private:
    std::size_t              size_;
    std::vector<std::string> labels_;
  };

  using Pair = std::pair<std::size_t, std::size_t>;

  class BinaryRelation {
   public:
    using word_type = std::uint64_t;

    // The empty relation on {0, ..., n - 1}; n must be at least 1.
    explicit BinaryRelation(std::size_t n);

    static BinaryRelation empty(std::size_t n);
    static BinaryRelation diagonal(std::size_t n);
    static BinaryRelation full(std::size_t n);
    // A x B for index sets A, B.
    static BinaryRelation product(std::size_t                  n,
                                  std::span<std::size_t const> a,
                                  std::span<std::size_t const> b);
    static BinaryRelation from_pairs(std::size_t n, std::span<Pair const> pairs);

    std::size_t ground_size() const noexcept {
      return n_;
    }
    std::size_t words_per_row() const noexcept {
      return words_;
    }

    bool contains(std::size_t x, std::size_t y) const;
    void insert(std::size_t x, std::size_t y);
    void erase(std::size_t x, std::size_t y);

    std::size_t count() const noexcept;
    bool        is_empty() const noexcept;
    // Pairs in row-major order.
    std::vector<Pair> pairs() const;

    std::span<word_type const> row(std::size_t x) const noexcept {
      return {bits_.data() + x * words_, words_};
    }
    std::span<word_type const> words() const noexcept {
      return bits_;
    }

    bool is_subset_of(BinaryRelation const& other) const;
    bool intersects(BinaryRelation const& other) const;

    BinaryRelation& operator|=(BinaryRelation const& other);
    BinaryRelation& operator&=(BinaryRelation const& other);
    friend BinaryRelation operator|(BinaryRelation a, BinaryRelation const& b) {
      return a |= b;
    }
    friend BinaryRelation operator&(BinaryRelation a, BinaryRelation const& b) {
      return a &= b;
    }
    // X^2 minus this relation.
    BinaryRelation complement() const;

    std::size_t hash() const noexcept;

    friend bool operator==(BinaryRelation const&,
                           BinaryRelation const&) = default;
    // Ground size first, then the row words lexicographically.
    friend std::strong_ordering operator<=>(BinaryRelation const& a,
                                            BinaryRelation const& b) noexcept;

    std::string to_string() const;

   private:
    word_type* mutable_row(std::size_t x) noexcept {
      return bits_.data() + x * words_;
    }
    void check_index(std::size_t x, std::size_t y) const;

    std::size_t            n_;
    std::size_t            words_;
    std::vector<word_type> bits_;

    friend BinaryRelation compose(BinaryRelation const&, BinaryRelation const&);
    friend BinaryRelation converse(BinaryRelation const&);
  };

  // (x, y) is in the result iff (x, z) in r and (z, y) in s for some z.
  // Throws InputError when the ground sets differ.
  BinaryRelation compose(BinaryRelation const& r, BinaryRelation const& s);

  BinaryRelation converse(BinaryRelation const& r);

  bool is_reflexive(BinaryRelation const& r);
  bool is_symmetric(BinaryRelation const& r);
  bool is_transitive(BinaryRelation const& r);
  bool is_equivalence(BinaryRelation const& r);

  // Name of the first equivalence law r violates ("reflexive", "symmetric"
  // or "transitive"), or nullopt when r is an equivalence.
  std::optional<std::string> violated_equivalence_law(BinaryRelation const& r);

  std::vector<std::size_t> domain(BinaryRelation const& r);
  std::vector<std::size_t> range(BinaryRelation const& r);

}  // namespace relsemi

template <>
struct std::hash<relsemi::BinaryRelation> {
  std::size_t operator()(relsemi::BinaryRelation const& r) const noexcept {
    return r.hash();
  }
};

#endif  // RELSEMI_RELATION_HPP_
