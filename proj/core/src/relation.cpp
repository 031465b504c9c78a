#include "relsemi/relation.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "relsemi/error.hpp"

namespace relsemi {

  namespace {
    constexpr std::size_t kWordBits = 64;

    std::size_t words_for(std::size_t n) {
      return (n + kWordBits - 1) / kWordBits;
    }

    // Calls f(z) for every set bit z of the row.
    template <typename F>
    void for_each_bit(std::span<BinaryRelation::word_type const> row, F&& f) {
      for (std::size_t w = 0; w < row.size(); ++w) {
        auto word = row[w];
        while (word != 0) {
          auto const z = static_cast<std::size_t>(std::countr_zero(word));
          f(w * kWordBits + z);
          word &= word - 1;
        }
      }
    }

    void require_same_ground(BinaryRelation const& r, BinaryRelation const& s) {
      if (r.ground_size() != s.ground_size()) {
        throw InputError("ground-set mismatch: relation on "
                         + std::to_string(r.ground_size())
                         + " points vs relation on "
                         + std::to_string(s.ground_size()) + " points");
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GroundSet
  ////////////////////////////////////////////////////////////////////////

  GroundSet::GroundSet(std::size_t size) : size_(size), labels_() {
    if (size == 0) {
      throw InputError("a ground set must have at least one element");
    }
  }

  GroundSet::GroundSet(std::size_t size, std::vector<std::string> labels)
      : GroundSet(size) {
    if (labels.size() != size) {
      throw InputError("expected " + std::to_string(size) + " labels, got "
                       + std::to_string(labels.size()));
    }
    std::unordered_set<std::string> seen;
    for (auto const& l : labels) {
      if (!seen.insert(l).second) {
        throw InputError("duplicate ground-set label \"" + l + "\"");
      }
    }
    labels_ = std::move(labels);
  }

  std::string GroundSet::label(std::size_t x) const {
    if (x >= size_) {
      throw InputError("ground index " + std::to_string(x) + " out of range");
    }
    return labels_.empty() ? std::to_string(x) : labels_[x];
  }

  ////////////////////////////////////////////////////////////////////////
  // BinaryRelation
  ////////////////////////////////////////////////////////////////////////

  BinaryRelation::BinaryRelation(std::size_t n)
      : n_(n), words_(words_for(n)), bits_(n * words_for(n), 0) {
    if (n == 0) {
      throw InputError("a ground set must have at least one element");
    }
  }

  BinaryRelation BinaryRelation::empty(std::size_t n) {
    return BinaryRelation(n);
  }

  BinaryRelation BinaryRelation::diagonal(std::size_t n) {
    BinaryRelation r(n);
    for (std::size_t x = 0; x < n; ++x) {
      r.insert(x, x);
    }
    return r;
  }

  BinaryRelation BinaryRelation::full(std::size_t n) {
    BinaryRelation r(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        r.insert(x, y);
      }
    }
    return r;
  }

  BinaryRelation BinaryRelation::product(std::size_t                  n,
                                         std::span<std::size_t const> a,
                                         std::span<std::size_t const> b) {
    BinaryRelation r(n);
    for (auto x : a) {
      for (auto y : b) {
        r.insert(x, y);
      }
    }
    return r;
  }

  BinaryRelation BinaryRelation::from_pairs(std::size_t           n,
                                            std::span<Pair const> pairs) {
    BinaryRelation r(n);
    for (auto const& [x, y] : pairs) {
      r.insert(x, y);
    }
    return r;
  }

  void BinaryRelation::check_index(std::size_t x, std::size_t y) const {
    if (x >= n_ || y >= n_) {
      throw InputError("pair (" + std::to_string(x) + ", " + std::to_string(y)
                       + ") outside a ground set of size "
                       + std::to_string(n_));
    }
  }

  bool BinaryRelation::contains(std::size_t x, std::size_t y) const {
    check_index(x, y);
    return (bits_[x * words_ + y / kWordBits] >> (y % kWordBits)) & 1U;
  }

  void BinaryRelation::insert(std::size_t x, std::size_t y) {
    check_index(x, y);
    bits_[x * words_ + y / kWordBits] |= word_type{1} << (y % kWordBits);
  }

  void BinaryRelation::erase(std::size_t x, std::size_t y) {
    check_index(x, y);
    bits_[x * words_ + y / kWordBits] &= ~(word_type{1} << (y % kWordBits));
  }

  std::size_t BinaryRelation::count() const noexcept {
    std::size_t c = 0;
    for (auto w : bits_) {
      c += static_cast<std::size_t>(std::popcount(w));
    }
    return c;
  }

  bool BinaryRelation::is_empty() const noexcept {
    return std::all_of(
        bits_.begin(), bits_.end(), [](word_type w) { return w == 0; });
  }

  std::vector<Pair> BinaryRelation::pairs() const {
    std::vector<Pair> out;
    out.reserve(count());
    for (std::size_t x = 0; x < n_; ++x) {
      for_each_bit(row(x), [&](std::size_t y) { out.emplace_back(x, y); });
    }
    return out;
  }

  bool BinaryRelation::is_subset_of(BinaryRelation const& other) const {
    require_same_ground(*this, other);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if ((bits_[i] & ~other.bits_[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  bool BinaryRelation::intersects(BinaryRelation const& other) const {
    require_same_ground(*this, other);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      if ((bits_[i] & other.bits_[i]) != 0) {
        return true;
      }
    }
    return false;
  }

  BinaryRelation& BinaryRelation::operator|=(BinaryRelation const& other) {
    require_same_ground(*this, other);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] |= other.bits_[i];
    }
    return *this;
  }

  BinaryRelation& BinaryRelation::operator&=(BinaryRelation const& other) {
    require_same_ground(*this, other);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      bits_[i] &= other.bits_[i];
    }
    return *this;
  }

  BinaryRelation BinaryRelation::complement() const {
    BinaryRelation out = full(n_);
    for (std::size_t i = 0; i < bits_.size(); ++i) {
      out.bits_[i] &= ~bits_[i];
    }
    return out;
  }

  std::size_t BinaryRelation::hash() const noexcept {
    // FNV-1a over the words, seeded with the ground size.
    std::uint64_t h = 1469598103934665603ULL ^ n_;
    for (auto w : bits_) {
      h ^= w;
      h *= 1099511628211ULL;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  std::strong_ordering operator<=>(BinaryRelation const& a,
                                   BinaryRelation const& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) {
      return c;
    }
    return std::lexicographical_compare_three_way(
        a.bits_.begin(), a.bits_.end(), b.bits_.begin(), b.bits_.end());
  }

  std::string BinaryRelation::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (auto const& [x, y] : pairs()) {
      os << (first ? "" : ",") << '(' << x << ',' << y << ')';
      first = false;
    }
    os << '}';
    return os.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  BinaryRelation compose(BinaryRelation const& r, BinaryRelation const& s) {
    require_same_ground(r, s);
    BinaryRelation out(r.n_);
    auto const     words = r.words_;
    if (words == 1) {
      for (std::size_t x = 0; x < r.n_; ++x) {
        auto              word = r.bits_[x];
        BinaryRelation::word_type acc  = 0;
        while (word != 0) {
          acc |= s.bits_[static_cast<std::size_t>(std::countr_zero(word))];
          word &= word - 1;
        }
        out.bits_[x] = acc;
      }
      return out;
    }
    for (std::size_t x = 0; x < r.n_; ++x) {
      auto* dst = out.mutable_row(x);
      for_each_bit(r.row(x), [&](std::size_t z) {
        auto const src = s.row(z);
        for (std::size_t w = 0; w < words; ++w) {
          dst[w] |= src[w];
        }
      });
    }
    return out;
  }

  BinaryRelation converse(BinaryRelation const& r) {
    BinaryRelation out(r.n_);
    for (std::size_t x = 0; x < r.n_; ++x) {
      for_each_bit(r.row(x), [&](std::size_t y) { out.insert(y, x); });
    }
    return out;
  }

  bool is_reflexive(BinaryRelation const& r) {
    for (std::size_t x = 0; x < r.ground_size(); ++x) {
      if (!r.contains(x, x)) {
        return false;
      }
    }
    return true;
  }

  bool is_symmetric(BinaryRelation const& r) {
    return converse(r) == r;
  }

  bool is_transitive(BinaryRelation const& r) {
    return compose(r, r).is_subset_of(r);
  }

  std::optional<std::string> violated_equivalence_law(BinaryRelation const& r) {
    if (!is_reflexive(r)) {
      return "reflexive";
    }
    if (!is_symmetric(r)) {
      return "symmetric";
    }
    if (!is_transitive(r)) {
      return "transitive";
    }
    return std::nullopt;
  }

  bool is_equivalence(BinaryRelation const& r) {
    return !violated_equivalence_law(r).has_value();
  }

  std::vector<std::size_t> domain(BinaryRelation const& r) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < r.ground_size(); ++x) {
      auto const row = r.row(x);
      if (std::any_of(row.begin(), row.end(), [](auto w) { return w != 0; })) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<std::size_t> range(BinaryRelation const& r) {
    std::vector<BinaryRelation::word_type> acc(r.words_per_row(), 0);
    for (std::size_t x = 0; x < r.ground_size(); ++x) {
      auto const row = r.row(x);
      for (std::size_t w = 0; w < acc.size(); ++w) {
        acc[w] |= row[w];
      }
    }
    std::vector<std::size_t> out;
    for_each_bit(std::span<BinaryRelation::word_type const>(acc),
                 [&](std::size_t y) { out.push_back(y); });
    return out;
  }

}  // namespace relsemi
