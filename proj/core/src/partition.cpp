#include "relsemi/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "relsemi/error.hpp"

namespace relsemi {

  ////////////////////////////////////////////////////////////////////////
  // Partition
  ////////////////////////////////////////////////////////////////////////

  Partition Partition::from_assignment(std::span<block_index const> assignment) {
    if (assignment.empty()) {
      throw InputError("a partition needs a nonempty ground set");
    }
    Partition                        p;
    std::map<block_index, block_index> renumber;
    p.assignment_.reserve(assignment.size());
    for (auto b : assignment) {
      auto [it, inserted]
          = renumber.try_emplace(b, static_cast<block_index>(renumber.size()));
      p.assignment_.push_back(it->second);
    }
    p.block_count_ = renumber.size();
    return p;
  }

  Partition Partition::from_blocks(
      std::size_t                                  n,
      std::vector<std::vector<std::size_t>> const& blocks) {
    if (n == 0) {
      throw InputError("a partition needs a nonempty ground set");
    }
    constexpr auto           unset = static_cast<block_index>(-1);
    std::vector<block_index> assignment(n, unset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw InputError("block " + std::to_string(b) + " is empty");
      }
      for (auto x : blocks[b]) {
        if (x >= n) {
          throw InputError("element " + std::to_string(x)
                           + " outside a ground set of size "
                           + std::to_string(n));
        }
        if (assignment[x] != unset) {
          throw InputError("element " + std::to_string(x)
                           + " lies in more than one block");
        }
        assignment[x] = static_cast<block_index>(b);
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (assignment[x] == unset) {
        throw InputError("element " + std::to_string(x)
                         + " is not covered by any block");
      }
    }
    return from_assignment(assignment);
  }

  Partition Partition::singletons(std::size_t n) {
    std::vector<block_index> a(n);
    std::iota(a.begin(), a.end(), block_index{0});
    return from_assignment(a);
  }

  Partition Partition::one_block(std::size_t n) {
    std::vector<block_index> a(n, 0);
    return from_assignment(a);
  }

  std::vector<std::vector<std::size_t>> Partition::blocks() const {
    std::vector<std::vector<std::size_t>> out(block_count_);
    for (std::size_t x = 0; x < assignment_.size(); ++x) {
      out[assignment_[x]].push_back(x);
    }
    return out;
  }

  std::vector<std::size_t> Partition::block(block_index b) const {
    if (b >= block_count_) {
      throw InputError("block index out of range");
    }
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < assignment_.size(); ++x) {
      if (assignment_[x] == b) {
        out.push_back(x);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // ProductKind
  ////////////////////////////////////////////////////////////////////////

  std::string_view to_string(ProductKind kind) noexcept {
    switch (kind) {
      case ProductKind::plain:
        return "plain";
      case ProductKind::unit:
        return "unit";
      case ProductKind::sym:
        return "sym";
      case ProductKind::sym_unit:
        return "symunit";
    }
    return "?";
  }

  std::optional<ProductKind> parse_product_kind(std::string_view text) {
    if (text == "plain") {
      return ProductKind::plain;
    }
    if (text == "unit") {
      return ProductKind::unit;
    }
    if (text == "sym") {
      return ProductKind::sym;
    }
    if (text == "symunit" || text == "sym_unit") {
      return ProductKind::sym_unit;
    }
    return std::nullopt;
  }

  std::size_t product_block_count(ProductKind kind, std::size_t k) noexcept {
    switch (kind) {
      case ProductKind::plain:
        return k * k;
      case ProductKind::unit:
        return k * k - k + 1;
      case ProductKind::sym:
        return k * (k + 1) / 2;
      case ProductKind::sym_unit:
        return k * (k - 1) / 2 + 1;
    }
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // LabeledPartition
  ////////////////////////////////////////////////////////////////////////

  LabeledPartition::LabeledPartition(std::size_t              x_size,
                                     Partition                base,
                                     std::vector<std::string> labels)
      : x_size_(x_size), base_(std::move(base)), labels_(std::move(labels)) {
    if (x_size_ == 0 || base_.ground_size() != x_size_ * x_size_) {
      throw InputError("a partition of X^2 needs exactly |X|^2 cells");
    }
    if (!labels_.empty() && labels_.size() != base_.block_count()) {
      throw InputError("expected one label per block");
    }
  }

  LabeledPartition
  LabeledPartition::from_relations(std::size_t                        x_size,
                                   std::vector<BinaryRelation> const& blocks,
                                   std::vector<std::string>           labels) {
    std::vector<std::vector<std::size_t>> cells(blocks.size());
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].ground_size() != x_size) {
        throw InputError("block relation on the wrong ground set");
      }
      for (auto const& [x, y] : blocks[b].pairs()) {
        cells[b].push_back(x * x_size + y);
      }
    }
    auto base = Partition::from_blocks(x_size * x_size, cells);
    // from_blocks renumbers blocks by least cell; carry labels along.
    if (!labels.empty()) {
      if (labels.size() != blocks.size()) {
        throw InputError("expected one label per block");
      }
      std::vector<std::string> reordered(labels.size());
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        reordered[base.block_of(cells[b].front())] = labels[b];
      }
      labels = std::move(reordered);
    }
    return LabeledPartition(x_size, std::move(base), std::move(labels));
  }

  std::string LabeledPartition::label(block_index b) const {
    if (b >= base_.block_count()) {
      throw InputError("block index out of range");
    }
    return labels_.empty() ? "b" + std::to_string(b) : labels_[b];
  }

  BinaryRelation LabeledPartition::block_relation(block_index b) const {
    BinaryRelation r(x_size_);
    for (std::size_t c = 0; c < base_.ground_size(); ++c) {
      if (base_.block_of(c) == b) {
        r.insert(c / x_size_, c % x_size_);
      }
    }
    return r;
  }

  std::vector<BinaryRelation> LabeledPartition::block_relations() const {
    std::vector<BinaryRelation> out(base_.block_count(),
                                    BinaryRelation(x_size_));
    for (std::size_t c = 0; c < base_.ground_size(); ++c) {
      out[base_.block_of(c)].insert(c / x_size_, c % x_size_);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalences and refinement
  ////////////////////////////////////////////////////////////////////////

  BinaryRelation to_equivalence(Partition const& p) {
    BinaryRelation r(p.ground_size());
    for (auto const& block : p.blocks()) {
      r |= BinaryRelation::product(p.ground_size(), block, block);
    }
    return r;
  }

  Partition from_equivalence(BinaryRelation const& r) {
    if (auto law = violated_equivalence_law(r)) {
      throw PreconditionError("relation is not an equivalence: the " + *law
                              + " law fails");
    }
    auto const               n = r.ground_size();
    constexpr auto           unset = static_cast<block_index>(-1);
    std::vector<block_index> a(n, unset);
    block_index              next = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (a[x] != unset) {
        continue;
      }
      for (std::size_t y = x; y < n; ++y) {
        if (r.contains(x, y)) {
          a[y] = next;
        }
      }
      ++next;
    }
    return Partition::from_assignment(a);
  }

  namespace {
    void require_same_ground(Partition const& p1, Partition const& p2) {
      if (p1.ground_size() != p2.ground_size()) {
        throw InputError("partitions of different ground sets");
      }
    }
  }  // namespace

  bool is_refinement(Partition const& p1, Partition const& p2) {
    require_same_ground(p1, p2);
    auto const n = p1.ground_size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (p1.block_of(y) == p1.block_of(x) && p2.block_of(y) != p2.block_of(x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_refinement_by_relations(Partition const& p1, Partition const& p2) {
    require_same_ground(p1, p2);
    return to_equivalence(p1).is_subset_of(to_equivalence(p2));
  }

  bool is_refinement_by_unions(Partition const& p1, Partition const& p2) {
    require_same_ground(p1, p2);
    auto const b1 = p1.blocks();
    for (auto const& target : p2.blocks()) {
      std::vector<bool> covered(p1.ground_size(), false);
      for (auto const& candidate : b1) {
        bool const meets = std::any_of(candidate.begin(), candidate.end(), [&](auto x) {
          return std::binary_search(target.begin(), target.end(), x);
        });
        if (meets) {
          for (auto x : candidate) {
            covered[x] = true;
          }
        }
      }
      // The union of the p1-blocks meeting the target must be the target.
      for (std::size_t x = 0; x < covered.size(); ++x) {
        if (covered[x] != std::binary_search(target.begin(), target.end(), x)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<block_index> factor_map(Partition const& p1, Partition const& p2) {
    if (!is_refinement(p1, p2)) {
      throw PreconditionError("factor_map: first partition does not refine "
                              "the second");
    }
    std::vector<block_index> phi(p1.block_count());
    for (std::size_t x = 0; x < p1.ground_size(); ++x) {
      phi[p1.block_of(x)] = p2.block_of(x);
    }
    return phi;
  }

  ////////////////////////////////////////////////////////////////////////
  // Products
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string ordered_label(std::size_t i, std::size_t j) {
      return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
    std::string unordered_label(std::size_t i, std::size_t j) {
      return "{" + std::to_string(std::min(i, j)) + ","
             + std::to_string(std::max(i, j)) + "}";
    }
  }  // namespace

  LabeledPartition product(Partition const& p, ProductKind kind) {
    auto const                  n      = p.ground_size();
    auto const                  blocks = p.blocks();
    auto const                  k      = blocks.size();
    std::vector<BinaryRelation> rels;
    std::vector<std::string>    labels;

    auto square = [&](std::size_t i, std::size_t j) {
      return BinaryRelation::product(n, blocks[i], blocks[j]);
    };
    bool const with_rp = kind == ProductKind::unit || kind == ProductKind::sym_unit;
    if (with_rp) {
      rels.push_back(to_equivalence(p));
      labels.emplace_back("R_P");
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        switch (kind) {
          case ProductKind::plain:
            rels.push_back(square(i, j));
            labels.push_back(ordered_label(i, j));
            break;
          case ProductKind::unit:
            if (i != j) {
              rels.push_back(square(i, j));
              labels.push_back(ordered_label(i, j));
            }
            break;
          case ProductKind::sym:
            if (i <= j) {
              rels.push_back(square(i, j) | square(j, i));
              labels.push_back(unordered_label(i, j));
            }
            break;
          case ProductKind::sym_unit:
            if (i < j) {
              rels.push_back(square(i, j) | square(j, i));
              labels.push_back(unordered_label(i, j));
            }
            break;
        }
      }
    }
    return LabeledPartition::from_relations(n, rels, std::move(labels));
  }

  bool is_symmetric_partition(LabeledPartition const& q) {
    auto const n = q.x_size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (q.block_of(x, y) != q.block_of(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    void require_equivalence_on(LabeledPartition const& q,
                                BinaryRelation const&   r) {
      if (r.ground_size() != q.x_size()) {
        throw PreconditionError("coherence: relation and partition live on "
                                "different ground sets");
      }
      if (auto law = violated_equivalence_law(r)) {
        throw PreconditionError("coherence needs an equivalence relation; the "
                                + *law + " law fails");
      }
    }

    bool coherent_unchecked(LabeledPartition const& q, BinaryRelation const& r) {
      auto const n = q.x_size();
      for (std::size_t x1 = 0; x1 < n; ++x1) {
        for (std::size_t x3 = 0; x3 < n; ++x3) {
          if (!r.contains(x1, x3)) {
            continue;
          }
          for (std::size_t x2 = 0; x2 < n; ++x2) {
            for (std::size_t x4 = 0; x4 < n; ++x4) {
              if (r.contains(x2, x4) && q.block_of(x1, x2) != q.block_of(x3, x4)) {
                return false;
              }
            }
          }
        }
      }
      return true;
    }

    bool constant_diagonal(LabeledPartition const& q) {
      for (std::size_t x = 1; x < q.x_size(); ++x) {
        if (q.block_of(x, x) != q.block_of(0, 0)) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool is_coherent(LabeledPartition const& q, BinaryRelation const& r) {
    require_equivalence_on(q, r);
    return coherent_unchecked(q, r);
  }

  bool is_coherent_unit(LabeledPartition const& q, BinaryRelation const& r) {
    return is_coherent(q, r) && constant_diagonal(q);
  }

  bool is_coherent_sym(LabeledPartition const& q, BinaryRelation const& r) {
    return is_coherent(q, r) && is_symmetric_partition(q);
  }

  bool is_coherent_sym_unit(LabeledPartition const& q, BinaryRelation const& r) {
    return is_coherent_sym(q, r) && constant_diagonal(q);
  }

  bool is_coherent(LabeledPartition const& q,
                   BinaryRelation const&   r,
                   ProductKind             kind) {
    switch (kind) {
      case ProductKind::plain:
        return is_coherent(q, r);
      case ProductKind::unit:
        return is_coherent_unit(q, r);
      case ProductKind::sym:
        return is_coherent_sym(q, r);
      case ProductKind::sym_unit:
        return is_coherent_sym_unit(q, r);
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical labelings
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Values of the codomains J^2, J^{2,1}, J x J_S and J x J_S^1.
    struct IndexLabel {
      enum class Tag {
        ordered,    // <i, j>
        diagonal,   // the single point Delta_J
        singleton,  // {<j, j>}
        unordered,  // {<i, j>, <j, i>}, i < j
      };
      Tag         tag;
      block_index i = 0;
      block_index j = 0;

      friend auto operator<=>(IndexLabel const&, IndexLabel const&) = default;

      std::string to_string() const {
        switch (tag) {
          case Tag::ordered:
            return "<" + std::to_string(i) + "," + std::to_string(j) + ">";
          case Tag::diagonal:
            return "Delta_J";
          case Tag::singleton:
            return "{<" + std::to_string(i) + "," + std::to_string(i) + ">}";
          case Tag::unordered:
            return "{<" + std::to_string(i) + "," + std::to_string(j) + ">,<"
                   + std::to_string(j) + "," + std::to_string(i) + ">}";
        }
        return "?";
      }
    };

    using Tag = IndexLabel::Tag;

    IndexLabel block_pair_map(Partition const& p, std::size_t x, std::size_t y) {
      return {Tag::ordered, p.block_of(x), p.block_of(y)};
    }

    // J^2 -> J^{2,1}: collapse the diagonal of J to one point.
    IndexLabel collapse_diagonal(IndexLabel v) {
      return v.i == v.j ? IndexLabel{Tag::diagonal} : v;
    }

    // J^2 -> J x J_S: forget the order of the pair.
    IndexLabel symmetrise(IndexLabel v) {
      if (v.i == v.j) {
        return {Tag::singleton, v.i, v.i};
      }
      return {Tag::unordered, std::min(v.i, v.j), std::max(v.i, v.j)};
    }

    // J x J_S -> J x J_S^1: merge the singletons {<j, j>} into Delta_J.
    IndexLabel merge_singletons(IndexLabel v) {
      return v.tag == Tag::singleton ? IndexLabel{Tag::diagonal} : v;
    }
  }  // namespace

  LabeledPartition canonical_labeling(Partition const& p, ProductKind kind) {
    auto const                       n = p.ground_size();
    std::vector<IndexLabel>          values;
    values.reserve(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        auto v = block_pair_map(p, x, y);
        switch (kind) {
          case ProductKind::plain:
            break;
          case ProductKind::unit:
            v = collapse_diagonal(v);
            break;
          case ProductKind::sym:
            v = symmetrise(v);
            break;
          case ProductKind::sym_unit:
            v = merge_singletons(symmetrise(v));
            break;
        }
        values.push_back(v);
      }
    }
    // P_{F^{-1}}: group cells by value, name each fibre by its value.
    std::map<IndexLabel, block_index> fibre;
    std::vector<block_index>          assignment;
    assignment.reserve(values.size());
    for (auto const& v : values) {
      auto [it, inserted]
          = fibre.try_emplace(v, static_cast<block_index>(fibre.size()));
      assignment.push_back(it->second);
    }
    auto                     base = Partition::from_assignment(assignment);
    std::vector<std::string> labels(base.block_count());
    for (std::size_t c = 0; c < values.size(); ++c) {
      labels[base.block_of(c)] = values[c].to_string();
    }
    return LabeledPartition(n, std::move(base), std::move(labels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  PartitionEnumerator::PartitionEnumerator(std::size_t m, std::size_t max_blocks)
      : max_blocks_(max_blocks), rgs_(m, 0), prefix_max_(m, 0) {
    if (m == 0) {
      throw InputError("cannot enumerate partitions of the empty set");
    }
    blocks_ = 1;
    done_   = max_blocks == 0;
  }

  void PartitionEnumerator::advance() {
    if (done_) {
      return;
    }
    auto const m = rgs_.size();
    for (std::size_t i = m; i-- > 1;) {
      auto const limit = prefix_max_[i - 1] + 1;  // largest value allowed at i
      if (rgs_[i] < limit && rgs_[i] + 1 < max_blocks_) {
        ++rgs_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
        for (std::size_t t = i + 1; t < m; ++t) {
          rgs_[t]        = 0;
          prefix_max_[t] = prefix_max_[i];
        }
        blocks_ = prefix_max_[m - 1] + 1;
        return;
      }
    }
    done_ = true;
  }

  std::vector<Partition> enumerate_partitions(std::size_t m,
                                              std::size_t max_blocks) {
    std::vector<Partition> out;
    for (PartitionEnumerator e(m, max_blocks); !e.done(); e.advance()) {
      out.push_back(e.current());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Smallest-element verification
  ////////////////////////////////////////////////////////////////////////

  SmallestReport verify_smallest(Partition const& p,
                                 ProductKind      kind,
                                 std::size_t      max_ground) {
    auto const n = p.ground_size();
    if (n > max_ground) {
      throw GuardError("verify_smallest: |X| = " + std::to_string(n)
                       + " exceeds the enumeration guard "
                       + std::to_string(max_ground));
    }
    SmallestReport report;
    report.kind = kind;
    auto const     rp     = to_equivalence(p);
    auto const     target = product(p, kind);

    if (!is_coherent(target, rp, kind)) {
      report.counterexample = target.base();
      report.detail = "product is not in its own coherence class";
      return report;
    }

    bool const symmetric_kind
        = kind == ProductKind::sym || kind == ProductKind::sym_unit;
    auto const lower = product(
        p, kind == ProductKind::sym ? ProductKind::plain : ProductKind::unit);

    for (PartitionEnumerator e(n * n, n * n); !e.done(); e.advance()) {
      ++report.partitions_examined;
      LabeledPartition const q(n, e.current());
      if (is_coherent(q, rp, kind)) {
        ++report.class_members;
        if (!is_refinement(target.base(), q.base())) {
          report.counterexample = q.base();
          report.detail = "class member not refined by the product";
          return report;
        }
      }
      if (symmetric_kind && is_symmetric_partition(q)
          && is_refinement(lower.base(), q.base())) {
        ++report.symmetric_checked;
        if (!is_refinement(target.base(), q.base())) {
          report.counterexample = q.base();
          report.detail = "symmetric partition above the base product not "
                          "refined by the product";
          return report;
        }
      }
    }
    report.verified = true;
    return report;
  }

}  // namespace relsemi
