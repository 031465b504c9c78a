#include "relsemi/represent.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <limits>
#include <thread>
#include <unordered_set>

#include "relsemi/classify.hpp"
#include "relsemi/error.hpp"
#include "relsemi/generation.hpp"

namespace relsemi {

  namespace {
    constexpr std::size_t kBatch = 4096;

    std::size_t saturating_add(std::size_t a, std::size_t b) {
      return a > std::numeric_limits<std::size_t>::max() - b
                 ? std::numeric_limits<std::size_t>::max()
                 : a + b;
    }

    std::size_t saturating_mul(std::size_t a, std::size_t b) {
      if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
        return std::numeric_limits<std::size_t>::max();
      }
      return a * b;
    }

    std::vector<BinaryRelation> relations_of(std::size_t                  n,
                                             std::span<block_index const> rgs,
                                             std::size_t                  blocks) {
      std::vector<BinaryRelation> out(blocks, BinaryRelation(n));
      for (std::size_t c = 0; c < rgs.size(); ++c) {
        out[rgs[c]].insert(c / n, c % n);
      }
      return out;
    }

    std::vector<std::string> block_names(std::size_t k) {
      std::vector<std::string> out;
      for (std::size_t b = 0; b < k; ++b) {
        out.push_back("B" + std::to_string(b));
      }
      return out;
    }

    // The isomorphism from h onto the closure of the candidate blocks, if
    // the candidate represents h.
    std::optional<std::pair<GeneratedSemigroup, std::vector<std::size_t>>>
    try_candidate(AbstractSemigroup const&           h,
                  bool                               has_zero,
                  std::vector<BinaryRelation> const& blocks) {
      auto const elems = closure_elements(blocks, h.size());
      if (!elems || elems->size() != h.size()) {
        return std::nullopt;
      }
      if (has_zero && std::none_of(elems->begin(), elems->end(), [](auto const& r) {
            return r.is_empty();
          })) {
        return std::nullopt;
      }
      auto s   = generate(blocks, block_names(blocks.size()), h.size());
      auto iso = find_isomorphism(h, s.abstract());
      if (!iso) {
        return std::nullopt;
      }
      return std::make_pair(std::move(s), std::move(*iso));
    }

    DTransitiveWitness witness_from(GeneratedSemigroup const&       s,
                                    std::vector<std::size_t> const& iso) {
      DTransitiveWitness w;
      w.ground = s.ground_size();
      for (std::size_t g = 0; g < s.generator_indices().size(); ++g) {
        w.blocks.push_back(s.element(s.generator_indices()[g]));
        w.block_labels.push_back(g < s.generator_labels().size()
                                     ? s.generator_labels()[g]
                                     : "B" + std::to_string(g));
      }
      for (auto i : iso) {
        w.images.push_back(s.element(i));
        std::optional<std::size_t> b;
        for (std::size_t g = 0; g < s.generator_indices().size(); ++g) {
          if (s.generator_indices()[g] == i) {
            b = g;
            break;
          }
        }
        w.generator_map.push_back(b);
      }
      return w;
    }

    DTransitiveWitness represent_zero_kind(AbstractSemigroup const& h, bool right) {
      auto const m = h.size();
      for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
          if (h.product(x, y) != (right ? y : x)) {
            throw PreconditionError(std::string("not a ") + (right ? "right" : "left")
                                    + " zero semigroup: " + h.name(x) + " * "
                                    + h.name(y) + " = " + h.name(h.product(x, y)));
          }
        }
      }
      DTransitiveWitness w;
      w.ground = m;
      for (std::size_t x = 0; x < m; ++x) {
        BinaryRelation r(m);
        for (std::size_t z = 0; z < m; ++z) {
          right ? r.insert(z, x) : r.insert(x, z);
        }
        w.blocks.push_back(r);
        w.block_labels.push_back(h.name(x));
        w.images.push_back(r);
        w.generator_map.emplace_back(x);
      }
      return w;
    }
  }  // namespace

  LabeledPartition DTransitiveWitness::partition() const {
    return LabeledPartition::from_relations(ground, blocks, block_labels);
  }

  WitnessCheck verify_witness(AbstractSemigroup const& h, DTransitiveWitness const& w) {
    auto const m = h.size();
    if (w.ground == 0 || w.blocks.empty()) {
      return {false, "no ground set or no blocks"};
    }
    BinaryRelation covered(w.ground);
    for (auto const& b : w.blocks) {
      if (b.ground_size() != w.ground) {
        return {false, "block on the wrong ground set"};
      }
      if (b.is_empty()) {
        return {false, "empty block"};
      }
      if (b.intersects(covered)) {
        return {false, "blocks overlap"};
      }
      covered |= b;
    }
    if (covered != BinaryRelation::full(w.ground)) {
      return {false, "blocks do not cover X^2"};
    }
    if (w.images.size() != m || w.generator_map.size() != m) {
      return {false, "map does not cover every element"};
    }
    std::unordered_set<BinaryRelation> distinct;
    for (auto const& r : w.images) {
      if (r.ground_size() != w.ground) {
        return {false, "image on the wrong ground set"};
      }
      if (!distinct.insert(r).second) {
        return {false, "map is not injective"};
      }
    }
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (compose(w.images[x], w.images[y]) != w.images[h.product(x, y)]) {
          return {false, "map is not a homomorphism at (" + h.name(x) + ", "
                             + h.name(y) + ")"};
        }
      }
    }
    std::vector<std::size_t> hits(w.blocks.size(), 0);
    std::vector<std::size_t> gens;
    for (std::size_t x = 0; x < m; ++x) {
      if (auto b = w.generator_map[x]) {
        if (*b >= w.blocks.size() || w.images[x] != w.blocks[*b]) {
          return {false, "generator " + h.name(x) + " is not sent to its block"};
        }
        ++hits[*b];
        gens.push_back(x);
      }
    }
    if (std::any_of(hits.begin(), hits.end(), [](auto c) { return c != 1; })) {
      return {false, "blocks and generators are not in bijection"};
    }
    if (generated_by(h, gens).size() != m) {
      return {false, "block preimages do not generate the semigroup"};
    }
    if (auto theta = zero(h); theta && !w.images[*theta].is_empty()) {
      return {false, "the zero is not sent to the empty relation"};
    }
    return {true, {}};
  }

  DTransitiveWitness represent_right_zero(AbstractSemigroup const& h) {
    return represent_zero_kind(h, true);
  }

  DTransitiveWitness represent_left_zero(AbstractSemigroup const& h) {
    return represent_zero_kind(h, false);
  }

  std::string_view to_string(SemigroupClass c) noexcept {
    switch (c) {
      case SemigroupClass::h1:
        return "H1";
      case SemigroupClass::h1_unit:
        return "H1_UNIT";
      case SemigroupClass::hs:
        return "HS";
      case SemigroupClass::hs_unit:
        return "HS_UNIT";
    }
    return "?";
  }

  std::optional<SemigroupClass> parse_semigroup_class(std::string_view text) {
    for (auto c : {SemigroupClass::h1, SemigroupClass::h1_unit, SemigroupClass::hs,
                   SemigroupClass::hs_unit}) {
      std::string lower;
      for (char ch : to_string(c)) {
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      }
      if (text == to_string(c) || text == lower) {
        return c;
      }
    }
    return std::nullopt;
  }

  DTransitiveWitness represent_class_member(AbstractSemigroup const& h, SemigroupClass c) {
    ClassVerdict v;
    switch (c) {
      case SemigroupClass::h1:
        v = check_H1(h);
        break;
      case SemigroupClass::h1_unit:
        v = check_H1_unit(h);
        break;
      case SemigroupClass::hs:
        v = check_HS(h);
        break;
      case SemigroupClass::hs_unit:
        v = check_HS_unit(h);
        break;
    }
    if (!v.member || !v.model) {
      throw PreconditionError("the semigroup is not in " + std::string(to_string(c)));
    }
    auto w = witness_from(v.model->closure, v.model->iso);
    if (auto check = verify_witness(h, w); !check) {
      throw Error("internal error: canonical representation fails: " + check.reason);
    }
    return w;
  }

  std::set<std::size_t> admissible_block_counts(AbstractSemigroup const& h) {
    auto const m = h.size();
    if (m > 16) {
      throw GuardError("generating-set scan is limited to 16 elements; pass the "
                       "block counts explicitly");
    }
    auto const               theta = zero(h);
    std::vector<std::size_t> nonzero;
    for (std::size_t x = 0; x < m; ++x) {
      if (x != theta) {
        nonzero.push_back(x);
      }
    }
    std::set<std::size_t> out;
    if (generated_by(h, nonzero).size() != m) {
      return out;
    }
    auto const k     = nonzero.size();
    std::size_t least = k;
    for (std::size_t size = 1; size < k && least == k; ++size) {
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != size) {
          continue;
        }
        std::vector<std::size_t> a;
        for (std::size_t i = 0; i < k; ++i) {
          if (mask >> i & 1U) {
            a.push_back(nonzero[i]);
          }
        }
        if (generated_by(h, a).size() == m) {
          least = size;
          break;
        }
      }
    }
    for (auto s = least; s <= k; ++s) {
      out.insert(s);
    }
    return out;
  }

  std::size_t partitions_up_to(std::size_t m, std::size_t k) {
    // s[j] = S(i, j) for the current i.
    std::vector<std::size_t> s(k + 1, 0);
    s[0] = 1;
    for (std::size_t i = 1; i <= m; ++i) {
      for (std::size_t j = std::min(i, k); j >= 1; --j) {
        s[j] = saturating_add(saturating_mul(j, s[j]), s[j - 1]);
      }
      s[0] = 0;
    }
    std::size_t total = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      total = saturating_add(total, s[j]);
    }
    return total;
  }

  SearchReport search_d_transitive(AbstractSemigroup const& h, SearchOptions const& options) {
    if (options.max_ground == 0) {
      throw InputError("max_ground must be at least 1");
    }
    SearchReport report;
    report.max_ground   = options.max_ground;
    report.block_counts = options.block_counts ? *options.block_counts
                                               : admissible_block_counts(h);
    report.block_counts.erase(0);
    if (report.block_counts.empty()) {
      return report;
    }

    std::size_t budget_used = 0;
    for (std::size_t n = 1; n <= options.max_ground; ++n) {
      auto const cells = n * n;
      auto const top   = std::min(*report.block_counts.rbegin(), cells);
      budget_used      = saturating_add(budget_used, partitions_up_to(cells, top));
    }
    if (budget_used > options.candidate_budget) {
      throw GuardError("search would enumerate " + std::to_string(budget_used)
                       + " partitions, over the budget of "
                       + std::to_string(options.candidate_budget));
    }

    bool const  has_zero = zero(h).has_value();
    std::size_t threads  = std::max<std::size_t>(1, options.threads);

    for (std::size_t n = 1; n <= options.max_ground; ++n) {
      auto const cells = n * n;
      auto const top   = std::min(*report.block_counts.rbegin(), cells);
      if (*report.block_counts.begin() > cells) {
        continue;
      }
      PartitionEnumerator                    e(cells, top);
      std::vector<std::vector<block_index>>  batch;
      std::vector<std::size_t>               batch_blocks;
      while (!e.done()) {
        batch.clear();
        batch_blocks.clear();
        for (; !e.done() && batch.size() < kBatch; e.advance()) {
          if (report.block_counts.contains(e.block_count())) {
            batch.emplace_back(e.rgs().begin(), e.rgs().end());
            batch_blocks.push_back(e.block_count());
          }
        }
        // Least batch position holding a representation.
        std::vector<std::size_t> first(threads, batch.size());
        auto work = [&](std::size_t t) {
          for (std::size_t i = t; i < batch.size(); i += threads) {
            auto blocks = relations_of(n, batch[i], batch_blocks[i]);
            if (try_candidate(h, has_zero, blocks)) {
              first[t] = i;
              break;
            }
          }
        };
        if (threads == 1) {
          work(0);
        } else {
          std::vector<std::thread> pool;
          for (std::size_t t = 0; t < threads; ++t) {
            pool.emplace_back(work, t);
          }
          for (auto& th : pool) {
            th.join();
          }
        }
        auto const hit = *std::min_element(first.begin(), first.end());
        if (hit < batch.size()) {
          report.candidates_examined += hit + 1;
          auto blocks = relations_of(n, batch[hit], batch_blocks[hit]);
          auto found  = try_candidate(h, has_zero, blocks);
          report.witness = witness_from(found->first, found->second);
          return report;
        }
        report.candidates_examined += batch.size();
      }
    }
    return report;
  }

}  // namespace relsemi
