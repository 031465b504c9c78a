#include "relsemi/generation.hpp"

#include <algorithm>
#include <unordered_set>

#include "relsemi/error.hpp"

namespace relsemi {

  std::optional<std::size_t>
  GeneratedSemigroup::index_of(BinaryRelation const& r) const {
    auto it = index_.find(r);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  AbstractSemigroup GeneratedSemigroup::abstract() const {
    auto const               m = elements_.size();
    std::vector<std::string> names(m);
    for (std::size_t g = 0; g < generator_indices_.size(); ++g) {
      auto& n = names[generator_indices_[g]];
      if (n.empty() && g < generator_labels_.size()) {
        n = generator_labels_[g];
      }
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (elements_[i].is_empty()) {
        names[i] = "0";
      } else if (names[i].empty()) {
        names[i] = "w" + std::to_string(i);
      }
    }
    std::unordered_set<std::string> used;
    for (auto& n : names) {
      while (!used.insert(n).second) {
        n += "'";
      }
    }
    return AbstractSemigroup::validate(std::move(names), table_);
  }

  GeneratedSemigroup generate(std::vector<BinaryRelation> const& gens,
                              std::vector<std::string>           labels,
                              std::size_t                        element_cap) {
    if (gens.empty()) {
      throw InputError("at least one generator is required");
    }
    if (!labels.empty() && labels.size() != gens.size()) {
      throw InputError("expected one label per generator");
    }
    auto const n = gens.front().ground_size();
    for (auto const& g : gens) {
      if (g.ground_size() != n) {
        throw InputError("generators live on different ground sets");
      }
    }

    GeneratedSemigroup s;
    s.generator_labels_ = std::move(labels);
    auto add            = [&](BinaryRelation const& r) {
      auto [it, inserted] = s.index_.try_emplace(r, s.elements_.size());
      if (inserted) {
        if (s.elements_.size() >= element_cap) {
          throw GuardError("closure exceeds the element cap of "
                           + std::to_string(element_cap));
        }
        s.elements_.push_back(r);
      }
      return it->second;
    };

    for (auto const& g : gens) {
      s.generator_indices_.push_back(add(g));
    }
    // Distinct generators, used for extending words on either side.
    std::vector<BinaryRelation> letters;
    for (std::size_t i = 0; i < s.elements_.size(); ++i) {
      letters.push_back(s.elements_[i]);
    }

    std::size_t level_begin = 0;
    std::size_t level_end   = s.elements_.size();
    while (level_begin < level_end) {
      std::vector<BinaryRelation> fresh;
      std::unordered_set<BinaryRelation> seen;
      for (std::size_t w = level_begin; w < level_end; ++w) {
        for (auto const& g : letters) {
          for (auto&& r : {compose(s.elements_[w], g), compose(g, s.elements_[w])}) {
            if (!s.index_.contains(r) && seen.insert(r).second) {
              fresh.push_back(r);
            }
          }
        }
      }
      std::sort(fresh.begin(), fresh.end());
      for (auto const& r : fresh) {
        add(r);
      }
      level_begin = level_end;
      level_end   = s.elements_.size();
    }

    auto const m = s.elements_.size();
    s.table_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto it = s.index_.find(compose(s.elements_[i], s.elements_[j]));
        if (it == s.index_.end()) {
          throw Error("internal error: closure is not closed under composition");
        }
        s.table_[i * m + j] = static_cast<AbstractSemigroup::index_type>(it->second);
      }
    }
    return s;
  }

  GeneratedSemigroup from_partition(Partition const& p,
                                    ProductKind      kind,
                                    std::size_t      element_cap) {
    return from_blocks(product(p, kind), element_cap);
  }

  GeneratedSemigroup from_blocks(LabeledPartition const& q, std::size_t element_cap) {
    std::vector<std::string> labels;
    if (q.has_labels()) {
      labels = q.labels();
    }
    return generate(q.block_relations(), std::move(labels), element_cap);
  }

  std::optional<std::vector<BinaryRelation>>
  closure_elements(std::span<BinaryRelation const> gens, std::size_t cap) {
    std::unordered_set<BinaryRelation> seen;
    std::vector<BinaryRelation>        all;
    for (auto const& g : gens) {
      if (seen.insert(g).second) {
        all.push_back(g);
      }
    }
    if (all.size() > cap) {
      return std::nullopt;
    }
    auto const letters = all;
    for (std::size_t w = 0; w < all.size(); ++w) {
      for (auto const& g : letters) {
        auto r = compose(all[w], g);
        if (seen.insert(r).second) {
          all.push_back(std::move(r));
          if (all.size() > cap) {
            return std::nullopt;
          }
        }
      }
    }
    return all;
  }

}  // namespace relsemi
