// Isomorphism search between Cayley tables: joint colour refinement on
// element invariants, then backtracking with forced-product propagation.

#include <algorithm>
#include <cstdint>
#include <map>

#include "relsemi/semigroup.hpp"

namespace relsemi {

  namespace {
    using Signature = std::vector<std::uint64_t>;
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

    // Index and period of the monogenic subsemigroup of x.
    std::pair<std::size_t, std::size_t> power_shape(AbstractSemigroup const& h,
                                                    std::size_t              x) {
      std::vector<std::size_t> first_seen(h.size(), kUnset);
      std::size_t              p = x;
      for (std::size_t k = 1;; ++k) {
        if (first_seen[p] != kUnset) {
          return {first_seen[p], k - first_seen[p]};
        }
        first_seen[p] = k;
        p             = h.product(p, x);
      }
    }

    Signature base_signature(AbstractSemigroup const& h, std::size_t x) {
      auto const [index, period] = power_shape(h, x);
      std::uint64_t fixes_right = 0, fixes_left = 0, absorbs_right = 0,
                    absorbs_left = 0;
      std::vector<bool> row_image(h.size(), false), col_image(h.size(), false);
      for (std::size_t y = 0; y < h.size(); ++y) {
        fixes_right += h.product(x, y) == y;
        fixes_left += h.product(y, x) == y;
        absorbs_right += h.product(x, y) == x;
        absorbs_left += h.product(y, x) == x;
        row_image[h.product(x, y)] = true;
        col_image[h.product(y, x)] = true;
      }
      return {index,
              period,
              fixes_right,
              fixes_left,
              absorbs_right,
              absorbs_left,
              static_cast<std::uint64_t>(
                  std::count(row_image.begin(), row_image.end(), true)),
              static_cast<std::uint64_t>(
                  std::count(col_image.begin(), col_image.end(), true))};
    }

    using Colours = std::vector<std::uint32_t>;

    // Assigns colours to the elements of both semigroups from one shared
    // dictionary so equal colours are comparable across them.
    void recolour(std::vector<Signature> const& s1,
                  std::vector<Signature> const& s2,
                  Colours&                      c1,
                  Colours&                      c2) {
      std::map<Signature, std::uint32_t> dict;
      for (auto const* s : {&s1, &s2}) {
        for (auto const& sig : *s) {
          dict.try_emplace(sig, 0);
        }
      }
      std::uint32_t next = 0;
      for (auto& [sig, c] : dict) {
        c = next++;
      }
      c1.resize(s1.size());
      c2.resize(s2.size());
      for (std::size_t x = 0; x < s1.size(); ++x) {
        c1[x] = dict[s1[x]];
      }
      for (std::size_t x = 0; x < s2.size(); ++x) {
        c2[x] = dict[s2[x]];
      }
    }

    Signature refined_signature(AbstractSemigroup const& h,
                                Colours const&           c,
                                std::size_t              x) {
      std::vector<std::uint64_t> cells;
      cells.reserve(h.size());
      for (std::size_t y = 0; y < h.size(); ++y) {
        cells.push_back((std::uint64_t{c[y]} << 42)
                        | (std::uint64_t{c[h.product(x, y)]} << 21)
                        | std::uint64_t{c[h.product(y, x)]});
      }
      std::sort(cells.begin(), cells.end());
      Signature sig{c[x]};
      sig.insert(sig.end(), cells.begin(), cells.end());
      return sig;
    }

    std::size_t distinct(Colours const& c) {
      Colours tmp = c;
      std::sort(tmp.begin(), tmp.end());
      return static_cast<std::size_t>(std::unique(tmp.begin(), tmp.end())
                                      - tmp.begin());
    }

    bool same_histogram(Colours a, Colours b) {
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    }

    class Matcher {
     public:
      Matcher(AbstractSemigroup const& h1,
              AbstractSemigroup const& h2,
              Colours const&           c1,
              Colours const&           c2)
          : h1_(h1),
            h2_(h2),
            c1_(c1),
            c2_(c2),
            phi_(h1.size(), kUnset),
            inv_(h2.size(), kUnset) {}

      bool search() {
        std::size_t x = 0;
        while (x < phi_.size() && phi_[x] != kUnset) {
          ++x;
        }
        if (x == phi_.size()) {
          return true;
        }
        for (std::size_t y = 0; y < h2_.size(); ++y) {
          if (inv_[y] != kUnset || c1_[x] != c2_[y]) {
            continue;
          }
          auto const mark = trail_.size();
          if (assign(x, y) && propagate(mark) && search()) {
            return true;
          }
          undo(mark);
        }
        return false;
      }

      std::vector<std::size_t> const& map() const noexcept {
        return phi_;
      }

     private:
      bool assign(std::size_t x, std::size_t y) {
        if (phi_[x] != kUnset) {
          return phi_[x] == y;
        }
        if (inv_[y] != kUnset || c1_[x] != c2_[y]) {
          return false;
        }
        phi_[x] = y;
        inv_[y] = x;
        trail_.push_back(x);
        return true;
      }

      // Every pair of assigned elements forces the image of its products.
      bool propagate(std::size_t from) {
        for (std::size_t q = from; q < trail_.size(); ++q) {
          auto const x = trail_[q];
          for (std::size_t t = 0; t <= q; ++t) {
            auto const a = trail_[t];
            if (!assign(h1_.product(a, x), h2_.product(phi_[a], phi_[x]))
                || !assign(h1_.product(x, a), h2_.product(phi_[x], phi_[a]))) {
              return false;
            }
          }
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (trail_.size() > mark) {
          auto const x = trail_.back();
          trail_.pop_back();
          inv_[phi_[x]] = kUnset;
          phi_[x]       = kUnset;
        }
      }

      AbstractSemigroup const& h1_;
      AbstractSemigroup const& h2_;
      Colours const&           c1_;
      Colours const&           c2_;
      std::vector<std::size_t> phi_;
      std::vector<std::size_t> inv_;
      std::vector<std::size_t> trail_;
    };
  }  // namespace

  std::optional<std::vector<std::size_t>>
  find_isomorphism(AbstractSemigroup const& h1, AbstractSemigroup const& h2) {
    auto const m = h1.size();
    if (m != h2.size()) {
      return std::nullopt;
    }
    std::vector<Signature> s1(m), s2(m);
    for (std::size_t x = 0; x < m; ++x) {
      s1[x] = base_signature(h1, x);
      s2[x] = base_signature(h2, x);
    }
    Colours c1, c2;
    recolour(s1, s2, c1, c2);
    std::size_t classes = distinct(c1);
    while (true) {
      if (!same_histogram(c1, c2)) {
        return std::nullopt;
      }
      for (std::size_t x = 0; x < m; ++x) {
        s1[x] = refined_signature(h1, c1, x);
        s2[x] = refined_signature(h2, c2, x);
      }
      Colours n1, n2;
      recolour(s1, s2, n1, n2);
      auto const refined = distinct(n1);
      c1 = std::move(n1);
      c2 = std::move(n2);
      if (refined == classes) {
        break;
      }
      classes = refined;
    }
    if (!same_histogram(c1, c2)) {
      return std::nullopt;
    }
    Matcher matcher(h1, h2, c1, c2);
    if (!matcher.search()) {
      return std::nullopt;
    }
    auto const& phi = matcher.map();
    if (!is_homomorphism(h1, h2, phi)) {
      return std::nullopt;
    }
    return phi;
  }

}  // namespace relsemi
