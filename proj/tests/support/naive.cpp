#include "naive.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace naive {

  Relation compose(Relation const& r, Relation const& s) {
    Relation out;
    for (auto const& [x, y] : r) {
      for (auto const& [y2, z] : s) {
        if (y == y2) {
          out.emplace(x, z);
        }
      }
    }
    return out;
  }

  std::optional<std::set<Relation>> closure(std::vector<Relation> const& gens,
                                            std::size_t                  cap) {
    std::set<Relation>    seen(gens.begin(), gens.end());
    std::vector<Relation> frontier(seen.begin(), seen.end());
    if (seen.size() > cap) {
      return std::nullopt;
    }
    while (!frontier.empty()) {
      std::vector<Relation> next;
      for (auto const& a : frontier) {
        for (auto const& g : gens) {
          auto c = compose(a, g);
          if (seen.insert(c).second) {
            if (seen.size() > cap) {
              return std::nullopt;
            }
            next.push_back(std::move(c));
          }
        }
      }
      frontier = std::move(next);
    }
    return seen;
  }

  std::vector<Relation> product_blocks(std::vector<std::vector<std::size_t>> const& blocks,
                                       int kind) {
    auto cross = [](std::vector<std::size_t> const& a, std::vector<std::size_t> const& b) {
      Relation r;
      for (auto x : a) {
        for (auto y : b) {
          r.emplace(x, y);
        }
      }
      return r;
    };
    auto unite = [](Relation a, Relation const& b) {
      a.insert(b.begin(), b.end());
      return a;
    };
    bool const with_unit = kind == 1 || kind == 3;
    bool const symmetric = kind == 2 || kind == 3;
    auto const k         = blocks.size();

    std::vector<Relation> out;
    if (with_unit) {
      Relation rp;
      for (auto const& b : blocks) {
        rp = unite(rp, cross(b, b));
      }
      out.push_back(rp);
    }
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = symmetric ? i : 0; j < k; ++j) {
        if (with_unit && i == j) {
          continue;
        }
        auto r = cross(blocks[i], blocks[j]);
        if (symmetric) {
          r = unite(r, cross(blocks[j], blocks[i]));
        }
        out.push_back(r);
      }
    }
    return out;
  }

  Hasse idempotent_hasse(std::set<Relation> const& elements) {
    std::vector<Relation> e;
    for (auto const& r : elements) {
      if (compose(r, r) == r) {
        e.push_back(r);
      }
    }
    auto const m   = e.size();
    auto       leq = [&](std::size_t a, std::size_t b) {
      return compose(e[a], e[b]) == e[a] && compose(e[b], e[a]) == e[a];
    };
    Hasse h;
    h.nodes = m;
    for (std::size_t s = 0; s < m; ++s) {
      for (std::size_t g = 0; g < m; ++g) {
        if (s == g || !leq(s, g)) {
          continue;
        }
        bool between = false;
        for (std::size_t t = 0; t < m && !between; ++t) {
          between = t != s && t != g && leq(s, t) && leq(t, g);
        }
        h.edges += !between;
      }
    }
    return h;
  }

  bool is_associative(Table const& t) {
    auto const m = t.size();
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = 0; c < m; ++c) {
          if (t[t[a][b]][c] != t[a][t[b][c]]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    constexpr std::size_t unset = static_cast<std::size_t>(-1);

    // Associativity over the triples whose four products are all known.
    bool consistent(Table const& t) {
      auto const m = t.size();
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          auto const ab = t[a][b];
          if (ab == unset) {
            continue;
          }
          for (std::size_t c = 0; c < m; ++c) {
            auto const bc = t[b][c];
            if (bc == unset) {
              continue;
            }
            auto const l = t[ab][c], r = t[a][bc];
            if (l != unset && r != unset && l != r) {
              return false;
            }
          }
        }
      }
      return true;
    }

    void fill(Table& t, std::size_t cell, std::vector<Table>& out) {
      auto const m = t.size();
      if (cell == m * m) {
        out.push_back(t);
        return;
      }
      auto& slot = t[cell / m][cell % m];
      for (std::size_t v = 0; v < m; ++v) {
        slot = v;
        if (consistent(t)) {
          fill(t, cell + 1, out);
        }
      }
      slot = unset;
    }

    Table relabel(Table const& t, std::vector<std::size_t> const& perm) {
      auto const m = t.size();
      Table      out(m, std::vector<std::size_t>(m));
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
          out[perm[a]][perm[b]] = perm[t[a][b]];
        }
      }
      return out;
    }

    Table canonical(Table const& t) {
      std::vector<std::size_t> perm(t.size());
      std::iota(perm.begin(), perm.end(), 0);
      Table best = t;
      do {
        best = std::min(best, relabel(t, perm));
      } while (std::next_permutation(perm.begin(), perm.end()));
      return best;
    }

    bool is_iso(Table const& a, Table const& b, std::vector<std::size_t> const& perm) {
      auto const m = a.size();
      for (std::size_t x = 0; x < m; ++x) {
        for (std::size_t y = 0; y < m; ++y) {
          if (perm[a[x][y]] != b[perm[x]][perm[y]]) {
            return false;
          }
        }
      }
      return true;
    }
  }  // namespace

  std::vector<Table> semigroups_up_to_iso(std::size_t max_order) {
    std::vector<Table> out;
    for (std::size_t m = 1; m <= max_order; ++m) {
      Table              t(m, std::vector<std::size_t>(m, unset));
      std::vector<Table> labelled;
      fill(t, 0, labelled);
      std::set<Table> classes;
      for (auto const& l : labelled) {
        classes.insert(canonical(l));
      }
      out.insert(out.end(), classes.begin(), classes.end());
    }
    return out;
  }

  std::optional<std::size_t> zero_of(Table const& t) {
    auto const m = t.size();
    if (m < 2) {
      return std::nullopt;
    }
    for (std::size_t z = 0; z < m; ++z) {
      bool ok = true;
      for (std::size_t x = 0; x < m && ok; ++x) {
        ok = t[z][x] == z && t[x][z] == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  std::vector<std::vector<std::size_t>> set_partitions(std::size_t m) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              rgs(m, 0);
    auto rec = [&](auto& self, std::size_t i, std::size_t used) -> void {
      if (i == m) {
        out.push_back(rgs);
        return;
      }
      for (std::size_t v = 0; v <= used && v < m; ++v) {
        rgs[i] = v;
        self(self, i + 1, std::max(used, v + 1));
      }
    };
    if (m == 0) {
      return {{}};
    }
    rgs[0] = 0;
    rec(rec, 1, 1);
    return out;
  }

  RepresentationOracle::RepresentationOracle(std::size_t max_n, std::size_t max_order) {
    std::set<std::tuple<std::size_t, Table, std::optional<std::size_t>>> seen;
    for (std::size_t n = 1; n <= max_n; ++n) {
      for (auto const& rgs : set_partitions(n * n)) {
        std::map<std::size_t, Relation> blocks;
        for (std::size_t c = 0; c < rgs.size(); ++c) {
          blocks[rgs[c]].emplace(c / n, c % n);
        }
        std::vector<Relation> gens;
        for (auto& [b, r] : blocks) {
          gens.push_back(std::move(r));
        }
        auto const elements = closure(gens, max_order);
        if (!elements) {
          continue;
        }
        std::vector<Relation> list(elements->begin(), elements->end());
        auto const            m = list.size();
        Closure               c{n, Table(m, std::vector<std::size_t>(m)), std::nullopt};
        for (std::size_t a = 0; a < m; ++a) {
          if (list[a].empty()) {
            c.empty = a;
          }
          for (std::size_t b = 0; b < m; ++b) {
            auto const r = compose(list[a], list[b]);
            c.table[a][b]
                = static_cast<std::size_t>(std::lower_bound(list.begin(), list.end(), r)
                                           - list.begin());
          }
        }
        if (seen.emplace(n, c.table, c.empty).second) {
          closures_.push_back(std::move(c));
        }
      }
    }
  }

  std::optional<std::size_t> RepresentationOracle::least_ground(Table const& t) const {
    auto const m = t.size();
    auto const z = zero_of(t);
    for (auto const& c : closures_) {
      if (c.table.size() != m) {
        continue;
      }
      std::vector<std::size_t> perm(m);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        if (z && perm[*z] != c.empty) {
          continue;
        }
        if (is_iso(t, c.table, perm)) {
          return c.ground;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return std::nullopt;
  }

}  // namespace naive
