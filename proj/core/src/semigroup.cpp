#include "relsemi/semigroup.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "relsemi/error.hpp"

namespace relsemi {

  namespace {
    using index_type = AbstractSemigroup::index_type;

    std::vector<std::size_t> sorted_unique(std::span<std::size_t const> s) {
      std::vector<std::size_t> out(s.begin(), s.end());
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    void check_members(AbstractSemigroup const&     h,
                       std::span<std::size_t const> subset) {
      if (subset.empty()) {
        throw PreconditionError("subset must be nonempty");
      }
      for (auto x : subset) {
        if (x >= h.size()) {
          throw InputError("element index " + std::to_string(x)
                           + " out of range");
        }
      }
    }

    std::string fresh_name(std::vector<std::string> const& names,
                           std::string                     base) {
      while (std::find(names.begin(), names.end(), base) != names.end()) {
        base += "'";
      }
      return base;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // AbstractSemigroup
  ////////////////////////////////////////////////////////////////////////

  AbstractSemigroup
  AbstractSemigroup::validate(std::vector<std::string>               names,
                              std::vector<std::vector<std::size_t>> const& rows) {
    auto const              m = names.size();
    std::vector<index_type> table;
    table.reserve(m * m);
    if (rows.size() != m) {
      throw InputError("expected " + std::to_string(m) + " rows, got "
                       + std::to_string(rows.size()));
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (rows[i].size() != m) {
        throw InputError("row " + std::to_string(i) + " has "
                         + std::to_string(rows[i].size()) + " entries, expected "
                         + std::to_string(m));
      }
      for (auto v : rows[i]) {
        if (v >= m) {
          throw InputError("table entry " + std::to_string(v)
                           + " out of range in row " + std::to_string(i));
        }
        table.push_back(static_cast<index_type>(v));
      }
    }
    return validate(std::move(names), table);
  }

  AbstractSemigroup AbstractSemigroup::validate(std::vector<std::string>    names,
                                                std::span<index_type const> table) {
    auto const m = names.size();
    if (m == 0) {
      throw InputError("a semigroup must have at least one element");
    }
    if (table.size() != m * m) {
      throw InputError("table has " + std::to_string(table.size())
                       + " entries, expected " + std::to_string(m * m));
    }
    std::unordered_set<std::string> seen;
    for (auto const& n : names) {
      if (n.empty()) {
        throw InputError("element names must be nonempty");
      }
      if (!seen.insert(n).second) {
        throw InputError("duplicate element name '" + n + "'");
      }
    }
    for (std::size_t c = 0; c < table.size(); ++c) {
      if (table[c] >= m) {
        throw InputError("table entry " + std::to_string(table[c])
                         + " out of range at (" + std::to_string(c / m) + ", "
                         + std::to_string(c % m) + ")");
      }
    }
    auto at = [&](std::size_t i, std::size_t j) { return table[i * m + j]; };
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        auto const ij = at(i, j);
        for (std::size_t k = 0; k < m; ++k) {
          if (at(ij, k) != at(i, at(j, k))) {
            throw InputError("not associative: (" + names[i] + " * " + names[j]
                             + ") * " + names[k] + " != " + names[i] + " * ("
                             + names[j] + " * " + names[k] + ") at (i, j, k) = ("
                             + std::to_string(i) + ", " + std::to_string(j)
                             + ", " + std::to_string(k) + ")");
          }
        }
      }
    }
    return AbstractSemigroup(std::move(names),
                             std::vector<index_type>(table.begin(), table.end()));
  }

  std::optional<std::size_t>
  AbstractSemigroup::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - names_.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Special elements
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::size_t> identity(AbstractSemigroup const& h) {
    for (std::size_t e = 0; e < h.size(); ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < h.size() && ok; ++x) {
        ok = h.product(e, x) == x && h.product(x, e) == x;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  std::optional<std::size_t> zero(AbstractSemigroup const& h) {
    if (h.size() < 2) {
      return std::nullopt;
    }
    for (std::size_t z = 0; z < h.size(); ++z) {
      bool ok = true;
      for (std::size_t x = 0; x < h.size() && ok; ++x) {
        ok = h.product(z, x) == z && h.product(x, z) == z;
      }
      if (ok) {
        return z;
      }
    }
    return std::nullopt;
  }

  bool is_idempotent(AbstractSemigroup const& h, std::size_t x) {
    return h.product(x, x) == x;
  }

  std::vector<std::size_t> idempotents(AbstractSemigroup const& h) {
    std::vector<std::size_t> out;
    for (std::size_t x = 0; x < h.size(); ++x) {
      if (is_idempotent(h, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<std::size_t> nontrivial_idempotents(AbstractSemigroup const& h) {
    auto const               e = identity(h);
    auto const               z = zero(h);
    std::vector<std::size_t> out;
    for (auto x : idempotents(h)) {
      if (x != e && x != z) {
        out.push_back(x);
      }
    }
    return out;
  }

  AbstractSemigroup adjoin_identity(AbstractSemigroup const& h) {
    if (identity(h)) {
      return h;
    }
    auto const m     = h.size();
    auto       names = h.names();
    names.push_back(fresh_name(names, "1"));
    std::vector<index_type> table((m + 1) * (m + 1));
    for (std::size_t i = 0; i <= m; ++i) {
      for (std::size_t j = 0; j <= m; ++j) {
        std::size_t v;
        if (i == m) {
          v = j;
        } else if (j == m) {
          v = i;
        } else {
          v = h.product(i, j);
        }
        table[i * (m + 1) + j] = static_cast<index_type>(v);
      }
    }
    return AbstractSemigroup::validate(std::move(names), table);
  }

  AbstractSemigroup adjoin_zero(AbstractSemigroup const& h) {
    auto const m     = h.size();
    auto       names = h.names();
    names.push_back(fresh_name(names, "0"));
    std::vector<index_type> table((m + 1) * (m + 1), static_cast<index_type>(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * (m + 1) + j] = static_cast<index_type>(h.product(i, j));
      }
    }
    return AbstractSemigroup::validate(std::move(names), table);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsets
  ////////////////////////////////////////////////////////////////////////

  bool is_ideal(AbstractSemigroup const& h, std::span<std::size_t const> subset) {
    check_members(h, subset);
    std::vector<bool> in(h.size(), false);
    for (auto x : subset) {
      in[x] = true;
    }
    for (auto x : subset) {
      for (std::size_t y = 0; y < h.size(); ++y) {
        if (!in[h.product(x, y)] || !in[h.product(y, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_subsemigroup(AbstractSemigroup const&     h,
                       std::span<std::size_t const> subset) {
    check_members(h, subset);
    std::vector<bool> in(h.size(), false);
    for (auto x : subset) {
      in[x] = true;
    }
    for (auto x : subset) {
      for (auto y : subset) {
        if (!in[h.product(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  AbstractSemigroup restrict_to(AbstractSemigroup const&     h,
                                std::span<std::size_t const> subset) {
    if (!is_subsemigroup(h, subset)) {
      throw PreconditionError("subset is not closed under the operation");
    }
    auto const                     elems = sorted_unique(subset);
    std::vector<std::size_t>       pos(h.size(), 0);
    std::vector<std::string>       names;
    for (std::size_t a = 0; a < elems.size(); ++a) {
      pos[elems[a]] = a;
      names.push_back(h.name(elems[a]));
    }
    std::vector<index_type> table;
    table.reserve(elems.size() * elems.size());
    for (auto x : elems) {
      for (auto y : elems) {
        table.push_back(static_cast<index_type>(pos[h.product(x, y)]));
      }
    }
    return AbstractSemigroup::validate(std::move(names), table);
  }

  std::vector<std::size_t> generated_by(AbstractSemigroup const&     h,
                                        std::span<std::size_t const> gens) {
    std::vector<bool>        in(h.size(), false);
    std::vector<std::size_t> todo;
    for (auto g : gens) {
      if (g >= h.size()) {
        throw InputError("generator index out of range");
      }
      if (!in[g]) {
        in[g] = true;
        todo.push_back(g);
      }
    }
    std::vector<std::size_t> all = todo;
    while (!todo.empty()) {
      auto const x = todo.back();
      todo.pop_back();
      for (auto g : gens) {
        for (auto p : {h.product(x, g), h.product(g, x)}) {
          if (!in[p]) {
            in[p] = true;
            todo.push_back(p);
            all.push_back(p);
          }
        }
      }
    }
    std::sort(all.begin(), all.end());
    return all;
  }

  ////////////////////////////////////////////////////////////////////////
  // Band order
  ////////////////////////////////////////////////////////////////////////

  BandOrder band_order(AbstractSemigroup const& h, std::span<std::size_t const> e) {
    if (e.empty()) {
      throw PreconditionError("band_order needs a nonempty set of elements");
    }
    check_members(h, e);
    BandOrder order;
    order.elements = sorted_unique(e);
    auto const& el = order.elements;
    for (auto x : el) {
      if (!is_idempotent(h, x)) {
        throw PreconditionError("'" + h.name(x) + "' is not idempotent");
      }
    }
    if (!is_subsemigroup(h, el)) {
      throw PreconditionError("the elements are not closed under the operation");
    }
    for (auto x : el) {
      for (auto y : el) {
        if (h.product(x, y) != h.product(y, x)) {
          throw PreconditionError("'" + h.name(x) + "' and '" + h.name(y)
                                  + "' do not commute");
        }
      }
    }
    auto const k = el.size();
    order.leq.assign(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        // elements[a] <= elements[b] iff elements[b] * elements[a] = elements[b]
        order.leq[a][b] = h.product(el[b], el[a]) == el[b];
      }
    }
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t b = 0; b < k; ++b) {
        if (a == b || !order.leq[a][b]) {
          continue;
        }
        bool covered = true;
        for (std::size_t c = 0; c < k && covered; ++c) {
          if (c != a && c != b && order.leq[a][c] && order.leq[c][b]) {
            covered = false;
          }
        }
        if (covered) {
          order.covers.emplace_back(el[b], el[a]);
        }
      }
    }
    std::sort(order.covers.begin(), order.covers.end());
    return order;
  }

  std::string to_dot(AbstractSemigroup const& h, BandOrder const& order) {
    std::ostringstream out;
    out << "digraph hasse {\n";
    for (auto x : order.elements) {
      std::string label;
      for (char c : h.name(x)) {
        if (c == '"' || c == '\\') {
          label += '\\';
        }
        label += c;
      }
      out << "  n" << x << " [label=\"" << label << "\"];\n";
    }
    for (auto const& [g, s] : order.covers) {
      out << "  n" << g << " -> n" << s << ";\n";
    }
    out << "}\n";
    return out.str();
  }

  bool is_homomorphism(AbstractSemigroup const&     a,
                       AbstractSemigroup const&     b,
                       std::span<std::size_t const> map) {
    if (map.size() != a.size()) {
      return false;
    }
    for (auto v : map) {
      if (v >= b.size()) {
        return false;
      }
    }
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < a.size(); ++y) {
        if (map[a.product(x, y)] != b.product(map[x], map[y])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  AbstractSemigroup
  band_union_with_core(AbstractSemigroup const&              core,
                       std::vector<AbstractSemigroup> const& groups) {
    auto const theta = zero(core);
    if (!theta) {
      throw PreconditionError("the core must have a zero element");
    }
    std::vector<std::string> names = core.names();
    std::vector<std::size_t> offset{0};
    std::vector<std::size_t> part(core.size(), 0);
    for (std::size_t g = 0; g < groups.size(); ++g) {
      offset.push_back(names.size());
      for (auto const& n : groups[g].names()) {
        names.push_back(n);
        part.push_back(g + 1);
      }
    }
    auto const              m = names.size();
    std::vector<index_type> table(m * m, static_cast<index_type>(*theta));
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        if (part[x] != part[y]) {
          continue;
        }
        auto const  p   = part[x];
        auto const  off = offset[p];
        std::size_t v   = p == 0 ? core.product(x, y)
                                 : off + groups[p - 1].product(x - off, y - off);
        table[x * m + y] = static_cast<index_type>(v);
      }
    }
    return AbstractSemigroup::validate(std::move(names), table);
  }

  AbstractSemigroup identity_absorbing_union(AbstractSemigroup const& c,
                                             AbstractSemigroup const& s) {
    auto names = c.names();
    names.insert(names.end(), s.names().begin(), s.names().end());
    auto const              mc = c.size();
    auto const              m  = names.size();
    std::vector<index_type> table(m * m);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        std::size_t v;
        if (x < mc && y < mc) {
          v = c.product(x, y);
        } else if (x >= mc && y >= mc) {
          v = mc + s.product(x - mc, y - mc);
        } else if (x < mc) {
          v = x;
        } else {
          v = y;
        }
        table[x * m + y] = static_cast<index_type>(v);
      }
    }
    return AbstractSemigroup::validate(std::move(names), table);
  }

  AbstractSemigroup cyclic_group(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    }
    std::vector<index_type> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = static_cast<index_type>((i + j) % m);
      }
    }
    return AbstractSemigroup::validate(std::move(names), table);
  }

  AbstractSemigroup right_zero_semigroup(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back("r" + std::to_string(i));
    }
    std::vector<index_type> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = static_cast<index_type>(j);
      }
    }
    return AbstractSemigroup::validate(std::move(names), table);
  }

  AbstractSemigroup left_zero_semigroup(std::size_t m) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) {
      names.push_back("l" + std::to_string(i));
    }
    std::vector<index_type> table(m * m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        table[i * m + j] = static_cast<index_type>(i);
      }
    }
    return AbstractSemigroup::validate(std::move(names), table);
  }

  AbstractSemigroup null_band(std::size_t m) {
    std::vector<std::string> names{"0"};
    for (std::size_t i = 1; i <= m; ++i) {
      names.push_back("e" + std::to_string(i));
    }
    auto const              size = m + 1;
    std::vector<index_type> table(size * size, 0);
    for (std::size_t i = 1; i < size; ++i) {
      table[i * size + i] = static_cast<index_type>(i);
    }
    return AbstractSemigroup::validate(std::move(names), table);
  }

}  // namespace relsemi
