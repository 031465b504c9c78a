#include "relsemi/classify.hpp"

#include <algorithm>

#include "relsemi/error.hpp"

namespace relsemi {

  namespace {
    using Witness = std::vector<std::size_t>;

    ConditionReport pass(std::string name) {
      return {std::move(name), ConditionStatus::pass, {}, {}};
    }
    ConditionReport fail(std::string name, Witness w, std::string note = {}) {
      return {std::move(name), ConditionStatus::fail, std::move(w), std::move(note)};
    }
    ConditionReport skipped(std::string name, std::string note = {}) {
      return {std::move(name), ConditionStatus::skipped, {}, std::move(note)};
    }

    bool all_pass(std::vector<ConditionReport> const& cs) {
      return std::all_of(cs.begin(), cs.end(), [](auto const& c) {
        return c.status == ConditionStatus::pass;
      });
    }

    std::size_t triple(AbstractSemigroup const& h,
                       std::size_t              l,
                       std::size_t              a,
                       std::size_t              r) {
      return h.product(h.product(l, a), r);
    }

    std::vector<std::size_t> complement_of(std::size_t m, std::size_t x) {
      std::vector<std::size_t> out;
      for (std::size_t y = 0; y < m; ++y) {
        if (y != x) {
          out.push_back(y);
        }
      }
      return out;
    }

    // Remaps witnesses of a verdict on a subtable to indices of h.
    std::vector<ConditionReport> lift(std::vector<ConditionReport>     cs,
                                      std::vector<std::size_t> const& to_h) {
      for (auto& c : cs) {
        for (auto& w : c.witness) {
          w = to_h[w];
        }
      }
      return cs;
    }

    std::vector<ConditionReport> h1_conditions(AbstractSemigroup const& h) {
      std::vector<ConditionReport> cs;
      auto const                   m = h.size();
      if (m == 1) {
        for (auto name : {"ii1", "ii2", "ii3", "ii4"}) {
          cs.push_back(pass(name));
        }
        return cs;
      }
      auto const theta = zero(h);
      if (!theta) {
        // Element 0 is not a zero; name the first element showing it.
        for (std::size_t y = 0; y < m; ++y) {
          if (h.product(0, y) != 0 || h.product(y, 0) != 0) {
            cs.push_back(fail("ii1", {0, y}, "no zero element"));
            break;
          }
        }
        for (auto name : {"ii2", "ii3", "ii4"}) {
          cs.push_back(skipped(name, "needs a zero element"));
        }
        return cs;
      }
      cs.push_back(pass("ii1"));

      auto const e = idempotents(h);
      cs.push_back(pass("ii2"));
      for (auto x : e) {
        auto it = std::find_if(e.begin(), e.end(), [&](auto y) {
          return x != y && h.product(x, y) != *theta;
        });
        if (it != e.end()) {
          cs.back() = fail("ii2", {x, *it});
          break;
        }
      }

      auto const n = nontrivial_idempotents(h);
      cs.push_back(pass("ii3"));
      for (auto l : n) {
        bool failed = false;
        for (auto r : n) {
          std::size_t count = 0;
          for (std::size_t a = 0; a < m; ++a) {
            count += a != *theta && triple(h, l, a, r) == a;
          }
          if (count != 1) {
            cs.back() = fail("ii3", {l, r},
                             std::to_string(count) + " nonzero solutions");
            failed    = true;
            break;
          }
        }
        if (failed) {
          break;
        }
      }

      cs.push_back(pass("ii4"));
      for (std::size_t a = 0; a < m; ++a) {
        if (a == *theta) {
          continue;
        }
        std::size_t count = 0;
        for (auto l : n) {
          for (auto r : n) {
            count += triple(h, l, a, r) == a;
          }
        }
        if (count != 1) {
          cs.back() = fail("ii4", {a}, std::to_string(count) + " idempotent pairs");
          break;
        }
      }
      return cs;
    }

    // The unique pair of nontrivial idempotents (l, r) with a = l * a * r.
    std::pair<std::size_t, std::size_t>
    idempotent_frame(AbstractSemigroup const&        h,
                     std::vector<std::size_t> const& n,
                     std::size_t                     a) {
      for (auto l : n) {
        for (auto r : n) {
          if (triple(h, l, a, r) == a) {
            return {l, r};
          }
        }
      }
      throw Error("internal error: element without an idempotent frame");
    }

    std::size_t position(std::vector<std::size_t> const& v, std::size_t x) {
      return static_cast<std::size_t>(std::find(v.begin(), v.end(), x) - v.begin());
    }

    // Looks each relation up in the closure and checks the result is an
    // isomorphism of h onto it.
    CanonicalModel finish_model(AbstractSemigroup const&           h,
                                Partition                          p,
                                ProductKind                        kind,
                                std::vector<BinaryRelation> const& image) {
      auto closure = from_partition(p, kind);
      if (closure.size() != h.size()) {
        throw Error("internal error: canonical model has "
                    + std::to_string(closure.size()) + " elements, expected "
                    + std::to_string(h.size()));
      }
      std::vector<std::size_t> iso;
      std::vector<bool>        hit(closure.size(), false);
      for (auto const& r : image) {
        auto i = closure.index_of(r);
        if (!i || hit[*i]) {
          throw Error("internal error: canonical model map is not a bijection");
        }
        hit[*i] = true;
        iso.push_back(*i);
      }
      if (!is_homomorphism(h, closure.abstract(), iso)) {
        throw Error("internal error: canonical model map is not a homomorphism");
      }
      return {std::move(p), kind, std::move(closure), std::move(iso)};
    }

    // Images in B_X of the canonical H1 model, over the given idempotents.
    std::vector<BinaryRelation> h1_images(AbstractSemigroup const&        h,
                                          std::vector<std::size_t> const& n,
                                          std::size_t                     ground) {
      std::vector<BinaryRelation> image;
      auto const                  theta = zero(h);
      for (std::size_t a = 0; a < h.size(); ++a) {
        BinaryRelation r(ground);
        if (h.size() == 1) {
          r = BinaryRelation::full(ground);
        } else if (a != theta) {
          auto const [l, rr] = idempotent_frame(h, n, a);
          r.insert(position(n, l), position(n, rr));
        }
        image.push_back(r);
      }
      return image;
    }

    CanonicalModel build_H1_model(AbstractSemigroup const& h) {
      auto const n      = nontrivial_idempotents(h);
      auto const ground = h.size() == 1 ? std::size_t{1} : n.size();
      return finish_model(h, Partition::singletons(ground), ProductKind::plain,
                          h1_images(h, n, ground));
    }

    struct BandAttempt {
      std::optional<BandDecomposition> decomposition;
      Witness                          witness;
      std::string                      reason;
    };

    BandAttempt try_decompose(AbstractSemigroup const& h) {
      auto const        m = h.size();
      std::vector<bool> claimed(m, false);
      BandAttempt       out;
      BandDecomposition d;
      for (std::size_t g = 0; g < m; ++g) {
        auto const g2 = h.product(g, g);
        if (g2 == g || !is_idempotent(h, g2) || h.product(g2, g) != g) {
          continue;
        }
        if (claimed[g] || claimed[g2]) {
          auto other = std::find_if(d.groups.begin(), d.groups.end(), [&](auto& grp) {
            return grp[1] == g2;
          });
          out.witness = {(*other)[0], g};
          out.reason  = "candidate groups overlap";
          return out;
        }
        claimed[g] = claimed[g2] = true;
        d.groups.push_back({g, g2});
      }
      if (d.groups.empty()) {
        out.reason = "no non-idempotent g with g^3 = g and g^2 idempotent";
        return out;
      }
      for (std::size_t x = 0; x < m; ++x) {
        if (!claimed[x]) {
          d.core.push_back(x);
        }
      }
      if (d.core.empty()) {
        out.reason = "the core would be empty";
        return out;
      }
      for (auto c : d.core) {
        for (std::size_t y = 0; y < m; ++y) {
          for (auto p : {h.product(c, y), h.product(y, c)}) {
            if (claimed[p]) {
              out.witness = {c, y};
              out.reason  = "the core is not an ideal";
              return out;
            }
          }
        }
      }
      for (auto const& grp : d.groups) {
        if (!is_subsemigroup(h, grp)) {
          out.witness = {grp[0]};
          out.reason  = "a candidate group is not closed";
          return out;
        }
      }
      for (std::size_t a = 0; a < d.groups.size(); ++a) {
        for (std::size_t b = 0; b < d.groups.size(); ++b) {
          if (a == b) {
            continue;
          }
          for (auto x : d.groups[a]) {
            for (auto y : d.groups[b]) {
              if (claimed[h.product(x, y)]) {
                out.witness = {x, y};
                out.reason  = "a product across groups leaves the core";
                return out;
              }
            }
          }
        }
      }
      out.decomposition = std::move(d);
      return out;
    }

    // Nontrivial idempotents of the core subsemigroup, as indices of h.
    std::vector<std::size_t> core_idempotents(AbstractSemigroup const&  h,
                                              BandDecomposition const& d) {
      auto const               sub = restrict_to(h, d.core);
      std::vector<std::size_t> out;
      for (auto i : nontrivial_idempotents(sub)) {
        out.push_back(d.core[i]);
      }
      return out;
    }

    std::vector<ConditionReport> hs_conditions(AbstractSemigroup const& h,
                                               BandDecomposition const& d) {
      std::vector<ConditionReport> cs;
      auto const                   m = h.size();
      std::vector<bool>            in_core(m, false);
      for (auto c : d.core) {
        in_core[c] = true;
      }

      auto core_verdict = lift(h1_conditions(restrict_to(h, d.core)), d.core);
      if (all_pass(core_verdict)) {
        cs.push_back(pass("ii1"));
      } else {
        auto first = *std::find_if(core_verdict.begin(), core_verdict.end(),
                                   [](auto const& c) {
                                     return c.status != ConditionStatus::pass;
                                   });
        cs.push_back(fail("ii1", first.witness,
                          "core fails " + first.name
                              + (first.note.empty() ? "" : ": " + first.note)));
      }

      cs.push_back(pass("ii2"));
      for (auto const& grp : d.groups) {
        auto const g = grp[0], e = grp[1];
        if (h.product(e, g) != g || h.product(g, e) != g) {
          cs.back() = fail("ii2", {g}, "g^2 is not an identity of {g, g^2}");
          break;
        }
      }

      auto const e = idempotents(h);
      cs.push_back(pass("ii3"));
      for (auto x : e) {
        bool failed = false;
        for (auto y : e) {
          auto const xy = h.product(x, y);
          if (!is_idempotent(h, xy) || xy != h.product(y, x)) {
            cs.back() = fail("ii3", {x, y});
            failed    = true;
            break;
          }
        }
        if (failed) {
          break;
        }
      }

      auto const nc = core_idempotents(h, d);
      std::vector<std::size_t> outer;  // E minus C
      for (auto x : e) {
        if (!in_core[x]) {
          outer.push_back(x);
        }
      }
      auto fixes = [&](std::size_t e1, std::size_t u) { return h.product(e1, u) == e1; };
      cs.push_back(pass("ii4"));
      if (nc.size() == 1) {
        cs.back().note = "core has a single nontrivial idempotent";
      }
      [&] {
        for (std::size_t a = 0; a < nc.size(); ++a) {
          for (std::size_t b = a + 1; b < nc.size(); ++b) {
            auto const count = std::count_if(outer.begin(), outer.end(), [&](auto u) {
              return fixes(nc[a], u) && fixes(nc[b], u);
            });
            if (count != 1) {
              cs.back() = fail("ii4", {nc[a], nc[b]},
                               std::to_string(count) + " idempotents outside the core");
              return;
            }
          }
        }
        for (auto u : outer) {
          auto const count
              = std::count_if(nc.begin(), nc.end(), [&](auto x) { return fixes(x, u); });
          if (count != 2) {
            cs.back() = fail("ii4", {u},
                             std::to_string(count) + " core idempotents fixed");
            return;
          }
        }
      }();

      auto const theta = d.core[*zero(restrict_to(h, d.core))];
      cs.push_back(pass("ii5"));
      [&] {
        for (auto x : e) {
          if (!in_core[x]) {
            continue;
          }
          for (std::size_t y = 0; y < m; ++y) {
            if (is_idempotent(h, y)) {
              continue;
            }
            auto const xy = h.product(x, y);
            if ((xy == theta) != is_idempotent(h, xy)) {
              cs.back() = fail("ii5", {x, y}, "x*y");
              return;
            }
            auto const yx = h.product(y, x);
            if ((yx == theta) != is_idempotent(h, yx)) {
              cs.back() = fail("ii5", {x, y}, "y*x");
              return;
            }
          }
        }
      }();
      return cs;
    }

    CanonicalModel build_HS_model(AbstractSemigroup const& h,
                                  BandDecomposition const& d) {
      auto const        nc    = core_idempotents(h, d);
      auto const        theta = d.core[*zero(restrict_to(h, d.core))];
      auto const        k     = nc.size();
      std::vector<bool> in_core(h.size(), false);
      for (auto c : d.core) {
        in_core[c] = true;
      }
      // The two core idempotents an outer idempotent acts as identity on.
      auto frame_of = [&](std::size_t u) {
        std::vector<std::size_t> ij;
        for (std::size_t t = 0; t < k; ++t) {
          if (h.product(nc[t], u) == nc[t]) {
            ij.push_back(t);
          }
        }
        return ij;
      };
      std::vector<BinaryRelation> image;
      for (std::size_t x = 0; x < h.size(); ++x) {
        BinaryRelation r(k);
        if (in_core[x]) {
          if (x != theta) {
            auto const [l, rr] = idempotent_frame(h, nc, x);
            r.insert(position(nc, l), position(nc, rr));
          }
        } else if (is_idempotent(h, x)) {
          for (auto t : frame_of(x)) {
            r.insert(t, t);
          }
        } else {
          auto const ij = frame_of(h.product(x, x));
          r.insert(ij[0], ij[1]);
          r.insert(ij[1], ij[0]);
        }
        image.push_back(r);
      }
      return finish_model(h, Partition::singletons(k), ProductKind::sym, image);
    }

    // Shared shape of the two unit checks.
    template <typename Check, typename Build>
    ClassVerdict unit_verdict(AbstractSemigroup const& h,
                              Check                    check,
                              Build                    build,
                              ProductKind              unit_kind) {
      ClassVerdict v;
      auto const   e = identity(h);
      if (!e) {
        v.conditions.push_back(fail("identity", {}, "no identity element"));
        return v;
      }
      v.conditions.push_back(pass("identity"));
      auto whole = check(h);
      if (whole.member) {
        v.member = true;
        v.model  = std::move(whole.model);
        v.note   = "already in the class with an identity";
        for (auto& c : whole.conditions) {
          v.conditions.push_back(std::move(c));
        }
        return v;
      }
      auto const rest = complement_of(h.size(), *e);
      if (rest.empty()) {
        v.conditions.push_back(fail("closed", {*e}, "nothing besides the identity"));
        return v;
      }
      for (auto x : rest) {
        for (auto y : rest) {
          if (h.product(x, y) == *e) {
            v.conditions.push_back(
                fail("closed", {x, y}, "product of non-identity elements is the identity"));
            return v;
          }
        }
      }
      v.conditions.push_back(pass("closed"));
      auto const g = restrict_to(h, rest);
      if (auto ge = identity(g)) {
        v.conditions.push_back(fail("proper", {rest[*ge]},
                                    "removing the identity leaves another identity"));
        return v;
      }
      v.conditions.push_back(pass("proper"));
      auto sub = check(g);
      for (auto& c : lift(std::move(sub.conditions), rest)) {
        v.conditions.push_back(std::move(c));
      }
      if (!sub.member) {
        return v;
      }
      v.member          = true;
      auto const  inner = build(g);
      auto const& p     = inner.p;
      std::vector<BinaryRelation> image;
      for (std::size_t x = 0, t = 0; x < h.size(); ++x) {
        if (x == *e) {
          image.push_back(to_equivalence(p));
        } else {
          image.push_back(inner.closure.element(inner.iso[t++]));
        }
      }
      v.model = finish_model(h, p, unit_kind, image);
      return v;
    }
  }  // namespace

  std::string_view to_string(ConditionStatus s) noexcept {
    switch (s) {
      case ConditionStatus::pass:
        return "PASS";
      case ConditionStatus::fail:
        return "FAIL";
      case ConditionStatus::skipped:
        return "SKIP";
    }
    return "?";
  }

  ConditionReport const* ClassVerdict::condition(std::string_view name) const {
    for (auto const& c : conditions) {
      if (c.name == name) {
        return &c;
      }
    }
    return nullptr;
  }

  std::string format_witness(AbstractSemigroup const&        h,
                             std::vector<std::size_t> const& witness) {
    std::string out = "(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      out += (i ? ", " : "") + h.name(witness[i]);
    }
    return out + ")";
  }

  ClassVerdict check_H1(AbstractSemigroup const& h) {
    ClassVerdict v;
    v.conditions = h1_conditions(h);
    v.member     = all_pass(v.conditions);
    if (v.member) {
      v.model = build_H1_model(h);
    }
    return v;
  }

  CanonicalModel canonical_H1_model(AbstractSemigroup const& h) {
    if (!all_pass(h1_conditions(h))) {
      throw PreconditionError("the semigroup is not in H1");
    }
    return build_H1_model(h);
  }

  std::optional<BandDecomposition> decompose_band_with_core(AbstractSemigroup const& h) {
    return try_decompose(h).decomposition;
  }

  ClassVerdict check_HS(AbstractSemigroup const& h) {
    ClassVerdict v;
    auto         attempt = try_decompose(h);
    if (!attempt.decomposition) {
      v.conditions.push_back(fail("band", attempt.witness, attempt.reason));
      for (auto name : {"ii1", "ii2", "ii3", "ii4", "ii5"}) {
        v.conditions.push_back(skipped(name, "no band decomposition"));
      }
      return v;
    }
    v.conditions.push_back(pass("band"));
    for (auto& c : hs_conditions(h, *attempt.decomposition)) {
      v.conditions.push_back(std::move(c));
    }
    v.member = all_pass(v.conditions);
    if (v.member) {
      v.model = build_HS_model(h, *attempt.decomposition);
    }
    return v;
  }

  CanonicalModel canonical_HS_model(AbstractSemigroup const& h) {
    auto attempt = try_decompose(h);
    if (!attempt.decomposition || !all_pass(hs_conditions(h, *attempt.decomposition))) {
      throw PreconditionError("the semigroup is not in HS");
    }
    return build_HS_model(h, *attempt.decomposition);
  }

  ClassVerdict check_H1_unit(AbstractSemigroup const& h) {
    return unit_verdict(h, check_H1, canonical_H1_model, ProductKind::unit);
  }

  ClassVerdict check_HS_unit(AbstractSemigroup const& h) {
    auto v = unit_verdict(h, check_HS, canonical_HS_model, ProductKind::sym_unit);
    if (!v.member && h.size() == 2 && identity(h)
        && find_isomorphism(h, cyclic_group(2))) {
      v.note = "group of order 2: the two-block degenerate case, not an "
               "identity-adjoined HS member";
    }
    return v;
  }

}  // namespace relsemi
