#include "relsemi/harness.hpp"

#include <chrono>

#include "relsemi/classify.hpp"
#include "relsemi/error.hpp"
#include "relsemi/fixtures.hpp"
#include "relsemi/generation.hpp"
#include "relsemi/partition.hpp"
#include "relsemi/represent.hpp"

namespace relsemi {

  namespace {
    struct Outcome {
      bool        passed = false;
      std::string detail;
    };

    class Runner {
     public:
      Runner(std::function<void(CheckResult const&)> const& sink) : sink_(sink) {}

      template <typename F>
      void check(std::string name, F&& body) {
        auto const  start = std::chrono::steady_clock::now();
        CheckResult r;
        r.name = std::move(name);
        try {
          auto o   = body();
          r.passed = o.passed;
          r.detail = std::move(o.detail);
        } catch (GuardError const& e) {
          r.detail = std::string("guard exceeded: ") + e.what();
        } catch (Error const& e) {
          r.detail = std::string("error: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                        .count();
        if (sink_) {
          sink_(r);
        }
        results_.push_back(std::move(r));
      }

      std::vector<CheckResult> take() {
        return std::move(results_);
      }

     private:
      std::function<void(CheckResult const&)> const& sink_;
      std::vector<CheckResult>                       results_;
    };

    Outcome expect_size(ProductKind kind, std::size_t k, std::size_t expected) {
      auto const got = from_partition(Partition::singletons(k), kind).size();
      return {got == expected, "got " + std::to_string(got) + ", expected "
                                   + std::to_string(expected)};
    }

    AbstractSemigroup abstract_of(ProductKind kind, std::size_t k) {
      return from_partition(Partition::singletons(k), kind).abstract();
    }

    std::string k_tag(std::size_t k) {
      return "k=" + std::to_string(k);
    }

    void sizes(Runner& run, SuiteOptions const& o) {
      run.check("size plain k=1", [] { return expect_size(ProductKind::plain, 1, 1); });
      for (std::size_t k = 2; k <= o.max_k; ++k) {
        run.check("size plain " + k_tag(k),
                  [k] { return expect_size(ProductKind::plain, k, k * k + 1); });
        run.check("size unit " + k_tag(k),
                  [k] { return expect_size(ProductKind::unit, k, k * k + 2); });
        run.check("size sym " + k_tag(k),
                  [k] { return expect_size(ProductKind::sym, k, 2 * k * k - k + 1); });
        // With two blocks the symmetrised unit product generates a group of
        // order 2; from three blocks on it adds R_P to the symmetrised closure.
        auto const sym_unit = k == 2 ? 2 : 2 * k * k - k + 2;
        run.check("size symunit " + k_tag(k), [k, sym_unit] {
          return expect_size(ProductKind::sym_unit, k, sym_unit);
        });
      }
    }

    // "{0,1}{2}"
    std::string blocks_tag(Partition const& p) {
      std::string out;
      for (auto const& b : p.blocks()) {
        out += '{';
        for (std::size_t i = 0; i < b.size(); ++i) {
          out += (i ? "," : "") + std::to_string(b[i]);
        }
        out += '}';
      }
      return out;
    }

    void lattice(Runner& run, SuiteOptions const&) {
      for (std::size_t n = 1; n <= 3; ++n) {
        for (auto const& p : enumerate_partitions(n, n)) {
          for (auto kind : all_product_kinds) {
            std::string name = "smallest " + std::string(to_string(kind)) + " n="
                               + std::to_string(n) + " P=" + blocks_tag(p);
            run.check(name, [&] {
              auto const r = verify_smallest(p, kind, 3);
              bool const same
                  = canonical_labeling(p, kind).base() == product(p, kind).base();
              return Outcome{r.verified && same,
                             std::to_string(r.partitions_examined) + " partitions, "
                                 + std::to_string(r.class_members) + " in class"
                                 + (r.verified ? "" : ": " + r.detail)
                                 + (same ? "" : "; canonical labeling differs")};
            });
          }
        }
      }
    }

    void iso(Runner& run, SuiteOptions const& o) {
      for (std::size_t k = 2; k <= o.max_k; ++k) {
        run.check("identity adjunction plain->unit " + k_tag(k), [k] {
          auto const a = adjoin_identity(abstract_of(ProductKind::plain, k));
          auto const b = abstract_of(ProductKind::unit, k);
          return Outcome{find_isomorphism(a, b).has_value(),
                         std::to_string(a.size()) + " elements"};
        });
      }
      run.check("symunit k=2 is a group of order 2", [] {
        auto const h = abstract_of(ProductKind::sym_unit, 2);
        auto const v = check_HS_unit(h);
        return Outcome{find_isomorphism(h, cyclic_group(2)).has_value() && !v.member,
                       "degenerate two-block case; HS_UNIT=" + std::string(v.member ? "YES" : "NO")};
      });
      for (std::size_t k = 3; k <= o.max_k; ++k) {
        run.check("identity adjunction sym->symunit " + k_tag(k), [k] {
          auto const a = adjoin_identity(abstract_of(ProductKind::sym, k));
          auto const b = abstract_of(ProductKind::sym_unit, k);
          return Outcome{find_isomorphism(a, b).has_value() && check_HS_unit(b).member,
                         std::to_string(a.size()) + " elements"};
        });
      }
    }

    Outcome model_round_trip(AbstractSemigroup const& h, ClassVerdict const& v) {
      if (!v.member || !v.model) {
        return {false, "not a member"};
      }
      auto const iso = find_isomorphism(h, v.model->closure.abstract());
      return {iso.has_value(), "model on |X|=" + std::to_string(v.model->p.ground_size())};
    }

    void h1(Runner& run, SuiteOptions const& o) {
      for (std::size_t k = 2; k <= o.max_k; ++k) {
        run.check("H1 plain closure " + k_tag(k), [k] {
          auto const h = abstract_of(ProductKind::plain, k);
          return model_round_trip(h, check_H1(h));
        });
        run.check("H1_UNIT unit closure " + k_tag(k), [k] {
          auto const h = abstract_of(ProductKind::unit, k);
          return model_round_trip(h, check_H1_unit(h));
        });
      }
      run.check("H1 rejects the group of order 2", [] {
        auto const v = check_H1(cyclic_group(2));
        return Outcome{!v.member && v.condition("ii1")->status == ConditionStatus::fail, {}};
      });
      run.check("H1 rejects a null band of two idempotents", [] {
        auto const v = check_H1(null_band(2));
        return Outcome{!v.member && v.condition("ii3")->status == ConditionStatus::fail, {}};
      });
    }

    void hs(Runner& run, SuiteOptions const& o) {
      for (std::size_t k = 2; k <= o.max_k; ++k) {
        run.check("HS sym closure " + k_tag(k), [k] {
          auto const h = abstract_of(ProductKind::sym, k);
          return model_round_trip(h, check_HS(h));
        });
      }
      run.check("identity-absorbing example fails only ii5", [] {
        auto const h = fixtures::identity_absorbing_example();
        auto const v = check_HS(h);
        bool       ok = !v.member;
        for (auto name : {"band", "ii1", "ii2", "ii3", "ii4"}) {
          ok = ok && v.condition(name)->status == ConditionStatus::pass;
        }
        auto const* ii5 = v.condition("ii5");
        auto const  w   = format_witness(h, ii5->witness);
        ok              = ok && ii5->status == ConditionStatus::fail && w == "(x2, xy+yx)";
        return Outcome{ok, "ii5 witness " + w};
      });
      run.check("band union with one group fails ii4", [] {
        auto const h
            = band_union_with_core(abstract_of(ProductKind::plain, 2), {cyclic_group(2)});
        auto const v = check_HS(h);
        return Outcome{!v.member && v.condition("ii4")->status == ConditionStatus::fail,
                       {}};
      });
    }

    Outcome expect_found(AbstractSemigroup const& h,
                         SearchOptions const&     so,
                         std::size_t              ground) {
      auto const r = search_d_transitive(h, so);
      if (!r.found()) {
        return {false, "exhausted after " + std::to_string(r.candidates_examined)};
      }
      bool const ok = r.witness->ground == ground && verify_witness(h, *r.witness);
      return {ok, "witness on |X|=" + std::to_string(r.witness->ground)};
    }

    Outcome expect_exhausted(AbstractSemigroup const& h, SearchOptions const& so) {
      auto const r = search_d_transitive(h, so);
      return {!r.found(), (r.found() ? std::string("unexpected witness") : "EXHAUSTED n<="
                                                                         + std::to_string(so.max_ground))
                              + ", " + std::to_string(r.candidates_examined)
                              + " candidates"};
    }

    void reps(Runner& run, SuiteOptions const& o) {
      SearchOptions so;
      so.threads = o.threads;
      so.max_ground = 2;
      run.check("search group of order 2", [&] {
        return expect_found(cyclic_group(2), so, 2);
      });
      for (std::size_t m = 2; m <= 3; ++m) {
        auto const tag = " order " + std::to_string(m);
        run.check("right zero construction" + tag, [m] {
          auto const h = right_zero_semigroup(m);
          return Outcome{static_cast<bool>(verify_witness(h, represent_right_zero(h))), {}};
        });
        run.check("left zero construction" + tag, [m] {
          auto const h = left_zero_semigroup(m);
          return Outcome{static_cast<bool>(verify_witness(h, represent_left_zero(h))), {}};
        });
        run.check("search right zero" + tag, [&, m] {
          auto s       = so;
          s.max_ground = m;
          return expect_found(right_zero_semigroup(m), s, m);
        });
        run.check("search left zero" + tag, [&, m] {
          auto s       = so;
          s.max_ground = m;
          return expect_found(left_zero_semigroup(m), s, m);
        });
      }
      run.check("class member witnesses", [] {
        bool ok = true;
        ok      = ok
             && verify_witness(abstract_of(ProductKind::plain, 2),
                               represent_class_member(abstract_of(ProductKind::plain, 2),
                                                      SemigroupClass::h1));
        ok = ok
             && verify_witness(abstract_of(ProductKind::unit, 2),
                               represent_class_member(abstract_of(ProductKind::unit, 2),
                                                      SemigroupClass::h1_unit));
        ok = ok
             && verify_witness(abstract_of(ProductKind::sym, 2),
                               represent_class_member(abstract_of(ProductKind::sym, 2),
                                                      SemigroupClass::hs));
        ok = ok
             && verify_witness(abstract_of(ProductKind::sym_unit, 3),
                               represent_class_member(abstract_of(ProductKind::sym_unit, 3),
                                                      SemigroupClass::hs_unit));
        return Outcome{ok, {}};
      });
      run.check("search delta/nabla closure on 3 points", [&] {
        auto       s  = so;
        s.max_ground  = o.max_ground;
        auto const q  = LabeledPartition::from_relations(
            3, {BinaryRelation::diagonal(3), BinaryRelation::diagonal(3).complement()});
        return expect_exhausted(from_blocks(q).abstract(), s);
      });
      run.check("search group of order 2 with zero", [&] {
        auto s       = so;
        s.max_ground = std::min<std::size_t>(o.max_ground, 3);
        return expect_exhausted(adjoin_zero(cyclic_group(2)), s);
      });
      run.check("search null band of three idempotents", [&] {
        auto s       = so;
        s.max_ground = std::min<std::size_t>(o.max_ground, 3);
        return expect_exhausted(null_band(3), s);
      });
    }
  }  // namespace

  std::string_view to_string(Suite s) noexcept {
    switch (s) {
      case Suite::sizes:
        return "sizes";
      case Suite::lattice:
        return "lattice";
      case Suite::h1:
        return "h1";
      case Suite::hs:
        return "hs";
      case Suite::iso:
        return "iso";
      case Suite::reps:
        return "reps";
      case Suite::all:
        return "all";
    }
    return "?";
  }

  std::optional<Suite> parse_suite(std::string_view text) {
    for (auto s : {Suite::sizes, Suite::lattice, Suite::h1, Suite::hs, Suite::iso,
                   Suite::reps, Suite::all}) {
      if (text == to_string(s)) {
        return s;
      }
    }
    return std::nullopt;
  }

  std::vector<CheckResult> run_suite(Suite                                          suite,
                                     SuiteOptions const&                            options,
                                     std::function<void(CheckResult const&)> const& on_result) {
    Runner run(on_result);
    auto   wants = [&](Suite s) { return suite == Suite::all || suite == s; };
    if (wants(Suite::sizes)) {
      sizes(run, options);
    }
    if (wants(Suite::lattice)) {
      lattice(run, options);
    }
    if (wants(Suite::iso)) {
      iso(run, options);
    }
    if (wants(Suite::h1)) {
      h1(run, options);
    }
    if (wants(Suite::hs)) {
      hs(run, options);
    }
    if (wants(Suite::reps)) {
      reps(run, options);
    }
    return run.take();
  }

}  // namespace relsemi
