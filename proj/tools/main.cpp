// relsemi: command-line front end.
//
// Exit codes: 0 success or positive verdict, 1 negative verdict or search
// exhausted, 2 input or format error, 3 resource guard exceeded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "relsemi/relsemi.hpp"

namespace fs = std::filesystem;
using namespace relsemi;

namespace {

  enum Exit { kOk = 0, kNegative = 1, kInput = 2, kGuard = 3 };

  struct Globals {
    std::uint64_t seed    = 0;
    std::size_t   threads = 1;
    bool          quiet   = false;
  };

  ProductKind kind_from(std::string const& text) {
    auto k = parse_product_kind(text);
    if (!k) {
      throw InputError("unknown product kind '" + text
                       + "' (plain, unit, sym, symunit)");
    }
    return *k;
  }

  // Writes to the file, or to stdout when the path is empty.
  void emit(std::string const& path, std::string const& text) {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) {
      throw InputError(path + ": cannot write");
    }
    out << text;
  }

  //////////////////////////////////////////////////////////////////////////
  // gen
  //////////////////////////////////////////////////////////////////////////

  struct GenArgs {
    std::string              partition;
    std::string              kind = "plain";
    std::vector<std::string> relations;
    std::string              out;
    std::string              elements_dir;
    std::size_t              cap = default_element_cap;
  };

  int run_gen(GenArgs const& a, Globals const& g) {
    if (a.partition.empty() == a.relations.empty()) {
      throw InputError("give either --partition or --relations");
    }
    auto s = [&] {
      if (!a.partition.empty()) {
        return from_partition(load_partition(a.partition), kind_from(a.kind), a.cap);
      }
      std::vector<BinaryRelation> gens;
      std::vector<std::string>    labels;
      for (auto const& f : a.relations) {
        gens.push_back(load_relation(f));
        labels.push_back(fs::path(f).stem().string());
      }
      return generate(gens, labels, a.cap);
    }();
    auto const h = s.abstract();
    emit(a.out, to_text(h));
    if (!a.elements_dir.empty()) {
      fs::create_directories(a.elements_dir);
      for (std::size_t i = 0; i < s.size(); ++i) {
        std::ofstream out(fs::path(a.elements_dir) / ("e" + std::to_string(i) + ".rel"));
        out << "# name: " << h.name(i) << '\n';
        write_relation(out, s.element(i));
      }
    }
    if (!g.quiet && !a.out.empty()) {
      std::cerr << h.size() << " elements\n";
    }
    return kOk;
  }

  //////////////////////////////////////////////////////////////////////////
  // classify
  //////////////////////////////////////////////////////////////////////////

  void print_verdict(AbstractSemigroup const& h,
                     std::string const&       cls,
                     ClassVerdict const&      v,
                     bool                     quiet) {
    if (!quiet) {
      std::cout << '[' << cls << "]\n";
      for (auto const& c : v.conditions) {
        std::cout << c.name << '=' << to_string(c.status);
        if (c.status == ConditionStatus::fail && !c.witness.empty()) {
          std::cout << " witness=" << format_witness(h, c.witness);
        }
        if (!c.note.empty()) {
          std::cout << " note=\"" << c.note << '"';
        }
        std::cout << '\n';
      }
      if (!v.note.empty()) {
        std::cout << "note=\"" << v.note << "\"\n";
      }
    }
    std::cout << cls << '=' << (v.member ? "YES" : "NO") << '\n';
  }

  int run_classify(std::string const& file, Globals const& g) {
    auto const h = load_cayley(file);
    print_verdict(h, "H1", check_H1(h), g.quiet);
    print_verdict(h, "HS", check_HS(h), g.quiet);
    print_verdict(h, "H1_UNIT", check_H1_unit(h), g.quiet);
    print_verdict(h, "HS_UNIT", check_HS_unit(h), g.quiet);
    return kOk;
  }

  //////////////////////////////////////////////////////////////////////////
  // iso
  //////////////////////////////////////////////////////////////////////////

  int run_iso(std::string const& a, std::string const& b) {
    auto const h1  = load_cayley(a);
    auto const h2  = load_cayley(b);
    auto const phi = find_isomorphism(h1, h2);
    if (!phi) {
      std::cout << "NONE\n";
      return kNegative;
    }
    for (std::size_t x = 0; x < h1.size(); ++x) {
      std::cout << h1.name(x) << " -> " << h2.name((*phi)[x]) << '\n';
    }
    return kOk;
  }

  //////////////////////////////////////////////////////////////////////////
  // represent
  //////////////////////////////////////////////////////////////////////////

  struct RepresentArgs {
    std::string table;
    std::size_t max_ground = 4;
    std::string blocks;
    std::string cls;
    std::size_t budget = SearchOptions{}.candidate_budget;
  };

  std::set<std::size_t> parse_counts(std::string const& text) {
    std::set<std::size_t> out;
    std::stringstream     in(text);
    for (std::string item; std::getline(in, item, ',');) {
      try {
        std::size_t used = 0;
        auto const  v    = std::stoul(item, &used);
        if (used != item.size() || v == 0) {
          throw std::invalid_argument(item);
        }
        out.insert(v);
      } catch (std::logic_error const&) {
        throw InputError("bad block count '" + item + "'");
      }
    }
    return out;
  }

  int run_represent(RepresentArgs const& a, Globals const& g) {
    auto const h = load_cayley(a.table);
    if (!a.cls.empty()) {
      auto c = parse_semigroup_class(a.cls);
      if (!c) {
        throw InputError("unknown class '" + a.cls + "' (H1, H1_UNIT, HS, HS_UNIT)");
      }
      write_witness(std::cout, h, represent_class_member(h, *c));
      return kOk;
    }
    SearchOptions o;
    o.max_ground       = a.max_ground;
    o.threads          = g.threads;
    o.candidate_budget = a.budget;
    if (!a.blocks.empty()) {
      o.block_counts = parse_counts(a.blocks);
    }
    auto const r = search_d_transitive(h, o);
    if (!g.quiet) {
      std::cout << "# candidates examined: " << r.candidates_examined << '\n';
    }
    if (!r.found()) {
      std::cout << "EXHAUSTED n<=" << a.max_ground << '\n';
      return kNegative;
    }
    write_witness(std::cout, h, *r.witness);
    return kOk;
  }

  //////////////////////////////////////////////////////////////////////////
  // hasse, oracle, verify
  //////////////////////////////////////////////////////////////////////////

  int run_hasse(std::string const& file, std::string const& out) {
    auto const h = load_cayley(file);
    emit(out, to_dot(h, band_order(h, idempotents(h))));
    return kOk;
  }

  int run_oracle(std::string const& file,
                 std::string const& kind,
                 std::size_t        max_ground,
                 Globals const&     g) {
    auto const               p = load_partition(file);
    std::vector<ProductKind> kinds;
    if (kind == "all") {
      kinds.assign(std::begin(all_product_kinds), std::end(all_product_kinds));
    } else {
      kinds.push_back(kind_from(kind));
    }
    bool all = true;
    for (auto k : kinds) {
      auto const r = verify_smallest(p, k, max_ground);
      all          = all && r.verified;
      std::cout << to_string(k) << ": " << (r.verified ? "VERIFIED" : "COUNTEREXAMPLE");
      if (!g.quiet) {
        std::cout << " partitions=" << r.partitions_examined
                  << " in_class=" << r.class_members;
        if (r.symmetric_checked) {
          std::cout << " symmetric_above=" << r.symmetric_checked;
        }
      }
      std::cout << '\n';
      if (r.counterexample) {
        std::cout << r.detail << '\n' << to_text(*r.counterexample);
      }
    }
    return all ? kOk : kNegative;
  }

  int run_verify(std::string const& suite_name, SuiteOptions o, Globals const& g) {
    auto suite = parse_suite(suite_name);
    if (!suite) {
      throw InputError("unknown suite '" + suite_name
                       + "' (sizes, lattice, h1, hs, iso, reps, all)");
    }
    o.threads         = g.threads;
    std::size_t fails = 0, total = 0;
    run_suite(*suite, o, [&](CheckResult const& r) {
      ++total;
      fails += !r.passed;
      if (!g.quiet || !r.passed) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) {
          std::cout << " (" << r.detail << ')';
        }
        std::cout << " [" << std::fixed << std::setprecision(3) << r.seconds << "s]\n"
                  << std::flush;
      }
    });
    std::cout << (total - fails) << '/' << total << " checks passed\n";
    return fails == 0 ? kOk : kNegative;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite binary-relation semigroups: generation, classification, "
               "d-transitive representations"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Reserved; no command uses randomness");
  app.add_option("--threads", g.threads, "Worker threads for the representation search")
      ->check(CLI::Range(1, 256));
  app.add_flag("--quiet,-q", g.quiet, "Print verdicts only");

  GenArgs gen;
  auto*   gen_cmd = app.add_subcommand("gen", "Close relations under composition; write .cay");
  gen_cmd->add_option("--partition", gen.partition, "Partition of X (.part)");
  gen_cmd->add_option("--kind", gen.kind, "plain, unit, sym or symunit");
  gen_cmd->add_option("--relations", gen.relations, "Generator relations (.rel)");
  gen_cmd->add_option("--out", gen.out, "Output .cay (default stdout)");
  gen_cmd->add_option("--elements", gen.elements_dir, "Directory for one .rel per element");
  gen_cmd->add_option("--cap", gen.cap, "Element cap");

  std::string classify_file;
  auto*       classify_cmd = app.add_subcommand("classify", "Test membership in H1, HS and their unit forms");
  classify_cmd->add_option("table", classify_file, "Cayley table (.cay)")->required();

  std::string iso_a, iso_b;
  auto*       iso_cmd = app.add_subcommand("iso", "Find an isomorphism between two tables");
  iso_cmd->add_option("first", iso_a)->required();
  iso_cmd->add_option("second", iso_b)->required();

  RepresentArgs rep;
  auto*         rep_cmd = app.add_subcommand("represent", "Find or refute a d-transitive representation");
  rep_cmd->add_option("--table", rep.table, "Cayley table (.cay)")->required();
  rep_cmd->add_option("--max-ground", rep.max_ground, "Largest |X| searched")
      ->check(CLI::Range(1, 8));
  rep_cmd->add_option("--blocks", rep.blocks, "Admissible block counts, e.g. 2,3");
  rep_cmd->add_option("--class", rep.cls, "Build from the class model (H1, H1_UNIT, HS, HS_UNIT)");
  rep_cmd->add_option("--budget", rep.budget, "Largest number of partitions enumerated");

  std::string hasse_file, hasse_out;
  auto*       hasse_cmd = app.add_subcommand("hasse", "Hasse diagram of the idempotents (Graphviz)");
  hasse_cmd->add_option("table", hasse_file, "Cayley table (.cay)")->required();
  hasse_cmd->add_option("--out", hasse_out, "Output .dot (default stdout)");

  std::string oracle_file, oracle_kind = "all";
  std::size_t oracle_ground = 3;
  auto*       oracle_cmd
      = app.add_subcommand("oracle", "Check the product is the least partition of its class");
  oracle_cmd->add_option("--partition", oracle_file, "Partition of X (.part)")->required();
  oracle_cmd->add_option("--kind", oracle_kind, "plain, unit, sym, symunit or all");
  oracle_cmd->add_option("--max-ground", oracle_ground, "Enumeration guard on |X|");

  std::string  suite_name = "all";
  SuiteOptions suite;
  auto*        verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", suite_name, "sizes, lattice, h1, hs, iso, reps or all");
  verify_cmd->add_option("--max", suite.max_k, "Largest number of blocks of P");
  verify_cmd->add_option("--max-ground", suite.max_ground, "Representation search bound");

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*gen_cmd) {
      return run_gen(gen, g);
    }
    if (*classify_cmd) {
      return run_classify(classify_file, g);
    }
    if (*iso_cmd) {
      return run_iso(iso_a, iso_b);
    }
    if (*rep_cmd) {
      return run_represent(rep, g);
    }
    if (*hasse_cmd) {
      return run_hasse(hasse_file, hasse_out);
    }
    if (*oracle_cmd) {
      return run_oracle(oracle_file, oracle_kind, oracle_ground, g);
    }
    if (*verify_cmd) {
      return run_verify(suite_name, suite, g);
    }
  } catch (GuardError const& e) {
    std::cerr << "relsemi: " << e.what() << '\n';
    return kGuard;
  } catch (Error const& e) {
    std::cerr << "relsemi: " << e.what() << '\n';
    return kInput;
  } catch (fs::filesystem_error const& e) {
    std::cerr << "relsemi: " << e.what() << '\n';
    return kInput;
  }
  return kInput;
}
