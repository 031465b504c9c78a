#include "relsemi/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "relsemi/error.hpp"

namespace relsemi {

  namespace {
    // Yields significant lines with comments and surrounding blanks removed.
    class LineReader {
     public:
      explicit LineReader(std::istream& in) : in_(in) {}

      bool next(std::string& line) {
        std::string raw;
        while (std::getline(in_, raw)) {
          ++number_;
          if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
          }
          auto const first = raw.find_first_not_of(" \t\r");
          if (first == std::string::npos) {
            continue;
          }
          auto const last = raw.find_last_not_of(" \t\r");
          line            = raw.substr(first, last - first + 1);
          return true;
        }
        return false;
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw InputError("line " + std::to_string(number_) + ": " + what);
      }

      std::size_t line_number() const noexcept {
        return number_;
      }

     private:
      std::istream& in_;
      std::size_t   number_ = 0;
    };

    std::vector<std::string> words(std::string const& s) {
      std::istringstream       in(s);
      std::vector<std::string> out;
      for (std::string w; in >> w;) {
        out.push_back(w);
      }
      return out;
    }

    std::size_t to_index(LineReader const& r, std::string const& w) {
      std::size_t v   = 0;
      auto [ptr, ec]  = std::from_chars(w.data(), w.data() + w.size(), v);
      if (ec != std::errc{} || ptr != w.data() + w.size()) {
        r.fail("expected a non-negative integer, got '" + w + "'");
      }
      return v;
    }

    // Splits "key: rest"; fails unless the key matches.
    std::string expect_key(LineReader const& r, std::string const& line,
                           std::string const& key) {
      auto const colon = line.find(':');
      if (colon == std::string::npos) {
        r.fail("expected '" + key + ":'");
      }
      auto k = line.substr(0, colon);
      while (!k.empty() && (k.back() == ' ' || k.back() == '\t')) {
        k.pop_back();
      }
      if (k != key) {
        r.fail("expected '" + key + ":', got '" + k + ":'");
      }
      return line.substr(colon + 1);
    }

    std::size_t read_size_header(LineReader& r) {
      std::string line;
      if (!r.next(line)) {
        throw InputError("empty input: expected 'n: <size>'");
      }
      auto const w = words(expect_key(r, line, "n"));
      if (w.size() != 1) {
        r.fail("expected exactly one size after 'n:'");
      }
      auto const n = to_index(r, w[0]);
      if (n == 0) {
        r.fail("the ground set must be nonempty");
      }
      return n;
    }

    template <typename T, typename F>
    T load(std::filesystem::path const& path, F read) {
      std::ifstream in(path);
      if (!in) {
        throw InputError(path.string() + ": cannot open");
      }
      try {
        return read(in);
      } catch (InputError const& e) {
        throw InputError(path.string() + ": " + e.what());
      }
    }
  }  // namespace

  BinaryRelation read_relation(std::istream& in) {
    LineReader     r(in);
    auto const     n = read_size_header(r);
    BinaryRelation rel(n);
    for (std::string line; r.next(line);) {
      auto const w = words(line);
      if (w.size() != 2) {
        r.fail("expected a pair 'x y'");
      }
      auto const x = to_index(r, w[0]), y = to_index(r, w[1]);
      if (x >= n || y >= n) {
        r.fail("pair (" + w[0] + ", " + w[1] + ") outside a ground set of size "
               + std::to_string(n));
      }
      rel.insert(x, y);
    }
    return rel;
  }

  void write_relation(std::ostream& out, BinaryRelation const& r) {
    out << "n: " << r.ground_size() << '\n';
    for (auto const& [x, y] : r.pairs()) {
      out << x << ' ' << y << '\n';
    }
  }

  Partition read_partition(std::istream& in) {
    LineReader                            r(in);
    auto const                            n = read_size_header(r);
    std::vector<std::vector<std::size_t>> blocks;
    for (std::string line; r.next(line);) {
      std::vector<std::size_t> block;
      for (auto const& w : words(expect_key(r, line, "block"))) {
        block.push_back(to_index(r, w));
      }
      if (block.empty()) {
        r.fail("empty block");
      }
      blocks.push_back(std::move(block));
    }
    try {
      return Partition::from_blocks(n, blocks);
    } catch (InputError const& e) {
      throw InputError(std::string("not a partition: ") + e.what());
    }
  }

  void write_partition(std::ostream& out, Partition const& p) {
    out << "n: " << p.ground_size() << '\n';
    for (auto const& block : p.blocks()) {
      out << "block:";
      for (auto x : block) {
        out << ' ' << x;
      }
      out << '\n';
    }
  }

  AbstractSemigroup read_cayley(std::istream& in) {
    LineReader  r(in);
    std::string line;
    if (!r.next(line)) {
      throw InputError("empty input: expected 'elements: ...'");
    }
    auto names = words(expect_key(r, line, "elements"));
    if (names.empty()) {
      r.fail("no elements listed");
    }
    if (!r.next(line) || !words(expect_key(r, line, "table")).empty()) {
      r.fail("expected 'table:' on its own line");
    }
    auto const m = names.size();
    auto       lookup = [&](std::string const& w) {
      for (std::size_t i = 0; i < m; ++i) {
        if (names[i] == w) {
          return i;
        }
      }
      r.fail("unknown element '" + w + "'");
    };
    std::vector<std::vector<std::size_t>> rows;
    while (r.next(line)) {
      auto const w = words(line);
      if (w.size() != m) {
        r.fail("row has " + std::to_string(w.size()) + " entries, expected "
               + std::to_string(m));
      }
      std::vector<std::size_t> row;
      for (auto const& x : w) {
        row.push_back(lookup(x));
      }
      rows.push_back(std::move(row));
    }
    if (rows.size() != m) {
      throw InputError("table has " + std::to_string(rows.size())
                       + " rows, expected " + std::to_string(m));
    }
    return AbstractSemigroup::validate(std::move(names), rows);
  }

  void write_cayley(std::ostream& out, AbstractSemigroup const& h) {
    std::size_t width = 0;
    for (auto const& n : h.names()) {
      width = std::max(width, n.size());
    }
    out << "elements:";
    for (auto const& n : h.names()) {
      out << ' ' << n;
    }
    out << "\ntable:\n";
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (std::size_t j = 0; j < h.size(); ++j) {
        auto const& n = h.name(h.product(i, j));
        out << n;
        if (j + 1 < h.size()) {
          out << std::string(width - n.size() + 1, ' ');
        }
      }
      out << '\n';
    }
  }

  void write_witness(std::ostream&             out,
                     AbstractSemigroup const&  h,
                     DTransitiveWitness const& w) {
    out << "ground: " << w.ground << '\n';
    for (std::size_t b = 0; b < w.blocks.size(); ++b) {
      out << "block " << (b < w.block_labels.size() ? w.block_labels[b] : "B" + std::to_string(b))
          << ":";
      for (auto const& [x, y] : w.blocks[b].pairs()) {
        out << " (" << x << ',' << y << ')';
      }
      out << '\n';
    }
    for (std::size_t x = 0; x < w.images.size(); ++x) {
      out << h.name(x) << " ->";
      if (auto b = w.generator_map[x]) {
        out << " block " << (*b < w.block_labels.size() ? w.block_labels[*b] : std::to_string(*b));
      } else if (w.images[x].is_empty()) {
        out << " {}";
      } else {
        for (auto const& [a, c] : w.images[x].pairs()) {
          out << " (" << a << ',' << c << ')';
        }
      }
      out << '\n';
    }
  }

  BinaryRelation load_relation(std::filesystem::path const& path) {
    return load<BinaryRelation>(path, [](std::istream& in) { return read_relation(in); });
  }

  Partition load_partition(std::filesystem::path const& path) {
    return load<Partition>(path, [](std::istream& in) { return read_partition(in); });
  }

  AbstractSemigroup load_cayley(std::filesystem::path const& path) {
    return load<AbstractSemigroup>(path, [](std::istream& in) { return read_cayley(in); });
  }

  std::string to_text(BinaryRelation const& r) {
    std::ostringstream out;
    write_relation(out, r);
    return out.str();
  }

  std::string to_text(Partition const& p) {
    std::ostringstream out;
    write_partition(out, p);
    return out.str();
  }

  std::string to_text(AbstractSemigroup const& h) {
    std::ostringstream out;
    write_cayley(out, h);
    return out.str();
  }

}  // namespace relsemi
