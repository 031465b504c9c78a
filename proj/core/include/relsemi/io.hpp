// Text formats.
//
//   .rel   n: <size>            one "x y" pair per line
//   .part  n: <size>            one "block: i j k ..." line per block
//   .cay   elements: a b c ...  then "table:" and m rows of m names
//
// '#' starts a comment everywhere. Parsers throw InputError with a line
// number; writers emit canonical order and are re-readable.

#ifndef RELSEMI_IO_HPP_
#define RELSEMI_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>

#include "relsemi/partition.hpp"
#include "relsemi/relation.hpp"
#include "relsemi/represent.hpp"
#include "relsemi/semigroup.hpp"

namespace relsemi {

  BinaryRelation read_relation(std::istream& in);
  void           write_relation(std::ostream& out, BinaryRelation const& r);

  Partition read_partition(std::istream& in);
  void      write_partition(std::ostream& out, Partition const& p);

  AbstractSemigroup read_cayley(std::istream& in);
  void              write_cayley(std::ostream& out, AbstractSemigroup const& h);

  // Human-readable witness: ground size, blocks as pair lists, element map.
  void write_witness(std::ostream&             out,
                     AbstractSemigroup const&  h,
                     DTransitiveWitness const& w);

  // File wrappers; InputError messages are prefixed with the path.
  BinaryRelation    load_relation(std::filesystem::path const& path);
  Partition         load_partition(std::filesystem::path const& path);
  AbstractSemigroup load_cayley(std::filesystem::path const& path);

  std::string to_text(BinaryRelation const& r);
  std::string to_text(Partition const& p);
  std::string to_text(AbstractSemigroup const& h);

}  // namespace relsemi

#endif  // RELSEMI_IO_HPP_
