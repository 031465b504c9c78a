// Fixed semigroups used by the verification harness and the tests.

#ifndef RELSEMI_FIXTURES_HPP_
#define RELSEMI_FIXTURES_HPP_

#include <string_view>

#include "relsemi/semigroup.hpp"

namespace relsemi::fixtures {

  // Cayley table, in .cay format, of the seven-element union of
  // C = {0, xy, yx, x2, y2} (the closure of P x P for a two-block P, with
  // xy = X x Y and so on) and the group G = {xy+yx, x2+y2}, where every
  // element of G acts as a two-sided identity on C.
  extern std::string_view const identity_absorbing_example_text;

  AbstractSemigroup identity_absorbing_example();

}  // namespace relsemi::fixtures

#endif  // RELSEMI_FIXTURES_HPP_
