#include "relsemi/fixtures.hpp"

#include <sstream>
#include <string>

#include "relsemi/io.hpp"

namespace relsemi::fixtures {

  std::string_view const identity_absorbing_example_text = R"(# C = {0, xy, yx, x2, y2} with an order-2 group acting as identity on C
elements: 0 xy yx x2 y2 xy+yx x2+y2
table:
0 0     0     0     0     0     0
0 0     x2    0     xy    xy    xy
0 y2    0     yx    0     yx    yx
0 xy    0     x2    0     x2    x2
0 0     yx    0     y2    y2    y2
0 xy    yx    x2    y2    x2+y2 xy+yx
0 xy    yx    x2    y2    xy+yx x2+y2
)";

  AbstractSemigroup identity_absorbing_example() {
    std::istringstream in{std::string(identity_absorbing_example_text)};
    return read_cayley(in);
  }

}  // namespace relsemi::fixtures
