// Named batches of desk-scale checks, run by `relsemi verify`.

#ifndef RELSEMI_HARNESS_HPP_
#define RELSEMI_HARNESS_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace relsemi {

  enum class Suite { sizes, lattice, h1, hs, iso, reps, all };

  std::string_view     to_string(Suite s) noexcept;
  std::optional<Suite> parse_suite(std::string_view text);

  struct SuiteOptions {
    std::size_t max_k      = 4;  // largest number of blocks of P
    std::size_t max_ground = 4;  // representation search bound
    std::size_t threads    = 1;
  };

  struct CheckResult {
    std::string name;
    bool        passed = false;
    std::string detail;
    double      seconds = 0;
  };

  // Runs the checks in order; guard and other library errors become failed
  // checks. on_result, when set, sees each result as soon as it is known.
  std::vector<CheckResult>
  run_suite(Suite                                    suite,
            SuiteOptions const&                      options,
            std::function<void(CheckResult const&)> const& on_result = {});

}  // namespace relsemi

#endif  // RELSEMI_HARNESS_HPP_
