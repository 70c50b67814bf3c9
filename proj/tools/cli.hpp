#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cfrenorm/cf.hpp"

namespace cfr::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kTruncated = 3 };

struct BadInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// golden | p/q | decimal | expression with sqrt(n) | cf:a1,a2,...[;p1,p2,...]
ExactNumber parse_x(std::string_view text);
// yg | any number accepted by parse_x except cf:, optionally tagged with a side
SidedPoint parse_y(std::string_view text, const ExactNumber& x, std::optional<Side> side);
Strategy parse_strategy(std::string_view name, const std::optional<std::string>& alpha);

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfr::cli
