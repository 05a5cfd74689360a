#pragma once

#include <iosfwd>

namespace hh {

/// Exit codes: 0 success, 1 violations found, 2 usage or parameter error,
/// 3 quadrature failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hh
