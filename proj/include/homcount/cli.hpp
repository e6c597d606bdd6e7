#pragma once

#include <iosfwd>

namespace homcount {

/// Exit codes: 0 ok, 1 other failure, 2 usage error, 3 missing file,
/// 4 budget exceeded.
int cli_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace homcount
