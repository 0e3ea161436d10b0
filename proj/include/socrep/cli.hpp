#pragma once

#include <iosfwd>

namespace socrep {

/// Exit codes: 0 ok, 1 invalid input or usage, 2 search cap or budget, 3 internal error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace socrep
