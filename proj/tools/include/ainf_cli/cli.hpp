#pragma once

#include <iosfwd>

namespace ainf::cli {

// Exit codes: 0 pass, 1 relation failure, 2 input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ainf::cli
