#pragma once

#include <iosfwd>

namespace invariants::cli {

/// Entry point behind the `invariants` binary. Returns the process exit
/// code: 0 on success (including in-band "not Fredholm" answers), 2 on
/// input errors, 3 on internal verification failures.
int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err);

}  // namespace invariants::cli
