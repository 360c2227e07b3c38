#pragma once

#include <ostream>

namespace padicval::cli {

/// Runs one invocation. Returns 0 on success, 1 on domain errors (and on
/// failed reproduce claims), 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace padicval::cli
