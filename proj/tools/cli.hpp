#pragma once

namespace gmmrans::cli {

/// Entry point behind the gmmrans binary. Exit status 0 on success,
/// 1 on verification/stream failure, 2 on usage errors.
int run(int argc, const char* const* argv);

}  // namespace gmmrans::cli
