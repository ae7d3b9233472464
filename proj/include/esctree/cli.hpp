#pragma once

namespace esctree {

/// Entry point behind the esctree binary; returns the process exit code
/// (0 ok, 1 config/schema error, 2 agent backend failure).
int run_cli(int argc, const char* const* argv);

}  // namespace esctree
