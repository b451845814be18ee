#pragma once

namespace pg::cli {

// Full command-line driver behind the pgraph binary; split out so tests can
// call it in-process. Returns the process exit code: 0 success, 1 usage or
// runtime error, 2 when a cross-check found a contradiction.
int cli_main(int argc, const char* const* argv);

}  // namespace pg::cli
