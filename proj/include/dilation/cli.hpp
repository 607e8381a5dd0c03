#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dilation {

/// Entry point of the `dilation` command-line tool. `args` excludes the
/// program name. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

/// DILATION_WORKERS when set to a positive integer, otherwise the hardware
/// concurrency (at least 1).
int default_workers();

}  // namespace dilation
