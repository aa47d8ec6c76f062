#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace compass {

// The `compass` command line. `args` excludes the program name. Returns the
// exit status: 0 success, 1 data errors (load failures, violations, failed
// operations), 2 usage errors.
//
//   validate <file>
//   query <file> <queryfile> [--format csv|table|json]
//   gen [--seed N] [--clients N] [--services N] [--events N] [--locations a,b] [--fixture] [-o file]
//   report gaps|demographics|barriers|communities [<file>] [--code IRI] [--format text|json]
//   ask <operation> [<file>] [--param key=value]...
//   serve [<file>] [--host H] [--port N]
//
// A missing <file> falls back to $COMPASS_DATA; --port to $COMPASS_PORT.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace compass
