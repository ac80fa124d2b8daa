#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncalg {

/// Runs one ncalg command; `args` excludes the program name. JSON goes to
/// `out`, errors to `err` as {"error": {"kind", "detail"}}. Returns 0 on
/// success, 1 on a domain error and 2 on a parse or usage error.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncalg
