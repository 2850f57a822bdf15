#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyadic::cli {

/// Runs one command. Exit codes: 0 on success, 1 on a domain error
/// (insufficient depth, incompatible residues, unstable sequence, ...),
/// 2 on a usage error. Results go to `out`, diagnostics to `err`, and a
/// payload argument of "-" is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

} // namespace polyadic::cli
