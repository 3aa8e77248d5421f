#pragma once

#include <iosfwd>

namespace venn {

/// Entry point of the venn tool. Documents go to out, reports and diagnostics
/// to err. Returns 0 on success, 1 on verification failure, 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace venn
