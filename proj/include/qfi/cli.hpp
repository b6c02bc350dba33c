#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qfi::cli {

// Entry point behind the qfi binary. Returns 0 on success, 1 on domain
// errors (a JSON error object goes to out), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace qfi::cli
