#pragma once

#include <optional>
#include <string>
#include <vector>

namespace swmap {

/// Outcome of an exact identity check. Failures carry the first offending
/// input in a fixed enumeration order.
struct VerificationReport {
    std::string identity;
    std::vector<int> degrees_checked;
    bool pass = true;
    std::optional<std::string> witness;
    long checked = 0;  // number of inputs evaluated
};

}  // namespace swmap
