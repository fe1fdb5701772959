#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bgs {

/// Result of a table validation pass. Empty violation list means valid.
struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }

    void fail(std::string msg) { violations.push_back(std::move(msg)); }

    std::string summary() const {
        if (ok()) return "valid";
        std::string out;
        for (const auto& v : violations) {
            out += v;
            out += '\n';
        }
        return out;
    }
};

struct BgsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Thrown when a configured size limit would be exceeded.
struct BoundsError : BgsError {
    using BgsError::BgsError;
};

/// Thrown when an operation's qualifying conditions do not hold.
struct PreconditionFailed : BgsError {
    using BgsError::BgsError;
};

}  // namespace bgs
