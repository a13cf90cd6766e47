#pragma once

#include <stdexcept>
#include <string>

namespace rulekit {

/// Process exit codes shared by the library error categories and the CLI.
enum class ExitCode : int {
    ok = 0,
    internal = 1,
    validation = 2,
    io = 3,
    no_safe_k = 4,
};

class Error : public std::runtime_error {
public:
    Error(const std::string& what, ExitCode code)
        : std::runtime_error(what), code_(code) {}

    ExitCode exit_code() const noexcept { return code_; }

private:
    ExitCode code_;
};

/// Bad inputs: dimension mismatches, domain violations, malformed records.
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what)
        : Error(what, ExitCode::validation) {}
};

/// File-level failures: unreadable paths, bad magic, truncated payloads.
class IoError : public Error {
public:
    explicit IoError(const std::string& what)
        : Error(what, ExitCode::io) {}
};

}  // namespace rulekit
