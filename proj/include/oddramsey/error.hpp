#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddramsey {

/// Outcome categories shared by the library and the command line tool.
enum class Status {
    ok,
    not_found,
    unknown,
    precondition_failed,
    internal_contradiction,
    cap_exceeded,
    bad_witness,
    recursion_exhausted,
    invalid_input,
};

std::string_view to_string(Status s);

/// Process exit code for a status (0, 2, 3, 4, 5, 6; 64 for malformed input).
int exit_code(Status s);

class Error : public std::runtime_error {
public:
    Error(Status status, const std::string& what)
        : std::runtime_error(what), status_(status) {}

    Status status() const noexcept { return status_; }

private:
    Status status_;
};

[[noreturn]] inline void fail(Status s, const std::string& what) { throw Error(s, what); }

}  // namespace oddramsey
