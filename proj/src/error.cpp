#include "oddramsey/error.hpp"

namespace oddramsey {

std::string_view to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::not_found: return "not_found";
        case Status::unknown: return "unknown";
        case Status::precondition_failed: return "precondition_failed";
        case Status::internal_contradiction: return "internal_contradiction";
        case Status::cap_exceeded: return "cap_exceeded";
        case Status::bad_witness: return "bad_witness";
        case Status::recursion_exhausted: return "recursion_exhausted";
        case Status::invalid_input: return "invalid_input";
    }
    return "unknown";
}

int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::not_found: return 2;
        case Status::unknown: return 3;
        case Status::precondition_failed:
        case Status::bad_witness: return 4;
        case Status::internal_contradiction:
        case Status::recursion_exhausted: return 5;
        case Status::cap_exceeded: return 6;
        case Status::invalid_input: return 64;
    }
    return 64;
}

}  // namespace oddramsey
