#include "degseq/error.hpp"

namespace degseq {

const char* errc_name(Errc code) {
    switch (code) {
        case Errc::empty_input: return "empty_input";
        case Errc::non_positive_element: return "non_positive_element";
        case Errc::syntax_error: return "syntax_error";
        case Errc::limit_exceeded: return "limit_exceeded";
        case Errc::x_less_than_one: return "x_less_than_one";
        case Errc::domain_error: return "domain_error";
        case Errc::not_applicable: return "not_applicable";
        case Errc::not_realizable: return "not_realizable";
        case Errc::precondition_failed: return "precondition_failed";
        case Errc::budget_exceeded: return "budget_exceeded";
        case Errc::internal_error: return "internal_error";
    }
    return "unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace degseq
