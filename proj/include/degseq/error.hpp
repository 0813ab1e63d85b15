#pragma once

#include <stdexcept>
#include <string>

namespace degseq {

enum class Errc {
    empty_input,
    non_positive_element,
    syntax_error,
    limit_exceeded,
    x_less_than_one,
    domain_error,
    not_applicable,
    not_realizable,
    precondition_failed,
    budget_exceeded,
    internal_error,
};

const char* errc_name(Errc code);

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

}  // namespace degseq
