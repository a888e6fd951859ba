#pragma once

#include <stdexcept>
#include <string>

namespace jelonek {

// Error taxonomy mirrors the CLI exit codes: input errors (bad syntax,
// non-dominant maps, ...) and resource errors (precision exhaustion,
// term-count caps, depth caps) are kept apart so the front-end can map
// them to distinct statuses.

class input_error : public std::runtime_error {
public:
    input_error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class resource_error : public std::runtime_error {
public:
    resource_error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

// Raised when ball arithmetic cannot certify a decision at the working
// precision; callers may retry with more bits.
class precision_error : public resource_error {
public:
    explicit precision_error(const std::string& what)
        : resource_error("precision", what) {}
};

} // namespace jelonek
