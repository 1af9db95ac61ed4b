#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace elr {

// error with a stable machine-readable code plus a human-readable message
struct elr_error : std::runtime_error {
    std::string code;

    elr_error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw elr_error(code, msg);
}

} // namespace elr
