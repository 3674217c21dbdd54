#pragma once

#include <stdexcept>
#include <string>

namespace braidlevel {

enum class ErrorKind {
    InvalidInput,  // bad spec string, violated precondition, degenerate data
    CapExceeded,   // search space larger than the configured cap
    Internal,      // self-check failure; indicates a bug
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace braidlevel
