#pragma once

#include <stdexcept>
#include <string>

namespace radiolabel {

enum class ErrorKind {
    InvalidGraph,
    DisconnectedGraph,
    InvalidVertex,
    InvalidParameter,
    InvalidLabeling,
    NoClosedForm,
    NoConstruction,
    NotAGear,
    Parse,
    Io,
};

const char* to_string(ErrorKind kind);

// Every failure the library reports is an Error; callers branch on kind().
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace radiolabel
