#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hamcon {

enum class ErrorKind {
    UnknownVertex,
    UnknownEdge,
    InvalidArgument,
    SizeLimit,
    Disconnected,
    NotALineGraphOfMultigraph,
    DegenerateCore,
    NotEssentially3EdgeConnected,
    NoCoreLocation,
    TrailNotFound,
    LiftFailed,
    InvalidTrail,
    Parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so the CLI can map it
// onto an exit code and callers can branch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace hamcon
