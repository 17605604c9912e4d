#pragma once

#include <stdexcept>
#include <string>

namespace ipm {

// Error taxonomy shared by the C++ core, the C API status codes and the
// CLI's ERROR:<code>: prefixes.
enum class ErrorKind {
    InvalidArgument,
    Io,
    Parse,
    UnderResolved,
    Hypothesis,
    Numeric,
    CheckFailed,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::Io: return "io";
        case ErrorKind::Parse: return "parse";
        case ErrorKind::UnderResolved: return "under-resolved";
        case ErrorKind::Hypothesis: return "hypothesis";
        case ErrorKind::Numeric: return "numeric";
        case ErrorKind::CheckFailed: return "check-failed";
        case ErrorKind::Internal: return "internal";
    }
    return "internal";
}

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

}  // namespace ipm
