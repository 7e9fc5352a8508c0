#pragma once

#include <stdexcept>
#include <string>

namespace gz {

enum class ErrorKind {
    MixedMode,          // operands with different arithmetic modes
    Index,              // index out of range
    Singular,           // singular linear system / division by zero
    NotRegular,         // matrix required to be regular is not
    NotStronglyRegular, // strong regularity required and absent
    ExactUnsupported,   // operation has no exact-mode path for this input
    NonSplitting,       // polynomial has no Gaussian-rational root
    Diagnostic,         // ambiguous tolerance decision or internal contradiction
    Schema,             // malformed JSON or schema violation
    Internal,           // invariant that should be unreachable
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string detail)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
          kind_(kind),
          detail_(std::move(detail)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

} // namespace gz
