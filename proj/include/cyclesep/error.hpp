#pragma once

#include <stdexcept>
#include <string>

namespace cyclesep {

enum class ErrorKind {
    MalformedDocument,
    AsymmetricAdjacency,
    Disconnected,
    NotGenusZero,
    SelfLoopOrMultiEdge,
    UnknownVertex,
    NotACycle,
    VertexOnCycle,
    SupportTooLarge,
    NotAFamily,
    AxiomViolation,
    IndexOutOfRange,
    TooFewMembers,
    HypothesisNotMet,
    BudgetExceeded,
    BadConfig,
    UnknownProperty,
    DegenerateGeometry,
    UsageError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace cyclesep
