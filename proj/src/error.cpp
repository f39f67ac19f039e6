#include "cyclesep/error.hpp"

namespace cyclesep {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::MalformedDocument: return "MalformedDocument";
        case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NotGenusZero: return "NotGenusZero";
        case ErrorKind::SelfLoopOrMultiEdge: return "SelfLoopOrMultiEdge";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::NotACycle: return "NotACycle";
        case ErrorKind::VertexOnCycle: return "VertexOnCycle";
        case ErrorKind::SupportTooLarge: return "SupportTooLarge";
        case ErrorKind::NotAFamily: return "NotAFamily";
        case ErrorKind::AxiomViolation: return "AxiomViolation";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::TooFewMembers: return "TooFewMembers";
        case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::BadConfig: return "BadConfig";
        case ErrorKind::UnknownProperty: return "UnknownProperty";
        case ErrorKind::DegenerateGeometry: return "DegenerateGeometry";
        case ErrorKind::UsageError: return "UsageError";
    }
    return "Error";
}

} // namespace cyclesep
