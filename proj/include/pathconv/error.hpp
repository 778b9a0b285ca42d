#pragma once

#include <stdexcept>
#include <string>

namespace pathconv {

enum class ErrorCode {
    InvalidArgument,
    SelfLoop,
    VertexOutOfRange,
    Disconnected,
    ParseError,
    UnknownPreset,
    MalformedToken,
    MissingParameter,
    MatrixShapeMismatch,
    AsymmetricMatrix,
    NonzeroDiagonal,
    NegativeEntry,
    InvalidPath,
    SizeLimitExceeded,
    IoError,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:     return "InvalidArgument";
        case ErrorCode::SelfLoop:            return "SelfLoop";
        case ErrorCode::VertexOutOfRange:    return "VertexOutOfRange";
        case ErrorCode::Disconnected:        return "Disconnected";
        case ErrorCode::ParseError:          return "ParseError";
        case ErrorCode::UnknownPreset:       return "UnknownPreset";
        case ErrorCode::MalformedToken:      return "MalformedToken";
        case ErrorCode::MissingParameter:    return "MissingParameter";
        case ErrorCode::MatrixShapeMismatch: return "MatrixShapeMismatch";
        case ErrorCode::AsymmetricMatrix:    return "AsymmetricMatrix";
        case ErrorCode::NonzeroDiagonal:     return "NonzeroDiagonal";
        case ErrorCode::NegativeEntry:       return "NegativeEntry";
        case ErrorCode::InvalidPath:         return "InvalidPath";
        case ErrorCode::SizeLimitExceeded:   return "SizeLimitExceeded";
        case ErrorCode::IoError:             return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace pathconv
