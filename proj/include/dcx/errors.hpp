#ifndef DCX_ERRORS_HPP
#define DCX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dcx {

/// Machine-readable failure codes. The names double as the error codes
/// emitted on the CLI surface.
enum class Errc {
    EmptyCurve,
    UnmatchedPoint,
    CrossingChords,
    MultiComponent,
    Malformed,
    LayoutMismatch,
    InessentialCurve,
    NoCompression,
    Unclassifiable,
    ResourceCap,
    Internal,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::EmptyCurve: return "EmptyCurve";
        case Errc::UnmatchedPoint: return "UnmatchedPoint";
        case Errc::CrossingChords: return "CrossingChords";
        case Errc::MultiComponent: return "MultiComponent";
        case Errc::Malformed: return "Malformed";
        case Errc::LayoutMismatch: return "LayoutMismatch";
        case Errc::InessentialCurve: return "InessentialCurve";
        case Errc::NoCompression: return "NoCompression";
        case Errc::Unclassifiable: return "Unclassifiable";
        case Errc::ResourceCap: return "ResourceCap";
        case Errc::Internal: return "Internal";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

inline void check(bool cond, Errc code, const std::string& what) {
    if (!cond) throw Error(code, what);
}

/// Internal-consistency assertion; failures indicate a bug, not bad input.
inline void require_internal(bool cond, const std::string& what) {
    if (!cond) throw Error(Errc::Internal, what);
}

} // namespace dcx

#endif
