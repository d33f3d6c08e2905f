#ifndef GLU_ERRORS_HPP
#define GLU_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace glu {

enum class Err {
    UnpairedFace,
    NonInvolutive,
    SelfGluedFace,
    BadPermutation,
    DisconnectedGraph,
    IllegalMove,
    NotShellable,
    NotASubdivision,
    BudgetExceeded,
    SelfIdentification,
    FaceOvercrowding,
    InconsistentMaps,
    NotOrientable,
    DegeneratePoint,
    DegenerateTetrahedron,
    DevelopmentClash,
    Disconnected,
    BadInput,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::UnpairedFace: return "UnpairedFace";
        case Err::NonInvolutive: return "NonInvolutive";
        case Err::SelfGluedFace: return "SelfGluedFace";
        case Err::BadPermutation: return "BadPermutation";
        case Err::DisconnectedGraph: return "DisconnectedGraph";
        case Err::IllegalMove: return "IllegalMove";
        case Err::NotShellable: return "NotShellable";
        case Err::NotASubdivision: return "NotASubdivision";
        case Err::BudgetExceeded: return "BudgetExceeded";
        case Err::SelfIdentification: return "SelfIdentification";
        case Err::FaceOvercrowding: return "FaceOvercrowding";
        case Err::InconsistentMaps: return "InconsistentMaps";
        case Err::NotOrientable: return "NotOrientable";
        case Err::DegeneratePoint: return "DegeneratePoint";
        case Err::DegenerateTetrahedron: return "DegenerateTetrahedron";
        case Err::DevelopmentClash: return "DevelopmentClash";
        case Err::Disconnected: return "Disconnected";
        case Err::BadInput: return "BadInput";
    }
    return "Unknown";
}

class GluError : public std::runtime_error {
public:
    GluError(Err code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

}  // namespace glu

#endif
