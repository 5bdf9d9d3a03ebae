#pragma once

#include <stdexcept>
#include <string>

namespace scrolls {

/// Raised when an input is well formed but mathematically inadmissible
/// (out of range, inconsistent incidence data, violated Riemann-Roch, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when bookkeeping that must hold by construction does not
/// (stored and recomputed self-intersections disagree, parity broken).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

enum class Tri { Yes, No, Unknown };

inline const char* to_string(Tri t) {
    switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: break;
    }
    return "unknown";
}

inline Tri tri_from_string(const std::string& s) {
    if (s == "yes") return Tri::Yes;
    if (s == "no") return Tri::No;
    if (s == "unknown") return Tri::Unknown;
    throw DomainError("bad tri-state value '" + s + "'");
}

}  // namespace scrolls
