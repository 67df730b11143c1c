#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace klab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid arguments (bad n/k ranges, malformed words, broken input files).
struct BadParams : Error {
    using Error::Error;
};

/// A generator or enumeration would exceed its configured cap.
struct CapExceeded : Error {
    using Error::Error;
};

/// An exact solver was asked for an instance beyond its configured bound.
struct SizeLimit : Error {
    using Error::Error;
};

/// Greedy coloring ran out of colors (only raised on actual failure).
struct PaletteTooSmall : Error {
    using Error::Error;
};

struct NotReduced : Error {
    using Error::Error;
};

/// A 2-regular component is an odd cycle shorter than 2k+1; no homomorphism
/// into the (2k+1)-cycle exists, so the k-fold pipeline must stop.
struct ShortOddCycle : Error {
    using Error::Error;
};

struct DegreeTooHigh : Error {
    using Error::Error;
};

/// Dense-family construction cannot reach the requested density depth.
struct Infeasible : Error {
    using Error::Error;
};

struct CertificateInvalid : Error {
    using Error::Error;
};

inline long env_cap(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == v || parsed <= 0) return fallback;
    return parsed;
}

/// Vertex cap for graph generators (KLAB_VERTEX_CAP overrides).
inline long vertex_cap() { return env_cap("KLAB_VERTEX_CAP", 100000); }

/// Cap on enumerated maximal independent sets (KLAB_MIS_CAP overrides).
inline long mis_cap() { return env_cap("KLAB_MIS_CAP", 1000000); }

/// Bound for exact independence-number search (KLAB_EXACT_BOUND overrides).
inline long exact_search_bound() { return env_cap("KLAB_EXACT_BOUND", 64); }

} // namespace klab
