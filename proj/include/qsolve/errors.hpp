#pragma once

#include <stdexcept>
#include <string>

namespace qsolve {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NonMonicDivisor : Error {
    explicit NonMonicDivisor(const std::string& msg = "divisor is not monic") : Error(msg) {}
};

struct BadInhomogeneityCount : Error {
    explicit BadInhomogeneityCount(const std::string& msg = "inhomogeneity list length must equal the chain length") : Error(msg) {}
};

struct RegionExcludesPath : Error {
    explicit RegionExcludesPath(const std::string& msg = "relation region does not contain the ansatz path") : Error(msg) {}
};

struct StuckPropagation : Error {
    explicit StuckPropagation(const std::string& msg = "no admissible plaquette before region exhausted") : Error(msg) {}
};

struct NotZeroDimensional : Error {
    explicit NotZeroDimensional(const std::string& msg = "polynomial system is not zero-dimensional") : Error(msg) {}
};

struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& msg = "could not certify at requested precision") : Error(msg) {}
};

struct ShapePositionFailed : Error {
    explicit ShapePositionFailed(const std::string& msg = "quotient ring not cyclic after coordinate-change retries") : Error(msg) {}
};

struct SectorTooLarge : Error {
    explicit SectorTooLarge(const std::string& msg = "sector dimension exceeds desk-scale limit") : Error(msg) {}
};

struct ConvergenceFailure : Error {
    explicit ConvergenceFailure(const std::string& msg = "eigensolver failed to converge") : Error(msg) {}
};

struct Cancelled : Error {
    explicit Cancelled(const std::string& msg = "operation cancelled") : Error(msg) {}
};

struct MalformedInput : Error {
    explicit MalformedInput(const std::string& msg = "malformed input") : Error(msg) {}
};

struct MismatchedSpectrum : Error {
    explicit MismatchedSpectrum(const std::string& msg = "solver and oracle spectra disagree") : Error(msg) {}
};

struct BadPartition : Error {
    explicit BadPartition(const std::string& msg = "invalid partition") : Error(msg) {}
};

struct UndecidableAtPrecision : Error {
    explicit UndecidableAtPrecision(const std::string& msg = "interval too wide to decide") : Error(msg) {}
};

}  // namespace qsolve
