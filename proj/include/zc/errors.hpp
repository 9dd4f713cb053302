#pragma once

#include <stdexcept>
#include <string>

namespace zc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& msg) : Error("DimensionMismatch: " + msg) {}
};

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error("IndexOutOfRange: " + msg) {}
};

struct NonHermitian : Error {
    explicit NonHermitian(const std::string& msg) : Error("NonHermitian: " + msg) {}
};

struct NoConvergence : Error {
    NoConvergence(const std::string& msg, int iterations)
        : Error("NoConvergence: " + msg + " (iterations: " + std::to_string(iterations) + ")"),
          iterations(iterations) {}
    int iterations;
};

struct NotPSD : Error {
    explicit NotPSD(const std::string& msg) : Error("NotPSD: " + msg) {}
};

struct NotSpecialUnitary : Error {
    explicit NotSpecialUnitary(const std::string& msg) : Error("NotSpecialUnitary: " + msg) {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& msg) : Error("RankDeficient: " + msg) {}
};

struct OutOfRange : Error {
    explicit OutOfRange(const std::string& msg) : Error("OutOfRange: " + msg) {}
};

struct InvalidInput : Error {
    explicit InvalidInput(const std::string& msg) : Error("InvalidInput: " + msg) {}
};

struct WeightError : Error {
    explicit WeightError(const std::string& msg) : Error("WeightError: " + msg) {}
};

struct DecompositionMismatch : Error {
    explicit DecompositionMismatch(const std::string& msg) : Error("DecompositionMismatch: " + msg) {}
};

struct NotCanonical : Error {
    explicit NotCanonical(const std::string& msg) : Error("NotCanonical: " + msg) {}
};

struct UnsupportedShape : Error {
    explicit UnsupportedShape(const std::string& msg) : Error("UnsupportedShape: " + msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("ParseError: " + msg) {}
};

}  // namespace zc
