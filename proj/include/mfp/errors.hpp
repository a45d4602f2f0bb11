#pragma once

#include <stdexcept>
#include <string>

namespace mfp {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct BlockStructureViolation : std::runtime_error {
    explicit BlockStructureViolation(const std::string& what) : std::runtime_error(what) {}
};

struct UnsupportedOrder : std::runtime_error {
    explicit UnsupportedOrder(const std::string& what) : std::runtime_error(what) {}
};

struct IndexOutOfRange : std::out_of_range {
    explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

struct ZeroChannel : std::runtime_error {
    explicit ZeroChannel(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateEqualizer : std::runtime_error {
    explicit DegenerateEqualizer(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeMismatch : std::runtime_error {
    explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonFiniteGradient : std::runtime_error {
    explicit NonFiniteGradient(const std::string& what) : std::runtime_error(what) {}
};

struct AlphabetTooLarge : std::runtime_error {
    explicit AlphabetTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct SvdFailure : std::runtime_error {
    explicit SvdFailure(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct CheckpointError : std::runtime_error {
    explicit CheckpointError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mfp
