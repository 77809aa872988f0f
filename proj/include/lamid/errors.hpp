#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lamid {

struct InvalidGeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutOfDomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateDamageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSnapshotError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateSignalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidNoiseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateRangeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateEnsembleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularGainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed binary/CSV container. Carries the byte offset where parsing stopped.
struct FormatError : std::runtime_error {
    std::uint64_t byte_offset;
    FormatError(const std::string& what, std::uint64_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace lamid
