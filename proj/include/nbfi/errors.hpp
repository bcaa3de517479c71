#pragma once

#include <stdexcept>
#include <string>

namespace nbfi {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parameter is outside its mathematical domain (r <= 0 etc.).
struct DomainError : Error {
    using Error::Error;
};

// Allocation radii break ordering or exceed the reachable range of a class.
struct ConstraintViolation : Error {
    using Error::Error;
};

// The link budget has no positive-distance solution, or a sensor is assigned
// a bitrate it cannot close the link with.
struct InfeasibleLink : Error {
    using Error::Error;
};

struct IntegrationNotConverged : Error {
    using Error::Error;
};

// No collision traffic exists, so retry statistics are undefined.
struct DegenerateTraffic : Error {
    using Error::Error;
};

// Every packet is lost; the delivered-packet delay is undefined.
struct AllLost : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

// Optimizer: no radii tuple satisfies the constraints.
struct InfeasibleRegion : Error {
    using Error::Error;
};

// Frame codec errors.
struct BadPreamble : Error {
    using Error::Error;
};
struct CrcMismatch : Error {
    using Error::Error;
};
struct LengthError : Error {
    using Error::Error;
};

}  // namespace nbfi
