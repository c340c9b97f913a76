#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace projdim {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind {
    NotCoprime,
    OutOfRange,
    LengthMismatch,
    CapExceeded,
    NotIrreducible,
    DegenerateDenominator,
    NotConverged,
    ZeroImage,
    EmptySample,
    DegenerateEigenvector,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Closed interval, used for certified eigenvalue bounds (values or logs).
struct Enclosure {
    double lower = 0.0;
    double upper = 0.0;
    double mid() const { return 0.5 * (lower + upper); }
    double width() const { return upper - lower; }
    bool contains(double x, double slack = 0.0) const {
        return x >= lower - slack && x <= upper + slack;
    }
};

// log of a positive big integer without overflowing a double.
double log_big(const BigInt& x);

constexpr double kLog2 = 0.69314718055994530942;
constexpr double kLog3 = 1.09861228866810969140;
constexpr double kLog9 = 2.19722457733621938279;

inline constexpr const char* kVersion = PROJDIM_VERSION;

}  // namespace projdim
