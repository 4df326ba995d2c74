// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef GAMMA0_ERRORS_HPP_
#define GAMMA0_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace gamma0 {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

class InvalidField : public Error {
 public:
    using Error::Error;
};

class ZeroInverse : public Error {
 public:
    ZeroInverse() : Error("inverse of zero") {}
};

class FieldTooLarge : public Error {
 public:
    using Error::Error;
};

class SingularCurve : public Error {
 public:
    SingularCurve() : Error("curve is singular: 4A^3 + 27B^2 = 0") {}
};

class PointsOnDifferentCurves : public Error {
 public:
    PointsOnDifferentCurves() : Error("point does not lie on this curve") {}
};

class NotAnAutomorphism : public Error {
 public:
    NotAnAutomorphism() : Error("unit does not satisfy u^4 A = A and u^6 B = B") {}
};

class UnsupportedLevel : public Error {
 public:
    explicit UnsupportedLevel(int level)
        : Error("unsupported level N = " + std::to_string(level) + " (expected 2 or 3)") {}
};

class DegreeCapExceeded : public Error {
 public:
    using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
    ZeroPolynomial() : Error("operation undefined on the zero polynomial") {}
};

class ConfigInvalid : public Error {
 public:
    using Error::Error;
};

class CertificateMismatch : public Error {
 public:
    using Error::Error;
};

}  // namespace gamma0

#endif  // GAMMA0_ERRORS_HPP_
