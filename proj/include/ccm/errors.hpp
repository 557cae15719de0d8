#pragma once

#include <stdexcept>
#include <string>

namespace ccm {

/// Base class for all library-specific failures.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A sign, boundary, or code could not be certified at the working tolerance.
class ResolutionExceeded : public Error {
public:
    using Error::Error;
};

/// An atlas lookup required a tongue that was never computed.
class MissingCenter : public Error {
public:
    using Error::Error;
};

/// An intermediate derivative fell below the usable threshold.
class DegenerateDerivative : public Error {
public:
    using Error::Error;
};

/// An orbit gap collapsed below the usable threshold.
class DegenerateInterval : public Error {
public:
    using Error::Error;
};

/// A configurable size or length limit was hit.
class LimitExceeded : public Error {
public:
    using Error::Error;
};

/// Frostman mass inequality failed at some cell for the chosen cutoff.
class CutoffTooSmall : public Error {
public:
    using Error::Error;
};

/// Cover-sum ratios do not straddle 1 within the available depths.
class InsufficientDepth : public Error {
public:
    using Error::Error;
};

/// A box-counting scale is finer than the resolved tongue scale.
class ScaleTooFine : public Error {
public:
    using Error::Error;
};

/// An atlas file failed validation (hash, invariants, or truncation).
class CorruptAtlas : public Error {
public:
    using Error::Error;
};

/// An atlas file declares a format version this build does not read.
class VersionMismatch : public Error {
public:
    using Error::Error;
};

} // namespace ccm
