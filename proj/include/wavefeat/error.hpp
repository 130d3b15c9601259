// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The wavefeat Authors

#pragma once

#include <stdexcept>
#include <string>

namespace wavefeat {

/// Precondition violated by a caller-supplied value (shape, range, finiteness).
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A (family, order) pair or wavelet name that the registry does not carry.
class UnsupportedWavelet : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// Mutually inconsistent pipeline or model options.
class InvalidConfig : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed dataset, grid or model file.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed file whose contents violate a dataset invariant.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Samples in one dataset file disagree on the wavenumber grid.
class InconsistentGrid : public DataError {
public:
    using DataError::DataError;
};

/// A sample row has no class label.
class MissingLabel : public DataError {
public:
    using DataError::DataError;
};

/// A numerical routine produced non-finite values or failed outright.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace wavefeat
