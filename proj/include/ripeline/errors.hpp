#pragma once

#include <stdexcept>
#include <string>

namespace ripeline {

// Base type for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad configuration values (k larger than the image, zero epochs, ...).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Malformed or mismatched inputs (dimension mismatch, wrong thumbnail size).
class InputError : public Error {
public:
    using Error::Error;
};

// Coordinate outside the image raster.
class CoordinateError : public Error {
public:
    using Error::Error;
};

// Degenerate region (empty bounding box and similar).
class RegionError : public Error {
public:
    using Error::Error;
};

// Training preconditions violated (single-class data, missing class).
class TrainingError : public Error {
public:
    using Error::Error;
};

// Loss became non-finite during training; message names the epoch.
class DivergenceError : public Error {
public:
    using Error::Error;
};

// Model shape does not match the data handed to it.
class ModelError : public Error {
public:
    using Error::Error;
};

// A metric whose denominator is zero. Never coerced to 0.
class UndefinedMetricError : public Error {
public:
    using Error::Error;
};

// Dataset ingestion problems (unknown class directory).
class IngestError : public Error {
public:
    using Error::Error;
};

// Stratified split cannot be formed.
class SplitError : public Error {
public:
    using Error::Error;
};

// File and serialization failures.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace ripeline
