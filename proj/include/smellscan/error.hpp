#pragma once

#include <stdexcept>
#include <string>

namespace smellscan {

/// Base for every error the pipeline reports to the caller.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad command-line input, unreadable source root, malformed rule config.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Output file could not be written, input file could not be read.
class IoError : public Error {
public:
    using Error::Error;
};

/// Ground-truth or provenance file failed to load.
class LoadError : public Error {
public:
    using Error::Error;
};

/// A finding has no matching ground-truth entry.
class EvaluationError : public Error {
public:
    using Error::Error;
};

} // namespace smellscan
