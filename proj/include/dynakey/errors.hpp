#pragma once

#include <stdexcept>
#include <string>

namespace dynakey {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed configuration or input file contents. CLI exit code 2.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

/// Filesystem-level failure. CLI exit code 3.
class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(what) {}
};

#define DYNAKEY_DEFINE_ERROR(NAME, BASE)                            \
  class NAME : public BASE {                                        \
   public:                                                          \
    explicit NAME(const std::string& what) : BASE(#NAME ": " + what) {} \
  }

// two-view geometry
DYNAKEY_DEFINE_ERROR(DegenerateMotion, Error);
DYNAKEY_DEFINE_ERROR(DegenerateLine, Error);
DYNAKEY_DEFINE_ERROR(InsufficientMatches, Error);
DYNAKEY_DEFINE_ERROR(NoConsensus, Error);
DYNAKEY_DEFINE_ERROR(BehindCamera, Error);
DYNAKEY_DEFINE_ERROR(NonPositiveDepth, Error);

// mask / classifier / interaction
DYNAKEY_DEFINE_ERROR(NegativeDepth, Error);
DYNAKEY_DEFINE_ERROR(NegativeError, Error);
DYNAKEY_DEFINE_ERROR(OutOfBounds, Error);
DYNAKEY_DEFINE_ERROR(DimensionMismatch, Error);
DYNAKEY_DEFINE_ERROR(MissingDepth, Error);
DYNAKEY_DEFINE_ERROR(NoNeighbors, Error);

// config and file formats
DYNAKEY_DEFINE_ERROR(InvalidConfig, ConfigError);
DYNAKEY_DEFINE_ERROR(NonMonotonicTimestamps, ConfigError);
DYNAKEY_DEFINE_ERROR(UnsupportedBitDepth, ConfigError);
DYNAKEY_DEFINE_ERROR(InsufficientOverlap, ConfigError);
DYNAKEY_DEFINE_ERROR(ZeroBaseline, ConfigError);

#undef DYNAKEY_DEFINE_ERROR

/// Text-format violation carrying the offending line number.
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& path, int line, const std::string& what)
      : ConfigError("ParseError: " + path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace dynakey
