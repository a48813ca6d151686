#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace epitrend {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// ingest
class ParseError : public Error { using Error::Error; };
class CellError : public Error {
  public:
    CellError(const std::string& what, int row, int column)
        : Error(what), row(row), column(column) {}
    int row;
    int column;
};
class DuplicateRegionError : public Error { using Error::Error; };
class MissingPopulationError : public Error { using Error::Error; };
class AxisMismatchError : public Error { using Error::Error; };
class EmptyAggregateError : public Error { using Error::Error; };
class UnknownRegionError : public Error { using Error::Error; };

/// Raised when an assembled series cannot satisfy the type invariants;
/// carries one message per violated invariant.
class InvariantError : public Error {
  public:
    InvariantError(const std::string& what, std::vector<std::string> violations)
        : Error(what), violations(std::move(violations)) {}
    std::vector<std::string> violations;
};

// epi
class RangeError : public Error { using Error::Error; };
class NoCasesError : public Error { using Error::Error; };

// design
class EtaRangeError : public Error { using Error::Error; };

// arima
class ParamError : public Error { using Error::Error; };

// select
class ScanFailedError : public Error { using Error::Error; };

// diagnostics
class DegreesOfFreedomError : public Error { using Error::Error; };
class DegenerateResidualError : public Error { using Error::Error; };

// r0
class TruncationError : public Error { using Error::Error; };
class NoTransmissionError : public Error { using Error::Error; };

// cli
class ConfigError : public Error { using Error::Error; };

}  // namespace epitrend
