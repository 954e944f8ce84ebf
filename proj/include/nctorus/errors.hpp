#pragma once

#include <stdexcept>
#include <string>

namespace nctorus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class GridTooSmallError : public Error { using Error::Error; };
class GridMismatchError : public Error { using Error::Error; };
class InvalidArgumentError : public Error { using Error::Error; };
class InverseSolveError : public Error { using Error::Error; };
class PositivityError : public Error { using Error::Error; };
class AlphaMismatchError : public Error { using Error::Error; };
class OutOfBoxError : public Error { using Error::Error; };
class TailMassError : public Error { using Error::Error; };
class AliasingError : public Error { using Error::Error; };
class RouteDisagreementError : public Error { using Error::Error; };
class SingularBlockError : public Error { using Error::Error; };
class ConfigError : public Error { using Error::Error; };

}  // namespace nctorus
