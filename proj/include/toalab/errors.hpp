#ifndef TOALAB_ERRORS_HPP
#define TOALAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace toalab {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A numeric argument violates a precondition (negative time, bad grid, ...).
class invalid_parameter : public error {
public:
  using error::error;
};

// A config file or flag set failed structural validation.
class validation_error : public error {
public:
  using error::error;
};

// A config file could not be parsed at all.
class parse_error : public error {
public:
  using error::error;
};

// The spatial grid cannot hold the packet (edge leakage or wrap-around).
class domain_too_small : public error {
public:
  using error::error;
};

// A distribution's normalization integral vanished or is negative.
class degenerate_normalization : public error {
public:
  using error::error;
};

// The classical time-momentum map is singular (detector on the packet center).
class undefined_map : public error {
public:
  using error::error;
};

// A classical scenario outside the model's assumptions.
class unsupported_scenario : public error {
public:
  using error::error;
};

class io_error : public error {
public:
  using error::error;
};

} // namespace toalab

#endif
