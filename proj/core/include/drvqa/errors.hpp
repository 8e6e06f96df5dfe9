// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace drvqa {

// Invalid argument or precondition violation.
class domain_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Problem size exceeds a configured cap.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Numerical breakdown (singular factorization, PSD violation, solver stall).
class numerical_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration input.
class config_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// File I/O failure; message carries the path.
class io_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace drvqa
