// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>

namespace twobridge {

/// Precondition or input violation. The CLI maps this to exit code 2.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computed result contradicted a mathematical invariant. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Checkpoint or output file could not be read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twobridge
