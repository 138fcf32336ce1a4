// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace tdsnn {

struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown by the readout fit when the Gram matrix is rank-deficient beyond
/// tolerance at lambda = 0; the caller should raise lambda.
struct SingularSystemError : std::runtime_error {
  explicit SingularSystemError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace tdsnn
