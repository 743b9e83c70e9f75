#pragma once

#include <stdexcept>

namespace neutro {

// An exact-but-exponential operation refused to run past its cap.
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace neutro
