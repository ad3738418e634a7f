#pragma once

#include <stdexcept>
#include <string>

namespace nfbeam {

// Invalid scenario/configuration input; maps to process exit code 2.
class config_error : public std::runtime_error {
  public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure (segmentation, bracketing, root finding); exit code 3.
class numeric_error : public std::runtime_error {
  public:
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nfbeam
