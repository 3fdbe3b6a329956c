#pragma once

#include <stdexcept>
#include <string>

namespace qpa {

// Thrown when an exhaustive enumeration or exact-oracle request exceeds its
// configured cap. The CLI maps this to its resource-limit exit code.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown for malformed spectra and for operations that need a strictly
// positive spectral gap p_d - p_{d-1}.
class SpectrumError : public std::runtime_error {
 public:
  explicit SpectrumError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qpa
