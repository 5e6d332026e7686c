#pragma once

#include <stdexcept>
#include <string>

namespace geotime {

// Bad or inconsistent input data (corpus, judgments, config, unknown ids).
struct DataError : std::runtime_error {
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// Model-provider failure (transport, protocol, dimension mismatch).
struct ProviderError : std::runtime_error {
    explicit ProviderError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geotime
