#pragma once

#include <stdexcept>
#include <string>

namespace exciton {

/// Invalid physical parameters or indices outside their allowed range.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Observation geometry the far-field model cannot describe (coincident
/// points, out-of-plane observation, zero separation).
class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration problem. `key_path` names the offending entry, e.g.
/// "chain.dipole_angle".
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key_path, const std::string& message)
        : std::runtime_error(key_path.empty() ? message : key_path + ": " + message),
          key_path_(std::move(key_path))
    {
    }

    const std::string& key_path() const noexcept { return key_path_; }

private:
    std::string key_path_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace exciton
