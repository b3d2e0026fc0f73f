#pragma once

#include <stdexcept>
#include <string>

namespace cohit {

// A run was refused (or stopped cleanly) because a configured ceiling
// would be exceeded: column count, resident row bytes, count overflow.
class resource_limit_error : public std::runtime_error {
public:
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// A cache blob failed validation (magic, version, length or checksum).
class cache_corruption_error : public std::runtime_error {
public:
    explicit cache_corruption_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cohit
