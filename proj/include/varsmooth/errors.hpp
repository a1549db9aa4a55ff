#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace varsmooth {

// Mismatched block structure or incompatible dimensions.
class shape_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Parameter outside its documented range (negative sigma, gamma <= 0, ...).
class param_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Malformed file contents; carries the byte offset at which parsing stopped.
class format_error : public std::runtime_error {
public:
    format_error(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (at byte " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t byte_offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

} // namespace varsmooth
