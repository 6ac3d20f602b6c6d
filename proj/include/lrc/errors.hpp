#ifndef LRC_ERRORS_HPP
#define LRC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrc {

/// Rejected input: a constructor or operation precondition does not hold.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A recovery set does not contain enough surviving entries to interpolate.
class InsufficientDataError : public std::runtime_error {
 public:
  InsufficientDataError(std::size_t direction, std::size_t needed, std::size_t available)
      : std::runtime_error("direction " + std::to_string(direction) + ": need " +
                           std::to_string(needed) + " surviving entries in the recovery set, have " +
                           std::to_string(available)),
        direction_(direction),
        needed_(needed),
        available_(available) {}

  std::size_t direction() const noexcept { return direction_; }
  std::size_t needed() const noexcept { return needed_; }
  std::size_t available() const noexcept { return available_; }

 private:
  std::size_t direction_;
  std::size_t needed_;
  std::size_t available_;
};

/// File or stream could not be read/written/parsed.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lrc

#endif  // LRC_ERRORS_HPP
