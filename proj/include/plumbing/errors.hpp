#pragma once

#include <stdexcept>
#include <string>

namespace plumbing {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class precondition_error : public error {
 public:
  using error::error;
};

/// Raised when an operation needs a negative-definite intersection form.
class not_negative_definite : public error {
 public:
  using error::error;
};

/// A rational elimination step hit an exact zero pivot.
class degenerate_form : public error {
 public:
  degenerate_form(const std::string& vertex, const std::string& what)
      : error(what), vertex_(vertex) {}
  const std::string& vertex() const noexcept { return vertex_; }

 private:
  std::string vertex_;
};

}  // namespace plumbing
