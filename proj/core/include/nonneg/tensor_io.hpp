#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

#include "nonneg/errors.hpp"
#include "nonneg/tensor.hpp"

namespace nonneg {

/// Malformed tensor text. line() is one-based; 0 means the whole input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Text format:
///
///     # comment
///     tensor <order> <dim>
///     <i1> ... <im> <value>
///
/// Indices are one-based, values nonnegative decimals. Blank lines and lines
/// whose first non-blank character is '#' are ignored. Zero values are
/// accepted and dropped; repeated index tuples are rejected.
Tensor parse_tensor(std::string_view text);

Tensor read_tensor_file(const std::filesystem::path& path);

/// Inverse of parse_tensor; values use the shortest round-trip decimal form.
std::string render_tensor(const Tensor& t);

}  // namespace nonneg
