#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "debate/framework.hpp"

namespace debate {

class ApxError : public std::runtime_error {
 public:
  ApxError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Parses the ICCMA apx surface syntax: `arg(NAME).` and `att(A,B).`
/// statements, `%` comments to end of line, arbitrary whitespace. Several
/// statements may share a line. Declaration order is preserved.
ArgumentationFramework parse_apx(std::string_view text);
ArgumentationFramework load_apx(const std::string& path);

/// One statement per line: all `arg` lines, then all `att` lines.
std::string emit_apx(const ArgumentationFramework& af);

/// Independent Bernoulli(p) attack for every ordered pair x != y, arguments
/// named a0..a(n-1). Pure function of (n, p, seed).
ArgumentationFramework generate_random(std::size_t n, double p, std::uint64_t seed);

}  // namespace debate
