#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "commalg/field.hpp"

namespace commalg::cli {

enum class OutputFormat { Json, Pretty, Dot };

struct RunConfiguration {
  // parse | components | blockform | skeleton | incidence | gldim | verify |
  // random
  std::string command;
  // DSL file path, or "-" for the input stream.
  std::string input = "-";
  // When set, used instead of reading `input`.
  std::optional<std::string> inline_dsl;
  Field field = Field::rationals();
  std::optional<std::size_t> truncation;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::string> out_path;
  std::uint64_t seed = 0;
  std::size_t vertices = 5;
  std::size_t arrows = 8;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInternal = 2;

// Runs one command. Reports go to `out` (or the --out file); diagnostics go
// to `err`. Returns 0 on success, 1 on invalid input or a failed
// verification, 2 on an internal invariant violation.
int run(const RunConfiguration& config, std::istream& in, std::ostream& out,
        std::ostream& err);

OutputFormat parse_format(const std::string& name);

}  // namespace commalg::cli
