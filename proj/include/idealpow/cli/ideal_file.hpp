#pragma once

// Plain-text ideal files:
//
//   # optional comment lines
//   nvars: 2
//   4 0
//   3 2
//   0 3
//
// One generator per line as nvars space-separated nonnegative integers.

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "idealpow/ideal.hpp"

namespace idealpow::cli {

class ParseError : public ParameterError {
 public:
  ParseError(const std::string& source, std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

struct IdealFile {
  std::string path;
  std::size_t arity = 0;
  std::vector<Monomial> generators;  // in file order

  MonomialIdeal ideal() const { return MonomialIdeal::generated_by(generators); }
};

IdealFile parse_ideal(std::istream& in, const std::string& source = "<stdin>");
IdealFile parse_ideal(std::string_view text, const std::string& source = "<string>");
IdealFile read_ideal_file(const std::filesystem::path& path);

/// Canonical text form: optional comment, header, generators in ideal order.
std::string emit_ideal(const MonomialIdeal& ideal, std::string_view comment = {});
void write_ideal_file(const std::filesystem::path& path, const MonomialIdeal& ideal,
                      std::string_view comment = {});

}  // namespace idealpow::cli
