#pragma once

#include <revsynth/permutation.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace revsynth
{

/// Malformed input; `line` and `column` are 1-based, 0 when unknown.
class ParseError : public std::runtime_error
{
public:
  ParseError( std::string const& message, std::size_t line = 0, std::size_t column = 0 );

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/*! \brief Reads a function specification.
 *
 * The first number is the width n; it is followed by the 2^n outputs for the
 * inputs 0, 1, ... in order, separated by whitespace or commas. `#` starts
 * a comment running to the end of the line.
 */
Permutation parse_spec( std::string_view text );

/// Inverse of `parse_spec`: width on the first line, outputs on the second.
std::string write_spec( Permutation const& p );

Permutation read_spec_file( std::string const& path );

} // namespace revsynth
