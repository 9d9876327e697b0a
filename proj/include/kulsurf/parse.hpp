#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "kulsurf/multipoly.hpp"
#include "kulsurf/projective.hpp"

namespace kulsurf {

/// Syntax or validity error in textual input, carrying the 1-based line and
/// column of the offending character; at end of input the column is one
/// past the last character.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, int line, int column);
    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

/// Parses an expression in the variables X1, X2, X3 into a polynomial over
/// the rationals. Literals are nonnegative integers or contiguous rationals
/// a/b; operators are + - * ^ with parentheses, and '#' starts a comment
/// running to the end of the line. Precedence from loosest to tightest:
/// binary + and -, then *, then unary -, then ^; exponentiation is
/// right-associative and its exponent must be a nonnegative integer.
/// Multiplication is always explicit. Throws ParseError.
MultiPoly parse_polynomial(const std::string& text);

/// Serializes in the surface syntax of parse_polynomial;
/// parse_polynomial(print_polynomial(p)) == p for every p in three
/// variables.
std::string print_polynomial(const MultiPoly& p);

/// Reads one polynomial expression from a UTF-8 text file; '#' comments and
/// line breaks count as spaces. Throws ParseError with positions in the
/// file, or std::runtime_error when the file cannot be read.
MultiPoly read_curve_file(const std::string& path);

/// Parses "a,b,c" — three integers separated by commas, spaces allowed —
/// into the canonical primitive representative. Throws ParseError, in
/// particular for the zero triple.
ProjPoint parse_point(const std::string& text);

/// Parses a decimal seed in [0, 2^63 - 1]. Throws ParseError.
std::uint64_t parse_seed(const std::string& text);

}  // namespace kulsurf
