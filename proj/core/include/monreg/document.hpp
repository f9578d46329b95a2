#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "monreg/dfixed.hpp"
#include "monreg/monomial_ideal.hpp"

namespace monreg {

/// Parse failure with a 1-based source position.
class ParseError : public std::invalid_argument {
 public:
  ParseError(int line, int column, const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// A parsed ideal description:
///
///   # comment
///   ring 4
///   dseq p2 1,2,4           (optional, any number)
///   x1^7, x1^5 x2, x1^2*x2^4
///
/// Factors multiply by juxtaposition or '*'; the exponent defaults to 1; "1" is
/// the unit monomial. Generators are separated by commas and may continue on
/// the following lines after a comma.
struct IdealDocument {
  int num_vars = 0;
  std::vector<Monomial> generators;  // as written
  std::vector<std::pair<std::string, DSequence>> dsequences;

  MonomialIdeal ideal() const { return MonomialIdeal(num_vars, generators); }
  /// Named d-sequence, or nullptr.
  const DSequence* find_dsequence(std::string_view name) const;
};

IdealDocument parse_document(std::string_view text);
MonomialIdeal parse_ideal(std::string_view text);

/// A single monomial such as "x2^2 x3". With num_vars = 0 the ring is the
/// smallest one containing every variable mentioned.
Monomial parse_monomial(std::string_view text, int num_vars = 0);

/// Same document with minimal generators in canonical order.
IdealDocument canonicalize(const IdealDocument& doc);

/// Text form accepted by parse_document.
std::string format_document(const IdealDocument& doc);

}  // namespace monreg
