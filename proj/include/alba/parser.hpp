// ASCII concrete syntax.
//
//   formula  ::= T | F | p | 'i | $x | ~f | f /\ f | f \/ f | f -> f
//              | box f | dia f | bbox f | bdia f | A f | E f
//              | @'i f | @$x f | down $x . f | all $x . f | ex $x . f | ( f )
//   ineq     ::= formula <= formula
//   mega     ::= atom (& atom)*        atom ::= ineq | forall $x [ mega ] | ( mega )
//   stmt     ::= mega [=> atom]
//
// Unary operators bind tightest, then /\, \/ (both left associative) and
// -> (right associative). Binders extend as far right as possible.
#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <variant>

#include "alba/formula.hpp"

namespace alba {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, std::set<std::string> expected, const std::string& found);
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::set<std::string>& expected() const { return expected_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::set<std::string> expected_;
};

Formula parse_formula(const std::string& text);
Inequality parse_inequality(const std::string& text);
Mega parse_mega(const std::string& text);
/// Inequality for a single leaf, QuasiUQInequality when `=>` is present,
/// Mega otherwise.
Statement parse_statement(const std::string& text);
/// A bare formula, or an inequality when the text contains `<=`.
std::variant<Formula, Inequality> parse(const std::string& text);

}  // namespace alba
