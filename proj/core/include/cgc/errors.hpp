#pragma once

#include <stdexcept>
#include <string>

namespace cgc {

/// Malformed carrier, unknown element, or mismatched domains.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A join (or meet) that the carrier does not provide.
class LatticeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failures while evaluating or analyzing a WHILE program (unbound
/// variables, arithmetic overflow).
class AnalysisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error carrying a 1-based source position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + msg),
        m_line(line),
        m_column(column) {}

  int line() const { return m_line; }
  int column() const { return m_column; }

 private:
  int m_line;
  int m_column;
};

} // namespace cgc
