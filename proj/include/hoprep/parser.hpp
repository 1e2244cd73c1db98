#pragma once

#include <stdexcept>
#include <string>

#include "hoprep/clause.hpp"

namespace hoprep {

struct SourceSpan {
  size_t start = 0;  // byte offsets, start <= end
  size_t end = 0;
  int line = 1;
  int column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, const std::string& msg)
      : std::runtime_error("line " + std::to_string(span.line) + ":" +
                           std::to_string(span.column) + ": " + msg),
        span_(span) {}
  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

// Reads a whole problem in the native .chol format. Declarations are
// type-checked as they appear; clauses are normalized on construction.
ClauseSet parse_problem(const std::string& text);

// Deterministic printer: declarations in declaration order, clauses in set
// order, canonical variable names, one item per line.
std::string print_problem(const ClauseSet& set);

}  // namespace hoprep
