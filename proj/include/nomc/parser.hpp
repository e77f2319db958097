#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "nomc/unify.hpp"

namespace nomc {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t col)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) +
                           ": " + message),
        line(line),
        col(col) {}

  std::size_t line;
  std::size_t col;
};

/// One problem per file: an optional signature, an optional `new` binder,
/// then either a judgement `ctx |- s = t` or a goal `s =? t, ...`.
struct ProblemFile {
  enum class Kind { Judgement, Goal };

  Signature sig;
  Kind kind = Kind::Judgement;
  std::optional<Judgement> judgement;  // Kind::Judgement
  UnifProblem goal;                    // Kind::Goal
};

ProblemFile parse_file(std::string_view text);
std::string print_file(const ProblemFile& file);

/// Fragment parsers, mainly for tests and tools.
Perm parse_perm(std::string_view text);
Term parse_term(std::string_view text, const Signature& sig);
/// Accepts `new a b . { ... }` or a bare `{ ... }`.
Context parse_context(std::string_view text);

}  // namespace nomc
