// Copyright 2026 The lcdgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCDGRAPH_ERROR_HPP
#define LCDGRAPH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lcdg {

enum class Errc {
  division_by_zero,
  bad_element,
  singular_matrix,
  not_lcd,
  no_nonzero_codeword,
  budget_exceeded,
  wrong_field,
  precondition_failed,
  theorem_violation,
  not_paley_order,
  not_idempotent,
  not_even,
  bad_input,
  not_two_graph_projector,
  degenerate,
  not_applicable,
  parse_error,
};

constexpr std::string_view errc_name(Errc e) noexcept {
  switch (e) {
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::bad_element: return "BadElement";
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::not_lcd: return "NotLCD";
    case Errc::no_nonzero_codeword: return "NoNonzeroCodeword";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::wrong_field: return "WrongField";
    case Errc::precondition_failed: return "PreconditionFailed";
    case Errc::theorem_violation: return "TheoremViolation";
    case Errc::not_paley_order: return "NotPaleyOrder";
    case Errc::not_idempotent: return "NotIdempotent";
    case Errc::not_even: return "NotEven";
    case Errc::bad_input: return "BadInput";
    case Errc::not_two_graph_projector: return "NotTwoGraphProjector";
    case Errc::degenerate: return "Degenerate";
    case Errc::not_applicable: return "NotApplicable";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the Errc kinds.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code), message_(message) {}

  Errc code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  Errc code_;
  std::string message_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace lcdg

#endif  // LCDGRAPH_ERROR_HPP
