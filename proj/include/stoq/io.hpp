// Copyright 2026 The stoq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "stoq/pauli.hpp"
#include "stoq/rxc3.hpp"

namespace stoq {

/// Coefficient literal as written in the input, with its 1-based line.
struct CoefficientLiteral {
  int line = 0;
  std::string text;
  double value = 0.0;
};

struct ParsedHamiltonian {
  Hamiltonian h{1};
  std::vector<CoefficientLiteral> literals;
};

/// Decimal or `p/q` literal to the nearest double. Throws InputError.
double parse_coefficient(std::string_view text);

/// Text format:
///   qubits <n>
///   term <coeff> <P>@<q> [<P>@<q>]
/// with `#` comments and blank lines. Repeated keys are summed. Throws
/// InputError with the line number on malformed input.
ParsedHamiltonian parse_hamiltonian(std::string_view text);
ParsedHamiltonian read_hamiltonian_file(const std::string& path);

/// Shortest round-trip decimal form.
std::string format_double(double x);

/// Canonical text: one-local terms then two-local terms, both in key order.
std::string serialize_hamiltonian(const Hamiltonian& h);

/// Unit-coefficient terms in the order given, e.g. `term 1 X@0 X@1`.
std::string serialize_rxc3_hamiltonian(std::size_t n_qubits, const std::vector<Rxc3Term>& terms);

/// `elements N` then `set a b c` lines, `#` comments allowed.
Rxc3Instance parse_rxc3(std::string_view text);
Rxc3Instance read_rxc3_file(const std::string& path);
std::string serialize_rxc3(const Rxc3Instance& inst);

/// Reads a whole file; throws InputError when it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace stoq
