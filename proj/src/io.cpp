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

#include "stoq/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <limits>
#include <sstream>

#include "stoq/errors.hpp"

namespace stoq {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  return hash == std::string_view::npos ? line : line.substr(0, hash);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw InputError("line " + std::to_string(line) + ": " + what);
}

double parse_plain(std::string_view s) {
  double x = 0.0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, x);
  if (ec != std::errc() || ptr != last || first == last) {
    throw InputError("bad number '" + std::string(s) + "'");
  }
  return x;
}

template <class Int>
Int parse_uint(std::string_view s, int line, const char* what) {
  Int x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(line, std::string("bad ") + what + " '" + std::string(s) + "'");
  }
  return x;
}

struct Factor {
  Pauli p;
  Vertex q;
};

Factor parse_factor(const std::string& tok, int line, std::size_t n) {
  const auto at = tok.find('@');
  if (at != 1) fail(line, "expected <P>@<q>, got '" + tok + "'");
  const auto p = pauli_from_char(tok[0]);
  if (!p) fail(line, "unknown Pauli '" + tok.substr(0, 1) + "'");
  const auto q = parse_uint<Vertex>(std::string_view(tok).substr(2), line, "qubit index");
  if (q >= n) fail(line, "qubit " + std::to_string(q) + " out of range");
  return {*p, q};
}

}  // namespace

double parse_coefficient(std::string_view text) {
  const auto slash = text.find('/');
  double x = 0.0;
  if (slash == std::string_view::npos) {
    x = parse_plain(text);
  } else {
    const double p = parse_plain(text.substr(0, slash));
    const double q = parse_plain(text.substr(slash + 1));
    if (q == 0.0) throw InputError("zero denominator in '" + std::string(text) + "'");
    x = p / q;
  }
  if (!std::isfinite(x)) throw InputError("non-finite coefficient '" + std::string(text) + "'");
  return x;
}

ParsedHamiltonian parse_hamiltonian(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::optional<ParsedHamiltonian> out;
  while (std::getline(in, raw)) {
    ++line;
    const auto toks = tokenize(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "qubits") {
      if (out) fail(line, "duplicate 'qubits' line");
      if (toks.size() != 2) fail(line, "expected 'qubits <n>'");
      const auto n = parse_uint<std::size_t>(toks[1], line, "qubit count");
      if (n == 0) fail(line, "qubit count must be positive");
      out.emplace();
      out->h = Hamiltonian(n);
    } else if (toks[0] == "term") {
      if (!out) fail(line, "'term' before 'qubits'");
      if (toks.size() != 3 && toks.size() != 4) fail(line, "expected 1 or 2 Pauli factors");
      double c = 0.0;
      try {
        c = parse_coefficient(toks[1]);
      } catch (const InputError& e) {
        fail(line, e.what());
      }
      const std::size_t n = out->h.n_qubits();
      const Factor a = parse_factor(toks[2], line, n);
      if (toks.size() == 3) {
        out->h.add(a.q, a.p, c);
      } else {
        const Factor b = parse_factor(toks[3], line, n);
        if (a.q == b.q) fail(line, "both factors act on qubit " + std::to_string(a.q));
        out->h.add(a.q, a.p, b.q, b.p, c);
      }
      out->literals.push_back({line, toks[1], c});
    } else {
      fail(line, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!out) throw InputError("missing 'qubits' line");
  return std::move(*out);
}

std::string read_text_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

ParsedHamiltonian read_hamiltonian_file(const std::string& path) {
  return parse_hamiltonian(read_text_file(path));
}

std::string format_double(double x) {
  if (x == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

std::string serialize_hamiltonian(const Hamiltonian& h) {
  std::string out = "qubits " + std::to_string(h.n_qubits()) + "\n";
  for (const auto& [k, c] : h.one_local()) {
    out += "term " + format_double(c) + " " + to_char(k.p) + "@" + std::to_string(k.v) + "\n";
  }
  for (const auto& [k, c] : h.two_local()) {
    out += "term " + format_double(c) + " " + to_char(k.pu) + "@" + std::to_string(k.u) + " " +
           to_char(k.pv) + "@" + std::to_string(k.v) + "\n";
  }
  return out;
}

std::string serialize_rxc3_hamiltonian(std::size_t n_qubits, const std::vector<Rxc3Term>& terms) {
  std::string out = "qubits " + std::to_string(n_qubits) + "\n";
  for (const auto& t : terms) {
    out += std::string("term 1 ") + to_char(t.pa) + "@" + std::to_string(t.a) + " " +
           to_char(t.pb) + "@" + std::to_string(t.b) + "\n";
  }
  return out;
}

Rxc3Instance parse_rxc3(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  std::optional<std::size_t> n;
  std::vector<std::array<std::uint32_t, 3>> subsets;
  while (std::getline(in, raw)) {
    ++line;
    const auto toks = tokenize(strip_comment(raw));
    if (toks.empty()) continue;
    if (toks[0] == "elements") {
      if (n) fail(line, "duplicate 'elements' line");
      if (toks.size() != 2) fail(line, "expected 'elements <N>'");
      n = parse_uint<std::size_t>(toks[1], line, "element count");
    } else if (toks[0] == "set") {
      if (!n) fail(line, "'set' before 'elements'");
      if (toks.size() != 4) fail(line, "expected 'set a b c'");
      std::array<std::uint32_t, 3> t{};
      for (int i = 0; i < 3; ++i) t[i] = parse_uint<std::uint32_t>(toks[i + 1], line, "element");
      subsets.push_back(t);
    } else {
      fail(line, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!n) throw InputError("missing 'elements' line");
  return Rxc3Instance(*n, std::move(subsets));
}

Rxc3Instance read_rxc3_file(const std::string& path) { return parse_rxc3(read_text_file(path)); }

std::string serialize_rxc3(const Rxc3Instance& inst) {
  std::string out = "elements " + std::to_string(inst.n_elements()) + "\n";
  for (const auto& [a, b, c] : inst.subsets()) {
    out += "set " + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) + "\n";
  }
  return out;
}

}  // namespace stoq
