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

// Command-line front end. Exit codes: 0 positive decision, 1 negative
// decision, 2 usage or input error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "stoq/stoq.h"

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct HamDeleter {
  void operator()(stoq_hamiltonian* h) const { stoq_hamiltonian_destroy(h); }
};
struct Rxc3Deleter {
  void operator()(stoq_rxc3* r) const { stoq_rxc3_destroy(r); }
};
using HamPtr = std::unique_ptr<stoq_hamiltonian, HamDeleter>;
using Rxc3Ptr = std::unique_ptr<stoq_rxc3, Rxc3Deleter>;

// Thrown to unwind with a diagnostic and exit code 2.
struct UsageFailure {
  std::string message;
};

void check(stoq_status s, const std::string& context) {
  if (s != STOQ_OK) {
    throw UsageFailure{context + ": " + stoq_status_name(s) + ": " + stoq_last_error()};
  }
}

HamPtr load(const std::string& path) {
  stoq_hamiltonian* h = nullptr;
  check(stoq_hamiltonian_read_file(path.c_str(), &h), path);
  return HamPtr(h);
}

// Takes ownership of a library string and prints it.
void emit(char* text) {
  if (text != nullptr) std::fputs(text, stdout);
  stoq_string_free(text);
}

void write_file(const std::string& path, const char* text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageFailure{"cannot write '" + path + "'"};
  f << text;
}

struct Range {
  double lo = 0;
  double hi = 0;
  int steps = 1;
};

Range parse_range(const std::string& s) {
  const auto a = s.find(':');
  const auto b = s.find(':', a == std::string::npos ? a : a + 1);
  if (a == std::string::npos || b == std::string::npos) {
    throw UsageFailure{"range '" + s + "' is not lo:hi:steps"};
  }
  try {
    std::size_t used = 0;
    Range r;
    const std::string lo = s.substr(0, a), hi = s.substr(a + 1, b - a - 1), st = s.substr(b + 1);
    r.lo = std::stod(lo, &used);
    if (used != lo.size()) throw std::invalid_argument(lo);
    r.hi = std::stod(hi, &used);
    if (used != hi.size()) throw std::invalid_argument(hi);
    r.steps = std::stoi(st, &used);
    if (used != st.size() || r.steps < 2) throw std::invalid_argument(st);
    return r;
  } catch (const std::logic_error&) {
    throw UsageFailure{"range '" + s + "' is not lo:hi:steps"};
  }
}

int verdict(int positive) { return positive ? kPositive : kNegative; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide stoquasticity of 2-local qubit Hamiltonians"};
  app.require_subcommand(1);

  std::string file;
  std::string trace_path;
  auto* xyz = app.add_subcommand("check-xyz", "XYZ Heisenberg model decision");
  xyz->add_option("file", file, "Hamiltonian file")->required();
  xyz->add_option("--trace", trace_path, "write the JSON step trace here");

  auto* two = app.add_subcommand("check-2q", "two-qubit decision with witness");
  two->add_option("file", file, "Hamiltonian file")->required();

  auto* dec = app.add_subcommand("decompose", "fixed-basis cone decomposition");
  dec->add_option("file", file, "Hamiltonian file")->required();

  auto* real = app.add_subcommand("realness", "realness under local rotations");
  real->add_option("file", file, "Hamiltonian file")->required();

  std::string mode = "zmatrix";
  std::size_t max_qubits = 0;
  auto* orc = app.add_subcommand("oracle", "exhaustive single-qubit Clifford search");
  orc->add_option("file", file, "Hamiltonian file")->required();
  orc->add_option("--mode", mode, "zmatrix or realness")
      ->check(CLI::IsMember({"zmatrix", "realness"}));
  orc->add_option("--max-qubits", max_qubits, "size cap (0 = mode default)");

  std::string out_path;
  bool show_cover = false;
  auto* gen = app.add_subcommand("gen-rxc3", "Hamiltonian of an RXC3 instance");
  gen->add_option("file", file, "RXC3 instance file")->required();
  gen->add_option("--out", out_path, "write the Hamiltonian file here");
  gen->add_flag("--cover", show_cover, "also report whether an exact cover exists (stderr)");

  std::string ax = "0:2:20", az = "0:2:20", axx = "0:1:10";
  auto* scan = app.add_subcommand("region-scan", "scan the Clifford-insufficient family");
  scan->add_option("--ax", ax, "lo:hi:steps for a_X");
  scan->add_option("--az", az, "lo:hi:steps for a_Z");
  scan->add_option("--axx", axx, "lo:hi:steps for a_XX");
  scan->add_option("--out", out_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*xyz) {
      auto h = load(file);
      int yes = 0;
      char* report = nullptr;
      char* trace = nullptr;
      check(stoq_check_xyz(h.get(), &yes, &report, trace_path.empty() ? nullptr : &trace), file);
      if (trace != nullptr) {
        const std::string text = trace;
        stoq_string_free(trace);
        write_file(trace_path, text.c_str());
      }
      emit(report);
      return verdict(yes);
    }
    if (*two) {
      auto h = load(file);
      int yes = 0;
      char* report = nullptr;
      check(stoq_check_2q(h.get(), &yes, nullptr, &report), file);
      emit(report);
      return verdict(yes);
    }
    if (*dec) {
      auto h = load(file);
      int yes = 0;
      char* report = nullptr;
      check(stoq_decompose(h.get(), &yes, &report), file);
      emit(report);
      return verdict(yes);
    }
    if (*real) {
      auto h = load(file);
      int yes = 0;
      char* report = nullptr;
      check(stoq_realness(h.get(), &yes, &report), file);
      emit(report);
      return verdict(yes);
    }
    if (*orc) {
      auto h = load(file);
      int yes = 0;
      char* report = nullptr;
      const auto m = mode == "realness" ? STOQ_ORACLE_REALNESS : STOQ_ORACLE_ZMATRIX;
      check(stoq_oracle(h.get(), m, max_qubits, &yes, &report), file);
      emit(report);
      return verdict(yes);
    }
    if (*gen) {
      stoq_rxc3* raw = nullptr;
      check(stoq_rxc3_read_file(file.c_str(), &raw), file);
      Rxc3Ptr inst(raw);
      char* text = nullptr;
      check(stoq_rxc3_hamiltonian_text(inst.get(), &text), file);
      const std::string body = text;
      stoq_string_free(text);
      if (out_path.empty()) {
        std::fputs(body.c_str(), stdout);
      } else {
        write_file(out_path, body.c_str());
      }
      if (show_cover) {
        int exists = 0;
        check(stoq_rxc3_exact_cover(inst.get(), &exists), file);
        std::fprintf(stderr, "exact cover: %s\n", exists ? "yes" : "no");
      }
      return kPositive;
    }
    if (*scan) {
      const Range rx = parse_range(ax), rz = parse_range(az), rxx = parse_range(axx);
      char* csv = nullptr;
      check(stoq_region_scan(rx.lo, rx.hi, rx.steps, rz.lo, rz.hi, rz.steps, rxx.lo, rxx.hi,
                             rxx.steps, &csv, nullptr),
            "region-scan");
      const std::string body = csv;
      stoq_string_free(csv);
      if (out_path.empty()) {
        std::fputs(body.c_str(), stdout);
      } else {
        write_file(out_path, body.c_str());
      }
      return kPositive;
    }
  } catch (const UsageFailure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return kUsage;
  }
  return kUsage;
}
