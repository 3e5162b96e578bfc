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

#include "stoq/stoq.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>

#include "stoq/decomposer.hpp"
#include "stoq/errors.hpp"
#include "stoq/io.hpp"
#include "stoq/oracle.hpp"
#include "stoq/report.hpp"
#include "stoq/rxc3.hpp"
#include "stoq/two_qubit.hpp"
#include "stoq/xyz.hpp"

struct stoq_hamiltonian {
  stoq::Hamiltonian h{1};
  std::vector<stoq::CoefficientLiteral> literals;
  std::optional<stoq::XyzDecision> xyz;  // cleared on every edit
};

struct stoq_rxc3 {
  stoq::Rxc3Instance inst;
};

namespace {

thread_local std::string g_last_error;

stoq_status fail(stoq_status s, const char* what) {
  g_last_error = what;
  return s;
}

template <class F>
stoq_status guarded(F&& f) {
  g_last_error.clear();
  try {
    f();
    return STOQ_OK;
  } catch (const stoq::ModelError& e) {
    return fail(STOQ_ERR_MODEL, e.what());
  } catch (const stoq::InputError& e) {
    return fail(STOQ_ERR_INPUT, e.what());
  } catch (const stoq::PreconditionError& e) {
    return fail(STOQ_ERR_PRECONDITION, e.what());
  } catch (const stoq::CapacityError& e) {
    return fail(STOQ_ERR_CAPACITY, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(STOQ_ERR_INPUT, e.what());
  } catch (const std::exception& e) {
    return fail(STOQ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(STOQ_ERR_INTERNAL, "unknown exception");
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** dst, const std::string& s) {
  if (dst != nullptr) *dst = dup_string(s);
}

stoq::Pauli to_pauli(stoq_pauli p) {
  if (p < STOQ_X || p > STOQ_Z) throw stoq::InputError("bad Pauli value");
  return static_cast<stoq::Pauli>(p);
}

stoq_hamiltonian* wrap(stoq::ParsedHamiltonian parsed) {
  auto* out = new stoq_hamiltonian;
  out->h = std::move(parsed.h);
  out->literals = std::move(parsed.literals);
  return out;
}

const stoq::XyzDecision& xyz_of(const stoq_hamiltonian* h) {
  auto* mut = const_cast<stoq_hamiltonian*>(h);
  if (!mut->xyz) mut->xyz = stoq::decide_xyz(h->h);
  return *mut->xyz;
}

}  // namespace

#define STOQ_REQUIRE(p) \
  if ((p) == nullptr) return fail(STOQ_ERR_NULL, #p " is NULL")

extern "C" {

const char* stoq_last_error(void) { return g_last_error.c_str(); }

const char* stoq_status_name(stoq_status s) {
  switch (s) {
    case STOQ_OK: return "ok";
    case STOQ_ERR_INPUT: return "input error";
    case STOQ_ERR_MODEL: return "model error";
    case STOQ_ERR_PRECONDITION: return "precondition error";
    case STOQ_ERR_CAPACITY: return "capacity error";
    case STOQ_ERR_NULL: return "null argument";
    case STOQ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void stoq_string_free(char* s) { std::free(s); }

stoq_status stoq_hamiltonian_create(size_t n_qubits, stoq_hamiltonian** out) {
  STOQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    stoq::ParsedHamiltonian p;
    p.h = stoq::Hamiltonian(n_qubits);
    *out = wrap(std::move(p));
  });
}

stoq_status stoq_hamiltonian_parse(const char* text, stoq_hamiltonian** out) {
  STOQ_REQUIRE(text);
  STOQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = wrap(stoq::parse_hamiltonian(text)); });
}

stoq_status stoq_hamiltonian_read_file(const char* path, stoq_hamiltonian** out) {
  STOQ_REQUIRE(path);
  STOQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = wrap(stoq::read_hamiltonian_file(path)); });
}

void stoq_hamiltonian_destroy(stoq_hamiltonian* h) { delete h; }

stoq_status stoq_hamiltonian_n_qubits(const stoq_hamiltonian* h, size_t* out) {
  STOQ_REQUIRE(h);
  STOQ_REQUIRE(out);
  *out = h->h.n_qubits();
  return STOQ_OK;
}

stoq_status stoq_hamiltonian_add1(stoq_hamiltonian* h, unsigned q, stoq_pauli p, double coeff) {
  STOQ_REQUIRE(h);
  return guarded([&] {
    h->h.add(q, to_pauli(p), coeff);
    h->xyz.reset();
  });
}

stoq_status stoq_hamiltonian_add2(stoq_hamiltonian* h, unsigned u, stoq_pauli pu, unsigned v,
                                  stoq_pauli pv, double coeff) {
  STOQ_REQUIRE(h);
  return guarded([&] {
    h->h.add(u, to_pauli(pu), v, to_pauli(pv), coeff);
    h->xyz.reset();
  });
}

stoq_status stoq_hamiltonian_coefficient2(const stoq_hamiltonian* h, unsigned u, stoq_pauli pu,
                                          unsigned v, stoq_pauli pv, double* out) {
  STOQ_REQUIRE(h);
  STOQ_REQUIRE(out);
  return guarded([&] { *out = h->h.coefficient(u, to_pauli(pu), v, to_pauli(pv)); });
}

stoq_status stoq_hamiltonian_serialize(const stoq_hamiltonian* h, char** text) {
  STOQ_REQUIRE(h);
  STOQ_REQUIRE(text);
  return guarded([&] { put(text, stoq::serialize_hamiltonian(h->h)); });
}

stoq_status stoq_check_xyz(const stoq_hamiltonian* h, int* stoquastic, char** report,
                           char** trace_json) {
  STOQ_REQUIRE(h);
  STOQ_REQUIRE(stoquastic);
  return guarded([&] {
    const auto& d = xyz_of(h);
    *stoquastic = d.stoquastic ? 1 : 0;
    put(report, stoq::xyz_report(d));
    put(trace_json, stoq::xyz_trace_json(d, h->literals));
  });
}

stoq_status stoq_xyz_solution(const stoq_hamiltonian* h, unsigned q, int perm[3], int signs[3]) {
  STOQ_REQUIRE(h);
  STOQ_REQUIRE(perm);
  STOQ_REQUIRE(signs);
  return guarded([&] {
    const auto& d = xyz_of(h);
    if (!d.stoquastic) throw stoq::PreconditionError("instance is not stoquastic");
    if (q >= d.solution.size()) throw stoq::InputError("qubit out of range");
    for (int m = 0; m < 3; ++m) {
      perm[m] = d.solution[q].perm[m] + 1;
      signs[m] = d.solution[q].signs[m];
    }
  });
}

stoq_status stoq_check_2q(const stoq_hamiltonian* h, int* stoquastic, int* real, char** report) {
  STOQ_REQUIRE(h);
  STOQ_REQUIRE(stoquastic);
  return guarded([&] {
    if (h->h.n_qubits() != 2) {
      throw stoq::InputError("check-2q needs exactly 2 qubits, got " +
                             std::to_string(h->h.n_qubits()));
    }
    const auto e = stoq::extract_edge_data(h->h, 0, 1);
    const auto d = stoq::decide_stoquastic_2q(e);
    *stoquastic = d.stoquastic ? 1 : 0;
    if (real != nullptr) *real = d.real ? 1 : 0;
    put(report, stoq::two_qubit_report(e, d));
  });
}

stoq_status stoq_decompose(const stoq_hamiltonian* h, int* accepted, char** report) {
  STOQ_REQUIRE(h);
  STOQ_REQUIRE(accepted);
  return guarded([&] {
    const auto r = stoq::cone_membership(h->h);
    *accepted = r.accepted ? 1 : 0;
    put(report, stoq::decomposition_report(r));
  });
}

stoq_status stoq_realness(const stoq_hamiltonian* h, int* real, char** report) {
  STOQ_REQUIRE(h);
  STOQ_REQUIRE(real);
  return guarded([&] {
    std::string text;
    if (h->h.n_qubits() == 2) {
      const auto e = stoq::extract_edge_data(h->h, 0, 1);
      *real = stoq::is_real_locally(e) ? 1 : 0;
      const auto inv = stoq::triple_invariants(e);
      text = "method: triple products\n";
      const char* names[6] = {"i10", "i11", "i15", "i16", "i17", "i18"};
      const auto vals = inv.values();
      for (int i = 0; i < 6; ++i) {
        text += std::string(names[i]) + "=" + stoq::format_double(vals[i]) + "\n";
      }
    } else {
      const auto w = stoq::brute_force_clifford(h->h, stoq::OracleMode::kRealness);
      *real = w ? 1 : 0;
      text = "method: axis-permutation search\n" + stoq::oracle_report(w);
    }
    text += *real ? "REAL\n" : "NOT REAL\n";
    put(report, text);
  });
}

stoq_status stoq_oracle(const stoq_hamiltonian* h, stoq_oracle_mode mode, size_t max_qubits,
                        int* found, char** report) {
  STOQ_REQUIRE(h);
  STOQ_REQUIRE(found);
  return guarded([&] {
    if (mode != STOQ_ORACLE_ZMATRIX && mode != STOQ_ORACLE_REALNESS) {
      throw stoq::InputError("bad oracle mode");
    }
    const auto m = mode == STOQ_ORACLE_ZMATRIX ? stoq::OracleMode::kZMatrix
                                               : stoq::OracleMode::kRealness;
    const auto w = stoq::brute_force_clifford(h->h, m, max_qubits);
    *found = w ? 1 : 0;
    put(report, stoq::oracle_report(w));
  });
}

stoq_status stoq_rxc3_parse(const char* text, stoq_rxc3** out) {
  STOQ_REQUIRE(text);
  STOQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new stoq_rxc3{stoq::parse_rxc3(text)}; });
}

stoq_status stoq_rxc3_read_file(const char* path, stoq_rxc3** out) {
  STOQ_REQUIRE(path);
  STOQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] { *out = new stoq_rxc3{stoq::read_rxc3_file(path)}; });
}

void stoq_rxc3_destroy(stoq_rxc3* inst) { delete inst; }

stoq_status stoq_rxc3_hamiltonian_text(const stoq_rxc3* inst, char** text) {
  STOQ_REQUIRE(inst);
  STOQ_REQUIRE(text);
  return guarded([&] {
    put(text, stoq::serialize_rxc3_hamiltonian(inst->inst.n_elements(),
                                               stoq::rxc3_terms(inst->inst)));
  });
}

stoq_status stoq_rxc3_to_hamiltonian(const stoq_rxc3* inst, stoq_hamiltonian** out) {
  STOQ_REQUIRE(inst);
  STOQ_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    stoq::ParsedHamiltonian p;
    p.h = stoq::hamiltonian_from_rxc3(inst->inst);
    *out = wrap(std::move(p));
  });
}

stoq_status stoq_rxc3_exact_cover(const stoq_rxc3* inst, int* exists) {
  STOQ_REQUIRE(inst);
  STOQ_REQUIRE(exists);
  return guarded([&] { *exists = stoq::exact_cover_exists(inst->inst) ? 1 : 0; });
}

stoq_status stoq_region_scan(double ax_lo, double ax_hi, int ax_steps, double az_lo,
                             double az_hi, int az_steps, double axx_lo, double axx_hi,
                             int axx_steps, char** csv, size_t* rows) {
  return guarded([&] {
    for (int s : {ax_steps, az_steps, axx_steps}) {
      if (s < 2) throw stoq::InputError("scan axes need at least two steps");
    }
    const auto r = stoq::region_scan({ax_lo, ax_hi, ax_steps}, {az_lo, az_hi, az_steps},
                                     {axx_lo, axx_hi, axx_steps});
    if (rows != nullptr) *rows = r.size();
    put(csv, stoq::region_scan_csv(r));
  });
}

}  // extern "C"
