/* Copyright 2026 The stoq Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the stoq decision library.
 *
 * Every function returns a stoq_status. On failure a message is available
 * from stoq_last_error() until the next call on the same thread. Strings
 * returned through char** out-parameters are owned by the caller and must be
 * released with stoq_string_free(). Any char** out-parameter may be NULL.
 */
#ifndef STOQ_STOQ_H_
#define STOQ_STOQ_H_

#include <stddef.h>

#if defined(STOQ_BUILDING_LIBRARY)
#define STOQ_API __attribute__((visibility("default")))
#else
#define STOQ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum stoq_status {
  STOQ_OK = 0,
  STOQ_ERR_INPUT = 1,        /* malformed text, bad index, bad argument */
  STOQ_ERR_MODEL = 2,        /* input outside the model a routine accepts */
  STOQ_ERR_PRECONDITION = 3, /* documented precondition violated */
  STOQ_ERR_CAPACITY = 4,     /* exhaustive search above its size cap */
  STOQ_ERR_NULL = 5,         /* required pointer argument was NULL */
  STOQ_ERR_INTERNAL = 6
} stoq_status;

typedef enum stoq_pauli { STOQ_X = 0, STOQ_Y = 1, STOQ_Z = 2 } stoq_pauli;

typedef enum stoq_oracle_mode { STOQ_ORACLE_ZMATRIX = 0, STOQ_ORACLE_REALNESS = 1 } stoq_oracle_mode;

typedef struct stoq_hamiltonian stoq_hamiltonian;
typedef struct stoq_rxc3 stoq_rxc3;

STOQ_API const char* stoq_last_error(void);
STOQ_API const char* stoq_status_name(stoq_status s);
STOQ_API void stoq_string_free(char* s);

/* Hamiltonians. */
STOQ_API stoq_status stoq_hamiltonian_create(size_t n_qubits, stoq_hamiltonian** out);
STOQ_API stoq_status stoq_hamiltonian_parse(const char* text, stoq_hamiltonian** out);
STOQ_API stoq_status stoq_hamiltonian_read_file(const char* path, stoq_hamiltonian** out);
STOQ_API void stoq_hamiltonian_destroy(stoq_hamiltonian* h);
STOQ_API stoq_status stoq_hamiltonian_n_qubits(const stoq_hamiltonian* h, size_t* out);
STOQ_API stoq_status stoq_hamiltonian_add1(stoq_hamiltonian* h, unsigned q, stoq_pauli p,
                                           double coeff);
STOQ_API stoq_status stoq_hamiltonian_add2(stoq_hamiltonian* h, unsigned u, stoq_pauli pu,
                                           unsigned v, stoq_pauli pv, double coeff);
STOQ_API stoq_status stoq_hamiltonian_coefficient2(const stoq_hamiltonian* h, unsigned u,
                                                   stoq_pauli pu, unsigned v, stoq_pauli pv,
                                                   double* out);
STOQ_API stoq_status stoq_hamiltonian_serialize(const stoq_hamiltonian* h, char** text);

/* Decisions. Verdict outputs are 1 (positive) or 0 (negative). */

/* XYZ Heisenberg models. Non-XYZ input gives STOQ_ERR_MODEL. */
STOQ_API stoq_status stoq_check_xyz(const stoq_hamiltonian* h, int* stoquastic, char** report,
                                    char** trace_json);
/* Per-qubit solution after a positive stoq_check_xyz: perm holds 1-based
 * axis images, signs the +-1 factors. Fails on negative instances. */
STOQ_API stoq_status stoq_xyz_solution(const stoq_hamiltonian* h, unsigned q, int perm[3],
                                       int signs[3]);
/* Two-qubit Hamiltonians (n_qubits == 2, else STOQ_ERR_INPUT). */
STOQ_API stoq_status stoq_check_2q(const stoq_hamiltonian* h, int* stoquastic, int* real,
                                   char** report);
/* Fixed-basis cone membership. */
STOQ_API stoq_status stoq_decompose(const stoq_hamiltonian* h, int* accepted, char** report);
/* Realness under local rotations: triple products when n == 2, otherwise the
 * exhaustive axis-permutation search (capped at 12 qubits). */
STOQ_API stoq_status stoq_realness(const stoq_hamiltonian* h, int* real, char** report);
/* Exhaustive Clifford search; max_qubits == 0 selects the mode default. */
STOQ_API stoq_status stoq_oracle(const stoq_hamiltonian* h, stoq_oracle_mode mode,
                                 size_t max_qubits, int* found, char** report);

/* RXC3 instances. */
STOQ_API stoq_status stoq_rxc3_parse(const char* text, stoq_rxc3** out);
STOQ_API stoq_status stoq_rxc3_read_file(const char* path, stoq_rxc3** out);
STOQ_API void stoq_rxc3_destroy(stoq_rxc3* inst);
/* Hamiltonian file in construction order. */
STOQ_API stoq_status stoq_rxc3_hamiltonian_text(const stoq_rxc3* inst, char** text);
STOQ_API stoq_status stoq_rxc3_to_hamiltonian(const stoq_rxc3* inst, stoq_hamiltonian** out);
STOQ_API stoq_status stoq_rxc3_exact_cover(const stoq_rxc3* inst, int* exists);

/* Scan of the aZ(Z0+Z1) - aX(X0+X1) + aXX X0X1 + Z0Z1 family as CSV. */
STOQ_API stoq_status stoq_region_scan(double ax_lo, double ax_hi, int ax_steps, double az_lo,
                                      double az_hi, int az_steps, double axx_lo, double axx_hi,
                                      int axx_steps, char** csv, size_t* rows);

#ifdef __cplusplus
}
#endif

#endif /* STOQ_STOQ_H_ */
