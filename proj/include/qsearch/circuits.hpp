// Copyright 2026 The qsearch Authors
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

#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qsearch/rng.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

enum class GateKind {
  kRy,      // exp(-i angle Y)
  kH,       // Hadamard
  kX,       // Pauli X
  kMcz,     // Z on the target, conditioned on the controls
  kCh,      // Hadamard on the target, conditioned on the controls
  kOracle,  // slot for one black-box query on all n data qubits
};

std::string_view gate_kind_name(GateKind kind);

struct Gate {
  GateKind kind;
  int target = 0;
  std::vector<Control> controls;
  double angle = 0;

  static Gate ry(int target, double angle, std::vector<Control> controls = {});
  static Gate h(int target);
  static Gate x(int target);
  static Gate mcz(int target, std::vector<Control> controls);
  static Gate ch(int target, std::vector<Control> controls);
  static Gate oracle();

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Gate list over n data qubits plus an optional ancilla (qubit n + 1, the
/// least significant bit). The global phase is an annotation: simulate()
/// applies gates only, implemented_operator() includes it.
class Circuit {
 public:
  explicit Circuit(int num_qubits, bool ancilla = false);

  int num_qubits() const { return n_; }
  bool has_ancilla() const { return ancilla_; }
  int width() const { return n_ + (ancilla_ ? 1 : 0); }
  std::size_t dim() const { return std::size_t{1} << width(); }

  const std::vector<Gate>& gates() const { return gates_; }
  double global_phase() const { return global_phase_; }
  void set_global_phase(double radians) { global_phase_ = radians; }

  /// Validates qubit references and control/target disjointness.
  void append(Gate gate);
  void append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_;
  bool ancilla_;
  std::vector<Gate> gates_;
  double global_phase_ = 0;
};

/// Reversed gate order with negated rotation angles and phase.
Circuit adjoint(const Circuit& circuit);

/// Callback that realizes an oracle slot (e.g. a BlackBox query).
using OracleSlot = std::function<Ket(Ket)>;

/// Gate-by-gate simulation. Throws on width mismatch, or when the circuit
/// holds an oracle slot and no callback is given.
Ket simulate(const Circuit& circuit, Ket input, const OracleSlot& oracle = {});

/// Dense operator of an oracle-free circuit, global phase included.
Eigen::MatrixXcd implemented_operator(const Circuit& circuit);

/// Prepares a0|0> + b0 sum_{l>0}|l> from |0...0> (real a0, b0 with
/// a0^2 + (2^n - 1) b0^2 = 1): a y-rotation on qubit 1 followed, for each
/// qubit i = 2..n, by a y-rotation controlled on qubits 1..i-1 all |0> and
/// a Hadamard on qubit i.
Circuit compile_uniform_tail_prep(int n, double a0, double b0);

/// Preparation of the test state |t_0> over N = 2^n index kets; n >= 2.
Circuit compile_teststate_prep(int n);

/// Appends X on every qubit where j has a 1 bit, turning |t_0> into |t_j>.
Circuit localize_teststate(Circuit circuit, std::size_t j);

/// U X^n C^{n-1}(Z) X^n U^dagger, which equals -M for the SRM unitary
/// M = sum_l |l><T_0^l|. The circuit carries a global phase of pi so that
/// implemented_operator() returns M itself.
Circuit compile_srm_unitary(int n);

/// Confirmation circuit for the pair {j, j with qubit `pivot` flipped}:
/// X gates load j's other bits from |0...0>, then H(pivot), oracle slot,
/// H(pivot). The pivot qubit reads 1 iff the oracle is in the pair.
Circuit compile_appendixA(int n, std::size_t j, int pivot = 1);

/// tan(theta/2) = sqrt(N/(N-4)); theta = pi at N = 4.
double appendix_b_angle(std::size_t dim);

/// Star-graph preparation on n data qubits plus ancilla: H on the ancilla,
/// then one controlled-Hadamard bond per data qubit.
Circuit compile_appendixB_graph(int n);

struct AppendixBResult {
  Ket state;        // n-qubit output after undoing the byproduct
  int ancilla_bit;  // measurement result m_r
};

/// Builds the star-graph state, measures the ancilla in the
/// {cos(t/2)|0> + i sin(t/2)|1>, -sin(t/2)|0> + i cos(t/2)|1>} basis and
/// undoes the byproduct (H^n)^m_r. The result is the complex-amplitude test
/// state a|0> + b sum_{l>0}|l>, b = -i/sqrt(2N-4), up to global phase.
AppendixBResult prepare_appendixB(int n, Rng& rng);

/// The complex-amplitude target: a = (sqrt(N-4) - i)/sqrt(2N-4),
/// b = -i/sqrt(2N-4).
Ket complex_test_state(int n);

/// JSON interchange:
/// {"n": int, "ancilla": bool, "gates": [{"kind", "target", "controls":
///  [[qubit, bit], ...], "angle"?}], "global_phase"?}
std::string export_circuit(const Circuit& circuit);
Circuit import_circuit(std::string_view json);

}  // namespace qsearch
