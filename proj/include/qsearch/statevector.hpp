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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qsearch/rng.hpp"

namespace qsearch {

using Amplitude = std::complex<double>;

/// Default numeric tolerance for norms, unitarity and amplitude comparisons.
inline constexpr double kTolerance = 1e-10;

/// Row-major 2x2 complex matrix.
using Matrix2 = std::array<std::array<Amplitude, 2>, 2>;

/// 1-based qubit ordinal. Qubit 1 is the most significant bit of a basis
/// index: for n qubits, index j = sum_i bit_i * 2^(n - i).
class QubitIndex {
 public:
  constexpr explicit QubitIndex(int ordinal) : ordinal_(ordinal) {}
  constexpr int ordinal() const { return ordinal_; }
  /// Bit mask of this qubit within an n-qubit basis index.
  std::size_t mask(int num_qubits) const;
  friend constexpr bool operator==(QubitIndex, QubitIndex) = default;

 private:
  int ordinal_;
};

/// A control condition: the gate fires only where `qubit` holds `bit`.
struct Control {
  QubitIndex qubit;
  int bit = 1;
  friend bool operator==(const Control&, const Control&) = default;
};

/// Dense normalized state over `dim` index kets.
class Ket {
 public:
  /// Throws std::invalid_argument if dim < 2 or the norm deviates from 1 by
  /// more than kTolerance.
  static Ket from_amplitudes(std::vector<Amplitude> amps);

  /// Rescales to unit norm first; throws on a zero vector.
  static Ket normalized(std::vector<Amplitude> amps);

  std::size_t dim() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude operator[](std::size_t i) const { return amps_[i]; }
  double norm_squared() const;

  /// Moves the amplitude buffer out, leaving the Ket empty.
  std::vector<Amplitude> release() && { return std::move(amps_); }

 private:
  explicit Ket(std::vector<Amplitude> amps) : amps_(std::move(amps)) {}
  std::vector<Amplitude> amps_;
};

Ket basis_ket(std::size_t dim, std::size_t index);

/// <u|v> = sum conj(u_i) v_i.
Amplitude inner(const Ket& u, const Ket& v);

/// |<u|v>|^2.
double fidelity(const Ket& u, const Ket& v);

/// Number of qubits n with dim == 2^n; throws if dim is not a power of two.
int qubit_count(std::size_t dim);

bool is_unitary(const Matrix2& gate, double tol = kTolerance);
Matrix2 adjoint(const Matrix2& gate);

namespace gates {
Matrix2 hadamard();
Matrix2 pauli_x();
Matrix2 pauli_z();
/// exp(-i theta Y) = [[cos, -sin], [sin, cos]].
Matrix2 y_rotation(double theta);
}  // namespace gates

Ket apply_single(const Matrix2& gate, QubitIndex target, Ket state);

Ket apply_controlled(const Matrix2& gate, std::span<const Control> controls,
                     QubitIndex target, Ket state);

/// Samples a computational-basis index with probability |amp_i|^2. Consumes
/// exactly one uniform variate.
std::size_t sample_index(const Ket& state, Rng& rng);

/// Probability that qubit `q` reads `bit` in the computational basis.
double qubit_probability(const Ket& state, QubitIndex q, int bit);

/// In-place kernels over raw amplitude buffers. They do not check norms, so
/// they also serve unnormalized vectors (e.g. for linearity checks).
namespace kernels {
void apply_single(const Matrix2& gate, QubitIndex target,
                  std::span<Amplitude> amps);
void apply_controlled(const Matrix2& gate, std::span<const Control> controls,
                      QubitIndex target, std::span<Amplitude> amps);
}  // namespace kernels

}  // namespace qsearch
