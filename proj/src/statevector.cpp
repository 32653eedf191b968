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

#include "qsearch/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qsearch {

namespace {

int qubits_of(std::span<const Amplitude> amps) {
  return qubit_count(amps.size());
}

void check_target(QubitIndex target, int n) {
  if (target.ordinal() < 1 || target.ordinal() > n) {
    throw std::invalid_argument("qubit " + std::to_string(target.ordinal()) +
                                " out of range for " + std::to_string(n) +
                                " qubits");
  }
}

}  // namespace

std::size_t QubitIndex::mask(int num_qubits) const {
  return std::size_t{1} << (num_qubits - ordinal_);
}

Ket Ket::from_amplitudes(std::vector<Amplitude> amps) {
  if (amps.size() < 2) {
    throw std::invalid_argument("Ket: dimension must be at least 2");
  }
  Ket ket(std::move(amps));
  if (std::abs(ket.norm_squared() - 1.0) > kTolerance) {
    throw std::invalid_argument("Ket: amplitudes are not normalized");
  }
  return ket;
}

Ket Ket::normalized(std::vector<Amplitude> amps) {
  double norm2 = 0;
  for (const auto& a : amps) {
    norm2 += std::norm(a);
  }
  if (!(norm2 > 0)) {
    throw std::invalid_argument("Ket: cannot normalize a zero vector");
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& a : amps) {
    a *= scale;
  }
  return from_amplitudes(std::move(amps));
}

double Ket::norm_squared() const {
  double total = 0;
  for (const auto& a : amps_) {
    total += std::norm(a);
  }
  return total;
}

Ket basis_ket(std::size_t dim, std::size_t index) {
  if (index >= dim) {
    throw std::invalid_argument("basis_ket: index " + std::to_string(index) +
                                " out of range for dimension " +
                                std::to_string(dim));
  }
  std::vector<Amplitude> amps(dim);
  amps[index] = 1.0;
  return Ket::from_amplitudes(std::move(amps));
}

Amplitude inner(const Ket& u, const Ket& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("inner: dimension mismatch");
  }
  Amplitude total = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    total += std::conj(u[i]) * v[i];
  }
  return total;
}

double fidelity(const Ket& u, const Ket& v) { return std::norm(inner(u, v)); }

int qubit_count(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not a power of two >= 2");
  }
  return std::countr_zero(dim);
}

bool is_unitary(const Matrix2& g, double tol) {
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Amplitude dot = std::conj(g[0][r]) * g[0][c] + std::conj(g[1][r]) * g[1][c];
      if (std::abs(dot - Amplitude(r == c ? 1.0 : 0.0)) > tol) {
        return false;
      }
    }
  }
  return true;
}

Matrix2 adjoint(const Matrix2& g) {
  return {{{std::conj(g[0][0]), std::conj(g[1][0])},
           {std::conj(g[0][1]), std::conj(g[1][1])}}};
}

namespace gates {

Matrix2 hadamard() {
  const double s = 1.0 / std::sqrt(2.0);
  return {{{s, s}, {s, -s}}};
}

Matrix2 pauli_x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }

Matrix2 pauli_z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }

Matrix2 y_rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return {{{c, -s}, {s, c}}};
}

}  // namespace gates

namespace kernels {

void apply_single(const Matrix2& gate, QubitIndex target,
                  std::span<Amplitude> amps) {
  apply_controlled(gate, {}, target, amps);
}

void apply_controlled(const Matrix2& gate, std::span<const Control> controls,
                      QubitIndex target, std::span<Amplitude> amps) {
  const int n = qubits_of(amps);
  check_target(target, n);
  if (!is_unitary(gate)) {
    throw std::invalid_argument("gate is not unitary");
  }
  const std::size_t tmask = target.mask(n);
  std::size_t cmask = 0;
  std::size_t cvalue = 0;
  for (const auto& c : controls) {
    check_target(c.qubit, n);
    if (c.bit != 0 && c.bit != 1) {
      throw std::invalid_argument("control bit must be 0 or 1");
    }
    const std::size_t m = c.qubit.mask(n);
    if (m == tmask || (cmask & m) != 0) {
      throw std::invalid_argument("control and target qubits overlap");
    }
    cmask |= m;
    if (c.bit == 1) {
      cvalue |= m;
    }
  }
  // Enumerate only the subspace where the controls hold, pairing each index
  // with target bit 0 against its partner with target bit 1.
  const std::size_t all = amps.size() - 1;
  const std::size_t free = all & ~cmask & ~tmask;
  std::size_t s = 0;
  do {
    const std::size_t i0 = s | cvalue;
    const std::size_t i1 = i0 | tmask;
    const Amplitude a0 = amps[i0];
    const Amplitude a1 = amps[i1];
    amps[i0] = gate[0][0] * a0 + gate[0][1] * a1;
    amps[i1] = gate[1][0] * a0 + gate[1][1] * a1;
    s = (s - free) & free;
  } while (s != 0);
}

}  // namespace kernels

Ket apply_single(const Matrix2& gate, QubitIndex target, Ket state) {
  auto amps = std::move(state).release();
  kernels::apply_single(gate, target, amps);
  return Ket::from_amplitudes(std::move(amps));
}

Ket apply_controlled(const Matrix2& gate, std::span<const Control> controls,
                     QubitIndex target, Ket state) {
  auto amps = std::move(state).release();
  kernels::apply_controlled(gate, controls, target, amps);
  return Ket::from_amplitudes(std::move(amps));
}

std::size_t sample_index(const Ket& state, Rng& rng) {
  std::vector<double> probs(state.dim());
  for (std::size_t i = 0; i < state.dim(); ++i) {
    probs[i] = std::norm(state[i]);
  }
  return sample_discrete(probs, rng);
}

double qubit_probability(const Ket& state, QubitIndex q, int bit) {
  const int n = qubit_count(state.dim());
  check_target(q, n);
  const std::size_t m = q.mask(n);
  double total = 0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if (((i & m) != 0) == (bit == 1)) {
      total += std::norm(state[i]);
    }
  }
  return total;
}

}  // namespace qsearch
