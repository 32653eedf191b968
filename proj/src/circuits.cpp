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

#include "qsearch/circuits.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qsearch/teststate.hpp"

namespace qsearch {

namespace {

using json = nlohmann::ordered_json;

void require_qubits(int n, int minimum, const char* what) {
  if (n < minimum) {
    throw std::invalid_argument(std::string(what) + ": requires n >= " +
                                std::to_string(minimum));
  }
}

std::vector<Control> zero_controls(int upto) {
  std::vector<Control> controls;
  for (int q = 1; q <= upto; ++q) {
    controls.push_back({QubitIndex(q), 0});
  }
  return controls;
}

Matrix2 gate_matrix(const Gate& gate) {
  switch (gate.kind) {
    case GateKind::kRy:
      return gates::y_rotation(gate.angle);
    case GateKind::kH:
    case GateKind::kCh:
      return gates::hadamard();
    case GateKind::kX:
      return gates::pauli_x();
    case GateKind::kMcz:
      return gates::pauli_z();
    case GateKind::kOracle:
      break;
  }
  throw std::logic_error("gate_matrix: oracle slot has no matrix");
}

GateKind parse_kind(std::string_view name) {
  for (GateKind kind : {GateKind::kRy, GateKind::kH, GateKind::kX,
                        GateKind::kMcz, GateKind::kCh, GateKind::kOracle}) {
    if (gate_kind_name(kind) == name) {
      return kind;
    }
  }
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

}  // namespace

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::kRy:
      return "ry";
    case GateKind::kH:
      return "h";
    case GateKind::kX:
      return "x";
    case GateKind::kMcz:
      return "mcz";
    case GateKind::kCh:
      return "ch";
    case GateKind::kOracle:
      return "oracle";
  }
  return "?";
}

Gate Gate::ry(int target, double angle, std::vector<Control> controls) {
  return {GateKind::kRy, target, std::move(controls), angle};
}
Gate Gate::h(int target) { return {GateKind::kH, target, {}, 0}; }
Gate Gate::x(int target) { return {GateKind::kX, target, {}, 0}; }
Gate Gate::mcz(int target, std::vector<Control> controls) {
  return {GateKind::kMcz, target, std::move(controls), 0};
}
Gate Gate::ch(int target, std::vector<Control> controls) {
  return {GateKind::kCh, target, std::move(controls), 0};
}
Gate Gate::oracle() { return {GateKind::kOracle, 0, {}, 0}; }

Circuit::Circuit(int num_qubits, bool ancilla) : n_(num_qubits), ancilla_(ancilla) {
  if (num_qubits < 1 || width() > 30) {
    throw std::invalid_argument("Circuit: qubit count out of range");
  }
}

void Circuit::append(Gate gate) {
  if (gate.kind == GateKind::kOracle) {
    if (gate.target != 0 || !gate.controls.empty()) {
      throw std::invalid_argument("oracle slot takes no target or controls");
    }
    if (ancilla_) {
      throw std::invalid_argument("oracle slots need a circuit without ancilla");
    }
    gates_.push_back(std::move(gate));
    return;
  }
  const int w = width();
  if (gate.target < 1 || gate.target > w) {
    throw std::invalid_argument("gate target " + std::to_string(gate.target) +
                                " out of range");
  }
  if (!std::isfinite(gate.angle)) {
    throw std::invalid_argument("gate angle must be finite");
  }
  if (gate.kind != GateKind::kRy && gate.angle != 0) {
    throw std::invalid_argument("only ry gates carry an angle");
  }
  for (std::size_t i = 0; i < gate.controls.size(); ++i) {
    const Control& c = gate.controls[i];
    const int q = c.qubit.ordinal();
    if (q < 1 || q > w || q == gate.target || (c.bit != 0 && c.bit != 1)) {
      throw std::invalid_argument("invalid control on qubit " + std::to_string(q));
    }
    for (std::size_t k = 0; k < i; ++k) {
      if (gate.controls[k].qubit == c.qubit) {
        throw std::invalid_argument("duplicate control qubit");
      }
    }
  }
  gates_.push_back(std::move(gate));
}

void Circuit::append(const Circuit& other) {
  if (other.n_ != n_ || other.ancilla_ != ancilla_) {
    throw std::invalid_argument("Circuit::append: width mismatch");
  }
  for (const Gate& g : other.gates_) {
    append(g);
  }
  global_phase_ += other.global_phase_;
}

Circuit adjoint(const Circuit& circuit) {
  Circuit out(circuit.num_qubits(), circuit.has_ancilla());
  const auto& gates = circuit.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    Gate g = *it;
    g.angle = -g.angle;
    out.append(std::move(g));
  }
  out.set_global_phase(-circuit.global_phase());
  return out;
}

Ket simulate(const Circuit& circuit, Ket input, const OracleSlot& oracle) {
  if (input.dim() != circuit.dim()) {
    throw std::invalid_argument("simulate: input dimension does not match circuit width");
  }
  auto amps = std::move(input).release();
  for (const Gate& g : circuit.gates()) {
    if (g.kind == GateKind::kOracle) {
      if (!oracle) {
        throw std::invalid_argument("simulate: circuit has an unfilled oracle slot");
      }
      amps = oracle(Ket::from_amplitudes(std::move(amps))).release();
      continue;
    }
    kernels::apply_controlled(gate_matrix(g), g.controls, QubitIndex(g.target), amps);
  }
  return Ket::from_amplitudes(std::move(amps));
}

Eigen::MatrixXcd implemented_operator(const Circuit& circuit) {
  const auto dim = static_cast<Eigen::Index>(circuit.dim());
  const Amplitude phase = std::polar(1.0, circuit.global_phase());
  Eigen::MatrixXcd op(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const Ket out = simulate(circuit, basis_ket(circuit.dim(), col));
    for (Eigen::Index row = 0; row < dim; ++row) {
      op(row, col) = phase * out[row];
    }
  }
  return op;
}

Circuit compile_uniform_tail_prep(int n, double a0, double b0) {
  require_qubits(n, 2, "compile_uniform_tail_prep");
  // Amplitude weight of the block where qubits 1..i are all 0.
  auto remainder = [&](int i) {
    const double tail = std::ldexp(1.0, n - i) - 1;
    return std::sqrt(a0 * a0 + tail * b0 * b0);
  };
  // Amplitude weight of a uniform block of 2^(n-i) kets.
  auto uniform_block = [&](int i) { return std::sqrt(std::ldexp(1.0, n - i)) * b0; };

  Circuit circuit(n);
  circuit.append(Gate::ry(1, std::atan2(uniform_block(1), remainder(1))));
  for (int i = 2; i <= n; ++i) {
    const double r = remainder(i);
    const double c = uniform_block(i);
    circuit.append(Gate::ry(i, std::atan((r - c) / (r + c)), zero_controls(i - 1)));
    circuit.append(Gate::h(i));
  }
  return circuit;
}

Circuit compile_teststate_prep(int n) {
  require_qubits(n, 2, "compile_teststate_prep");
  const auto amp = test_amplitudes(std::size_t{1} << n);
  return compile_uniform_tail_prep(n, amp.a, amp.b);
}

Circuit localize_teststate(Circuit circuit, std::size_t j) {
  const int n = circuit.num_qubits();
  if (j >= (std::size_t{1} << n)) {
    throw std::invalid_argument("localize_teststate: index out of range");
  }
  for (int q = 1; q <= n; ++q) {
    if ((j & QubitIndex(q).mask(n)) != 0) {
      circuit.append(Gate::x(q));
    }
  }
  return circuit;
}

Circuit compile_srm_unitary(int n) {
  require_qubits(n, 2, "compile_srm_unitary");
  const auto amp = test_amplitudes(std::size_t{1} << n);
  const Circuit u = compile_uniform_tail_prep(
      n, std::sqrt((1 - amp.a) / 2), amp.b / std::sqrt(2 * (1 - amp.a)));

  Circuit circuit(n);
  circuit.append(adjoint(u));
  for (int q = 1; q <= n; ++q) {
    circuit.append(Gate::x(q));
  }
  std::vector<Control> ones;
  for (int q = 1; q < n; ++q) {
    ones.push_back({QubitIndex(q), 1});
  }
  circuit.append(Gate::mcz(n, std::move(ones)));
  for (int q = 1; q <= n; ++q) {
    circuit.append(Gate::x(q));
  }
  circuit.append(u);
  circuit.set_global_phase(std::numbers::pi);
  return circuit;
}

Circuit compile_appendixA(int n, std::size_t j, int pivot) {
  require_qubits(n, 2, "compile_appendixA");
  if (j >= (std::size_t{1} << n)) {
    throw std::invalid_argument("compile_appendixA: index out of range");
  }
  if (pivot < 1 || pivot > n) {
    throw std::invalid_argument("compile_appendixA: pivot qubit out of range");
  }
  Circuit circuit(n);
  for (int q = 1; q <= n; ++q) {
    if (q != pivot && (j & QubitIndex(q).mask(n)) != 0) {
      circuit.append(Gate::x(q));
    }
  }
  circuit.append(Gate::h(pivot));
  circuit.append(Gate::oracle());
  circuit.append(Gate::h(pivot));
  return circuit;
}

double appendix_b_angle(std::size_t dim) {
  if (dim < 4) {
    throw std::invalid_argument("appendix_b_angle: requires N >= 4");
  }
  const double nd = static_cast<double>(dim);
  return 2 * std::atan2(std::sqrt(nd), std::sqrt(nd - 4));
}

Circuit compile_appendixB_graph(int n) {
  require_qubits(n, 2, "compile_appendixB_graph");
  Circuit circuit(n, /*ancilla=*/true);
  const int ancilla = n + 1;
  circuit.append(Gate::h(ancilla));
  for (int q = 1; q <= n; ++q) {
    circuit.append(Gate::ch(q, {{QubitIndex(ancilla), 1}}));
  }
  return circuit;
}

AppendixBResult prepare_appendixB(int n, Rng& rng) {
  const Circuit graph = compile_appendixB_graph(n);
  const Ket star = simulate(graph, basis_ket(graph.dim(), 0));

  const double half = appendix_b_angle(std::size_t{1} << n) / 2;
  const Amplitude i(0, 1);
  // Rows: |up>, |down> of the ancilla measurement basis.
  const Amplitude basis[2][2] = {{std::cos(half), i * std::sin(half)},
                                 {-std::sin(half), i * std::cos(half)}};
  const std::size_t data_dim = std::size_t{1} << n;
  std::vector<Amplitude> branch[2];
  double weight[2] = {0, 0};
  for (int m = 0; m < 2; ++m) {
    branch[m].resize(data_dim);
    for (std::size_t x = 0; x < data_dim; ++x) {
      branch[m][x] = std::conj(basis[m][0]) * star[2 * x] +
                     std::conj(basis[m][1]) * star[2 * x + 1];
      weight[m] += std::norm(branch[m][x]);
    }
  }
  const int m = static_cast<int>(sample_discrete(weight, rng));
  Ket out = Ket::normalized(std::move(branch[m]));
  if (m == 1) {
    for (int q = 1; q <= n; ++q) {
      out = apply_single(gates::hadamard(), QubitIndex(q), std::move(out));
    }
  }
  return {std::move(out), m};
}

Ket complex_test_state(int n) {
  require_qubits(n, 2, "complex_test_state");
  const double nd = std::ldexp(1.0, n);
  const double norm = std::sqrt(2 * nd - 4);
  const Amplitude a(std::sqrt(nd - 4) / norm, -1 / norm);
  const Amplitude b(0, -1 / norm);
  std::vector<Amplitude> amps(static_cast<std::size_t>(nd), b);
  amps[0] = a;
  return Ket::from_amplitudes(std::move(amps));
}

std::string export_circuit(const Circuit& circuit) {
  json doc;
  doc["n"] = circuit.num_qubits();
  doc["ancilla"] = circuit.has_ancilla();
  json gates = json::array();
  for (const Gate& g : circuit.gates()) {
    json record;
    record["kind"] = gate_kind_name(g.kind);
    record["target"] = g.target;
    json controls = json::array();
    for (const Control& c : g.controls) {
      controls.push_back({c.qubit.ordinal(), c.bit});
    }
    record["controls"] = std::move(controls);
    if (g.kind == GateKind::kRy) {
      record["angle"] = g.angle;
    }
    gates.push_back(std::move(record));
  }
  doc["gates"] = std::move(gates);
  if (circuit.global_phase() != 0) {
    doc["global_phase"] = circuit.global_phase();
  }
  return doc.dump(2) + "\n";
}

Circuit import_circuit(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
    Circuit circuit(doc.at("n").get<int>(), doc.at("ancilla").get<bool>());
    for (const json& record : doc.at("gates")) {
      Gate g{parse_kind(record.at("kind").get<std::string>()),
             record.at("target").get<int>(), {}, 0};
      for (const json& c : record.at("controls")) {
        if (!c.is_array() || c.size() != 2) {
          throw std::invalid_argument("control must be a [qubit, bit] pair");
        }
        g.controls.push_back({QubitIndex(c[0].get<int>()), c[1].get<int>()});
      }
      if (g.kind == GateKind::kRy) {
        g.angle = record.at("angle").get<double>();
      } else if (record.contains("angle")) {
        throw std::invalid_argument("angle is only allowed on ry gates");
      }
      circuit.append(std::move(g));
    }
    if (doc.contains("global_phase")) {
      circuit.set_global_phase(doc["global_phase"].get<double>());
    }
    return circuit;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("import_circuit: ") + e.what());
  }
}

}  // namespace qsearch
