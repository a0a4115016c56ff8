/*
 * Copyright 2026 The revft Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "gate.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace revft
{

struct GateInstance
{
  std::string id;
  GateRef gate; ///< null when the gate name did not resolve
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
};

struct ConstantInput
{
  std::string wire;
  bool value{ false };

  friend bool operator==( const ConstantInput&, const ConstantInput& ) = default;
};

/// A reversible netlist. Wires are named edges: each name is produced once
/// (primary input, constant or gate output) and consumed once (gate input or
/// circuit output). Input lines are the primary inputs followed by the
/// constants; output lines are the primary outputs followed by the garbage.
struct Circuit
{
  std::string name;
  std::vector<std::string> primary_inputs;
  std::vector<ConstantInput> constants;
  std::vector<GateInstance> instances;
  std::vector<std::string> primary_outputs;
  std::vector<std::string> garbage_outputs;

  std::size_t input_line_count() const noexcept { return primary_inputs.size() + constants.size(); }
  std::size_t output_line_count() const noexcept { return primary_outputs.size() + garbage_outputs.size(); }
};

/// Structural equality: same roles and the same instance sequence, gates
/// compared by name and mapping.
bool operator==( const GateInstance& a, const GateInstance& b );
bool operator==( const Circuit& a, const Circuit& b );

struct ValidationReport
{
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

ValidationReport validate( const Circuit& c );

/// Instance ids in evaluation order; ready instances are taken in natural
/// order of their ids. Throws Error(invalid_circuit) "cycle detected".
std::vector<std::string> topological_order( const Circuit& c );

/// Index-based form of a validated circuit used by the evaluators.
struct CompiledCircuit
{
  struct Op
  {
    std::size_t instance;  ///< index into Circuit::instances
    const GateSpec* gate;
    std::vector<std::size_t> inputs;  ///< wire indices
    std::vector<std::size_t> outputs; ///< wire indices
  };

  /// Wire names in topological order: input lines, then gate outputs in
  /// evaluation order and port order.
  std::vector<std::string> wire_names;
  std::size_t primary_input_count{ 0 };
  std::vector<std::uint8_t> constant_values;
  std::vector<Op> ops;
  std::vector<std::size_t> primary_output_wires;
  std::vector<std::size_t> garbage_wires;
  /// Wire carrying each output line (primary outputs then garbage).
  std::vector<std::size_t> output_line_wires;

  std::size_t input_line_count() const noexcept { return primary_input_count + constant_values.size(); }
  std::size_t wire_index( const std::string& name ) const;
};

/// Throws Error(invalid_circuit) with the violation list if validate fails.
CompiledCircuit compile( const Circuit& c );

/// The circuit as one gate over all input lines, constants treated as free
/// lines. Requires at most max_gate_arity lines.
GateSpec circuit_as_bijection( const Circuit& c );

/// Reverse circuit: every gate replaced by its inverse, order reversed, all
/// output lines become primary inputs and all input lines (constants
/// included) become primary outputs, wire names kept.
Circuit invert_circuit( const Circuit& c );

/// Total order on identifiers where digit runs compare numerically.
bool natural_less( const std::string& a, const std::string& b );

bool is_identifier( std::string_view text ) noexcept;

} // namespace revft
