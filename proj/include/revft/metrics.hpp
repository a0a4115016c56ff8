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

#include "circuit.hpp"
#include "cost.hpp"
#include "simulator.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace revft
{

struct CircuitMetrics
{
  std::size_t gate_count{ 0 };
  std::size_t garbage_outputs{ 0 };
  std::size_t constant_inputs{ 0 };
  std::size_t unit_delay{ 0 }; ///< gates on the critical path
  CostVector total_cost;

  friend bool operator==( const CircuitMetrics&, const CircuitMetrics& ) = default;
  std::string to_string( CostNotation notation = CostNotation::greek ) const;
};

CircuitMetrics measure( const Circuit& c );

/// Fewest garbage lines a parity-preserving reversible embedding of spec
/// needs, by counting inputs of equal parity that share an output pattern.
std::size_t ft_garbage_lower_bound( const TruthSpec& spec );
std::size_t ft_constant_input_lower_bound( const TruthSpec& spec );

enum class ComparisonKind
{
  full_adder,
  ripple_carry,
  toffoli,
};

struct ComparisonRow
{
  enum class Source
  {
    computed,
    literature
  };

  std::string label;
  Source source{ Source::computed };
  std::string citation; ///< literature rows only, e.g. "[12]"
  std::optional<std::size_t> gates;
  std::optional<std::size_t> delay; ///< clock cycles / unit delay
  std::optional<std::size_t> garbage;
  std::optional<std::size_t> constants;
  std::optional<CostVector> cost; ///< as printed for literature rows
  std::string composition;        ///< gate mix, e.g. "2FRG+4F2G"
  std::optional<CostVector> recomputed_cost;
  std::string footnote;
};

struct GateCount
{
  std::string gate;
  std::size_t count;
};

/// Sum of catalog cost vectors over a gate mix.
CostVector recompute_cost( const std::vector<GateCount>& mix );

/// Throws Error(invalid_argument) for ripple_carry with bits < 1.
std::vector<ComparisonRow> comparison_table( ComparisonKind kind, std::size_t bits = 1 );

std::string render_comparison_text( const std::vector<ComparisonRow>& rows, ComparisonKind kind,
                                    CostNotation notation = CostNotation::greek );
std::string render_comparison_csv( const std::vector<ComparisonRow>& rows, ComparisonKind kind,
                                   CostNotation notation = CostNotation::greek );

} // namespace revft
