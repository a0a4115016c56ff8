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

#include "bit_vector.hpp"
#include "circuit.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revft
{

/// Default cap on primary inputs for exhaustive enumeration.
inline constexpr std::size_t max_exhaustive_inputs = 20;

/// Multi-output Boolean function given by value tables of 2^n entries,
/// entry i being the value on input pattern i.
class TruthSpec
{
public:
  struct Output
  {
    std::string name;
    std::vector<std::uint8_t> values;
  };

  TruthSpec( std::size_t input_arity, std::vector<Output> outputs );

  template<class Fn>
  static TruthSpec from_function( std::size_t input_arity, std::vector<std::string> names, Fn&& fn )
  {
    std::vector<Output> outputs;
    for ( auto& name : names )
    {
      outputs.push_back( { std::move( name ), std::vector<std::uint8_t>( std::size_t{ 1 } << input_arity ) } );
    }
    for ( std::uint64_t i = 0; i < ( std::uint64_t{ 1 } << input_arity ); ++i )
    {
      const BitVector out = fn( BitVector::from_index( i, input_arity ) );
      for ( std::size_t o = 0; o < outputs.size(); ++o )
      {
        outputs[o].values[i] = out[o] ? 1 : 0;
      }
    }
    return TruthSpec( input_arity, std::move( outputs ) );
  }

  std::size_t input_arity() const noexcept { return input_arity_; }
  const std::vector<Output>& outputs() const noexcept { return outputs_; }

  /// Output pattern for input pattern i, first output most significant.
  std::uint64_t output_pattern( std::uint64_t i ) const;

private:
  std::size_t input_arity_;
  std::vector<Output> outputs_;
};

/// Reads `inputs <n>` followed by `output <name> <bits>` lines.
TruthSpec parse_truth_spec( std::string_view text );

/// S = A^B^Cin, Cout = (A^B)Cin ^ AB over inputs (A, B, Cin).
TruthSpec full_adder_spec();

struct WireValue
{
  std::string wire;
  bool value;
};

struct Trace
{
  std::vector<WireValue> assignment; ///< every wire once, topological order
  BitVector inputs;                  ///< primary inputs
  BitVector input_lines;             ///< primary inputs then constants
  BitVector outputs;                 ///< primary outputs
  BitVector garbage;
  BitVector output_lines; ///< primary outputs then garbage

  std::optional<bool> value_of( std::string_view wire ) const;
  std::optional<bool> output( std::string_view name, const Circuit& c ) const;
};

/// Line-level evaluation over a compiled circuit: values for every wire given
/// values for every input line.
std::vector<std::uint8_t> propagate( const CompiledCircuit& cc, const std::vector<std::uint8_t>& input_lines );

/// Called with (wire index, value) right after each wire is produced; may
/// overwrite the value seen downstream.
using WireTap = std::function<void( std::size_t, std::uint8_t& )>;
std::vector<std::uint8_t> propagate( const CompiledCircuit& cc, const std::vector<std::uint8_t>& input_lines,
                                     const WireTap& tap );
Trace make_trace( const CompiledCircuit& cc, const std::vector<std::uint8_t>& wires );

/// Throws Error(invalid_argument) on width mismatch.
Trace evaluate( const Circuit& c, const BitVector& inputs );

/// Throws Error(too_large) above the cap.
std::vector<Trace> exhaustive_table( const Circuit& c, std::size_t cap = max_exhaustive_inputs );

struct EquivalenceResult
{
  bool equivalent{ true };
  std::optional<BitVector> counterexample; ///< smallest failing input
  std::string failing_output;
};

/// binding maps spec output names to circuit primary-output names; an empty
/// binding binds by identical name.
EquivalenceResult check_equivalence( const Circuit& c, const TruthSpec& spec,
                                     const std::map<std::string, std::string>& binding = {} );

struct ParityAudit
{
  bool circuit_parity_preserving{ true };
  std::vector<BitVector> offending_vectors;
};

ParityAudit parity_audit( const Circuit& c );

/// TSV with input, primary output, garbage, parity_in and parity_out columns.
std::string exhaustive_table_tsv( const Circuit& c, const std::vector<Trace>& traces );

} // namespace revft
