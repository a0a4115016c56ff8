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
#include "cost.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace revft
{

/// Largest arity accepted for an explicit gate table (2^20 rows).
inline constexpr unsigned max_gate_arity = 20;

/// A named k x k Boolean mapping stored as an explicit table indexed by the
/// input pattern (port A is the most significant bit).
///
/// The mapping is not required to be a bijection; is_reversible() reports
/// whether it is. Parity preservation is computed once at construction.
class GateSpec
{
public:
  using Function = std::function<BitVector( const BitVector& )>;

  GateSpec( std::string name, unsigned arity, std::vector<std::uint32_t> table, CostVector cost = {} );

  static GateSpec from_function( std::string name, unsigned arity, const Function& fn, CostVector cost = {} );

  const std::string& name() const noexcept { return name_; }
  unsigned arity() const noexcept { return arity_; }
  const CostVector& cost() const noexcept { return cost_; }
  bool parity_preserving() const noexcept { return parity_preserving_; }
  const std::vector<std::uint32_t>& table() const noexcept { return table_; }

  std::uint32_t apply( std::uint32_t pattern ) const { return table_.at( pattern ); }
  BitVector apply( const BitVector& input ) const;

  GateSpec with_cost( CostVector cost ) const;
  GateSpec renamed( std::string name ) const;

  /// Same name, arity and mapping; cost is data and does not take part.
  friend bool operator==( const GateSpec& a, const GateSpec& b )
  {
    return a.name_ == b.name_ && a.arity_ == b.arity_ && a.table_ == b.table_;
  }

private:
  std::string name_;
  unsigned arity_;
  std::vector<std::uint32_t> table_;
  CostVector cost_;
  bool parity_preserving_;
};

using GateRef = std::shared_ptr<const GateSpec>;

/// Names of the builtin catalog in presentation order.
const std::vector<std::string>& builtin_gate_names();

/// FG, PG, TG, FRG, F2G, NFT or IG. Throws Error(unknown_name) otherwise.
const GateSpec& builtin_gate( std::string_view name );
GateRef builtin_gate_ref( std::string_view name );
bool is_builtin_gate( std::string_view name ) noexcept;

struct TruthRow
{
  BitVector input;
  BitVector output;
};

std::vector<TruthRow> truth_table( const GateSpec& g );
bool is_reversible( const GateSpec& g );
bool is_parity_preserving( const GateSpec& g );

/// Throws Error(not_reversible) when the mapping is not a bijection.
GateSpec invert_gate( const GateSpec& g );

/// A B C D / P Q R S for arity up to four, x0.. / y0.. beyond.
std::vector<std::string> input_port_names( unsigned arity );
std::vector<std::string> output_port_names( unsigned arity );

std::string truth_table_tsv( const GateSpec& g );

} // namespace revft
