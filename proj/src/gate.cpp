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

#include "revft/gate.hpp"
#include "revft/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace revft
{

GateSpec::GateSpec( std::string name, unsigned arity, std::vector<std::uint32_t> table, CostVector cost )
    : name_( std::move( name ) ), arity_( arity ), table_( std::move( table ) ), cost_( cost ), parity_preserving_( true )
{
  if ( arity_ == 0 || arity_ > max_gate_arity )
  {
    throw Error( ErrorCode::invalid_argument, "gate arity must be between 1 and " + std::to_string( max_gate_arity ) );
  }
  const std::size_t rows = std::size_t{ 1 } << arity_;
  if ( table_.size() != rows )
  {
    throw Error( ErrorCode::invalid_argument, "gate table for arity " + std::to_string( arity_ ) + " needs " +
                                                  std::to_string( rows ) + " rows, got " + std::to_string( table_.size() ) );
  }
  for ( std::size_t x = 0; x < rows; ++x )
  {
    if ( table_[x] >= rows )
    {
      throw Error( ErrorCode::invalid_argument, "gate table entry out of range" );
    }
    if ( parity_of( x ) != parity_of( table_[x] ) )
    {
      parity_preserving_ = false;
    }
  }
}

GateSpec GateSpec::from_function( std::string name, unsigned arity, const Function& fn, CostVector cost )
{
  if ( arity == 0 || arity > max_gate_arity )
  {
    throw Error( ErrorCode::invalid_argument, "gate arity must be between 1 and " + std::to_string( max_gate_arity ) );
  }
  std::vector<std::uint32_t> table( std::size_t{ 1 } << arity );
  for ( std::uint32_t x = 0; x < table.size(); ++x )
  {
    const BitVector out = fn( BitVector::from_index( x, arity ) );
    if ( out.width() != arity )
    {
      throw Error( ErrorCode::invalid_argument, "gate function returned wrong width" );
    }
    table[x] = static_cast<std::uint32_t>( out.to_index() );
  }
  return GateSpec( std::move( name ), arity, std::move( table ), cost );
}

BitVector GateSpec::apply( const BitVector& input ) const
{
  if ( input.width() != arity_ )
  {
    throw Error( ErrorCode::invalid_argument, name_ + " expects " + std::to_string( arity_ ) + " inputs, got " +
                                                  std::to_string( input.width() ) );
  }
  return BitVector::from_index( table_[input.to_index()], arity_ );
}

GateSpec GateSpec::with_cost( CostVector cost ) const
{
  GateSpec copy = *this;
  copy.cost_ = cost;
  return copy;
}

GateSpec GateSpec::renamed( std::string name ) const
{
  GateSpec copy = *this;
  copy.name_ = std::move( name );
  return copy;
}

namespace
{

using Bits = BitVector;

// Closed-form output equations; each catalog table is checked against the
// reference truth tables in the unit tests.
GateSpec make_builtin( const std::string& name )
{
  if ( name == "FG" )
  {
    return GateSpec::from_function( name, 2, []( const Bits& x ) {
      const int a = x[0], b = x[1];
      return Bits{ a, a ^ b };
    }, { 1, 0, 0 } );
  }
  if ( name == "PG" )
  {
    return GateSpec::from_function( name, 3, []( const Bits& x ) {
      const int a = x[0], b = x[1], c = x[2];
      return Bits{ a, a ^ b, ( a & b ) ^ c };
    }, { 2, 1, 0 } );
  }
  if ( name == "TG" )
  {
    return GateSpec::from_function( name, 3, []( const Bits& x ) {
      const int a = x[0], b = x[1], c = x[2];
      return Bits{ a, b, ( a & b ) ^ c };
    }, { 1, 1, 0 } );
  }
  if ( name == "FRG" )
  {
    return GateSpec::from_function( name, 3, []( const Bits& x ) {
      const int a = x[0], b = x[1], c = x[2], na = !a;
      return Bits{ a, ( na & b ) ^ ( a & c ), ( na & c ) ^ ( a & b ) };
    }, { 2, 4, 1 } );
  }
  if ( name == "F2G" )
  {
    return GateSpec::from_function( name, 3, []( const Bits& x ) {
      const int a = x[0], b = x[1], c = x[2];
      return Bits{ a, a ^ b, a ^ c };
    }, { 2, 0, 0 } );
  }
  if ( name == "NFT" )
  {
    return GateSpec::from_function( name, 3, []( const Bits& x ) {
      const int a = x[0], b = x[1], c = x[2], nb = !b, nc = !c;
      return Bits{ a ^ b, ( a & nc ) ^ ( nb & c ), ( a & nc ) ^ ( b & c ) };
    }, { 3, 3, 2 } );
  }
  if ( name == "IG" )
  {
    return GateSpec::from_function( name, 4, []( const Bits& x ) {
      const int a = x[0], b = x[1], c = x[2], d = x[3], nb = !b;
      return Bits{ a, a ^ b, ( a & b ) ^ c, ( a & nb ) ^ d };
    }, { 4, 3, 1 } );
  }
  throw Error( ErrorCode::unknown_name, "no such builtin gate '" + name + "'" );
}

const std::map<std::string, GateRef, std::less<>>& catalog()
{
  static const auto gates = [] {
    std::map<std::string, GateRef, std::less<>> m;
    for ( const auto& name : builtin_gate_names() )
    {
      m.emplace( name, std::make_shared<const GateSpec>( make_builtin( name ) ) );
    }
    return m;
  }();
  return gates;
}

} // namespace

const std::vector<std::string>& builtin_gate_names()
{
  static const std::vector<std::string> names{ "FG", "PG", "TG", "FRG", "F2G", "NFT", "IG" };
  return names;
}

GateRef builtin_gate_ref( std::string_view name )
{
  const auto& gates = catalog();
  if ( auto it = gates.find( name ); it != gates.end() )
  {
    return it->second;
  }
  throw Error( ErrorCode::unknown_name, "no such builtin gate '" + std::string( name ) + "'" );
}

const GateSpec& builtin_gate( std::string_view name )
{
  return *builtin_gate_ref( name );
}

bool is_builtin_gate( std::string_view name ) noexcept
{
  return catalog().contains( name );
}

std::vector<TruthRow> truth_table( const GateSpec& g )
{
  std::vector<TruthRow> rows;
  rows.reserve( g.table().size() );
  for ( std::uint32_t x = 0; x < g.table().size(); ++x )
  {
    rows.push_back( { BitVector::from_index( x, g.arity() ), BitVector::from_index( g.table()[x], g.arity() ) } );
  }
  return rows;
}

bool is_reversible( const GateSpec& g )
{
  std::vector<bool> seen( g.table().size(), false );
  for ( auto y : g.table() )
  {
    if ( seen[y] )
    {
      return false;
    }
    seen[y] = true;
  }
  return true;
}

bool is_parity_preserving( const GateSpec& g )
{
  return std::all_of( g.table().begin(), g.table().end(), [&g, x = std::uint32_t{ 0 }]( std::uint32_t y ) mutable {
    return parity_of( x++ ) == parity_of( y );
  } );
}

GateSpec invert_gate( const GateSpec& g )
{
  if ( !is_reversible( g ) )
  {
    throw Error( ErrorCode::not_reversible, "gate not reversible: " + g.name() );
  }
  std::vector<std::uint32_t> inverse( g.table().size() );
  for ( std::uint32_t x = 0; x < g.table().size(); ++x )
  {
    inverse[g.table()[x]] = x;
  }
  return GateSpec( g.name(), g.arity(), std::move( inverse ), g.cost() );
}

std::vector<std::string> input_port_names( unsigned arity )
{
  static const char* const letters[] = { "A", "B", "C", "D" };
  std::vector<std::string> names;
  for ( unsigned i = 0; i < arity; ++i )
  {
    names.push_back( arity <= 4 ? letters[i] : "x" + std::to_string( i ) );
  }
  return names;
}

std::vector<std::string> output_port_names( unsigned arity )
{
  static const char* const letters[] = { "P", "Q", "R", "S" };
  std::vector<std::string> names;
  for ( unsigned i = 0; i < arity; ++i )
  {
    names.push_back( arity <= 4 ? letters[i] : "y" + std::to_string( i ) );
  }
  return names;
}

std::string truth_table_tsv( const GateSpec& g )
{
  std::ostringstream os;
  bool first = true;
  for ( const auto& names : { input_port_names( g.arity() ), output_port_names( g.arity() ) } )
  {
    for ( const auto& n : names )
    {
      os << ( first ? "" : "\t" ) << n;
      first = false;
    }
  }
  os << '\n';
  for ( const auto& row : truth_table( g ) )
  {
    first = true;
    for ( const auto* v : { &row.input, &row.output } )
    {
      for ( auto b : v->bits() )
      {
        os << ( first ? "" : "\t" ) << static_cast<int>( b );
        first = false;
      }
    }
    os << '\n';
  }
  return os.str();
}

} // namespace revft
