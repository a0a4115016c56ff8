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

#include "revft/circuit.hpp"
#include "revft/error.hpp"
#include "revft/simulator.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace revft
{

bool operator==( const GateInstance& a, const GateInstance& b )
{
  const bool same_gate = ( !a.gate && !b.gate ) || ( a.gate && b.gate && *a.gate == *b.gate );
  return a.id == b.id && same_gate && a.inputs == b.inputs && a.outputs == b.outputs;
}

bool operator==( const Circuit& a, const Circuit& b )
{
  return a.name == b.name && a.primary_inputs == b.primary_inputs && a.constants == b.constants &&
         a.instances == b.instances && a.primary_outputs == b.primary_outputs && a.garbage_outputs == b.garbage_outputs;
}

bool natural_less( const std::string& a, const std::string& b )
{
  std::size_t i = 0, j = 0;
  while ( i < a.size() && j < b.size() )
  {
    const bool da = std::isdigit( static_cast<unsigned char>( a[i] ) ) != 0;
    const bool db = std::isdigit( static_cast<unsigned char>( b[j] ) ) != 0;
    if ( da && db )
    {
      std::size_t ei = i, ej = j;
      while ( ei < a.size() && std::isdigit( static_cast<unsigned char>( a[ei] ) ) ) ++ei;
      while ( ej < b.size() && std::isdigit( static_cast<unsigned char>( b[ej] ) ) ) ++ej;
      // compare digit runs by value, ignoring leading zeros
      std::string_view ra( a.data() + i, ei - i ), rb( b.data() + j, ej - j );
      while ( ra.size() > 1 && ra.front() == '0' ) ra.remove_prefix( 1 );
      while ( rb.size() > 1 && rb.front() == '0' ) rb.remove_prefix( 1 );
      if ( ra.size() != rb.size() ) return ra.size() < rb.size();
      if ( ra != rb ) return ra < rb;
      i = ei;
      j = ej;
      continue;
    }
    if ( a[i] != b[j] ) return a[i] < b[j];
    ++i;
    ++j;
  }
  if ( ( a.size() - i ) != ( b.size() - j ) ) return ( a.size() - i ) < ( b.size() - j );
  return a < b;
}

bool is_identifier( std::string_view text ) noexcept
{
  if ( text.empty() ) return false;
  const auto head = static_cast<unsigned char>( text.front() );
  if ( !std::isalpha( head ) && head != '_' ) return false;
  return std::all_of( text.begin() + 1, text.end(), []( char ch ) {
    const auto u = static_cast<unsigned char>( ch );
    return std::isalnum( u ) || u == '_';
  } );
}

std::string ValidationReport::to_string() const
{
  if ( ok() ) return "ok";
  std::ostringstream os;
  for ( std::size_t i = 0; i < violations.size(); ++i )
  {
    os << ( i ? "; " : "" ) << violations[i];
  }
  return os.str();
}

namespace
{

struct WireUse
{
  std::size_t origins{ 0 };
  std::size_t gate_sinks{ 0 };
  std::size_t primary{ 0 };
  std::size_t garbage{ 0 };
  std::optional<std::size_t> origin_instance; ///< producing instance, if any
};

struct WireTable
{
  std::vector<std::string> order; ///< first-appearance order
  std::unordered_map<std::string, WireUse> uses;

  WireUse& at( const std::string& name )
  {
    auto [it, inserted] = uses.try_emplace( name );
    if ( inserted ) order.push_back( name );
    return it->second;
  }
};

WireTable collect_wires( const Circuit& c )
{
  WireTable t;
  for ( const auto& w : c.primary_inputs ) ++t.at( w ).origins;
  for ( const auto& k : c.constants ) ++t.at( k.wire ).origins;
  for ( std::size_t i = 0; i < c.instances.size(); ++i )
  {
    for ( const auto& w : c.instances[i].inputs ) ++t.at( w ).gate_sinks;
    for ( const auto& w : c.instances[i].outputs )
    {
      auto& use = t.at( w );
      ++use.origins;
      if ( !use.origin_instance ) use.origin_instance = i;
    }
  }
  for ( const auto& w : c.primary_outputs ) ++t.at( w ).primary;
  for ( const auto& w : c.garbage_outputs ) ++t.at( w ).garbage;
  return t;
}

// Kahn's algorithm with natural-order tie breaking on instance ids. Returns
// fewer indices than instances when the instance graph has a cycle.
std::vector<std::size_t> topo_indices( const Circuit& c, const WireTable& wires )
{
  const std::size_t n = c.instances.size();
  std::vector<std::vector<std::size_t>> succ( n );
  std::vector<std::size_t> indegree( n, 0 );
  for ( std::size_t i = 0; i < n; ++i )
  {
    for ( const auto& w : c.instances[i].inputs )
    {
      const auto it = wires.uses.find( w );
      if ( it != wires.uses.end() && it->second.origin_instance )
      {
        succ[*it->second.origin_instance].push_back( i );
        ++indegree[i];
      }
    }
  }

  auto later = [&c]( std::size_t x, std::size_t y ) {
    const auto& a = c.instances[x].id;
    const auto& b = c.instances[y].id;
    return a == b ? x > y : natural_less( b, a );
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype( later )> ready( later );
  for ( std::size_t i = 0; i < n; ++i )
  {
    if ( indegree[i] == 0 ) ready.push( i );
  }
  std::vector<std::size_t> order;
  order.reserve( n );
  while ( !ready.empty() )
  {
    const auto i = ready.top();
    ready.pop();
    order.push_back( i );
    for ( auto s : succ[i] )
    {
      if ( --indegree[s] == 0 ) ready.push( s );
    }
  }
  return order;
}

} // namespace

ValidationReport validate( const Circuit& c )
{
  ValidationReport report;
  auto& v = report.violations;

  std::map<std::string, std::size_t> ids;
  for ( const auto& inst : c.instances )
  {
    if ( ++ids[inst.id] == 2 )
    {
      v.push_back( "duplicate instance id " + inst.id );
    }
    if ( !inst.gate )
    {
      v.push_back( "unresolved gate in instance " + inst.id );
      continue;
    }
    const auto k = inst.gate->arity();
    if ( inst.inputs.size() != k )
    {
      v.push_back( inst.id + ": " + inst.gate->name() + " expects " + std::to_string( k ) + " inputs, got " +
                   std::to_string( inst.inputs.size() ) );
    }
    if ( inst.outputs.size() != k )
    {
      v.push_back( inst.id + ": " + inst.gate->name() + " expects " + std::to_string( k ) + " outputs, got " +
                   std::to_string( inst.outputs.size() ) );
    }
  }

  const auto wires = collect_wires( c );
  for ( const auto& name : wires.order )
  {
    const auto& u = wires.uses.at( name );
    if ( u.origins == 0 )
    {
      v.push_back( "undriven wire " + name );
    }
    else if ( u.origins > 1 )
    {
      v.push_back( "wire " + name + " defined more than once" );
    }

    const auto sinks = u.gate_sinks + u.primary + u.garbage;
    if ( u.primary > 0 && u.garbage > 0 )
    {
      v.push_back( "wire " + name + " designated both primary and garbage" );
    }
    else if ( sinks == 0 )
    {
      v.push_back( "dangling wire " + name );
    }
    else if ( sinks > 1 )
    {
      v.push_back( u.gate_sinks > 0 ? "fan-out at wire " + name : "wire " + name + " designated more than once" );
    }
  }

  if ( topo_indices( c, wires ).size() != c.instances.size() )
  {
    v.push_back( "cycle detected" );
  }

  if ( c.input_line_count() != c.output_line_count() )
  {
    v.push_back( "line count mismatch: " + std::to_string( c.input_line_count() ) + " input lines, " +
                 std::to_string( c.output_line_count() ) + " output lines" );
  }
  return report;
}

std::vector<std::string> topological_order( const Circuit& c )
{
  const auto wires = collect_wires( c );
  const auto order = topo_indices( c, wires );
  if ( order.size() != c.instances.size() )
  {
    throw Error( ErrorCode::invalid_circuit, "cycle detected" );
  }
  std::vector<std::string> ids;
  ids.reserve( order.size() );
  for ( auto i : order ) ids.push_back( c.instances[i].id );
  return ids;
}

std::size_t CompiledCircuit::wire_index( const std::string& name ) const
{
  const auto it = std::find( wire_names.begin(), wire_names.end(), name );
  if ( it == wire_names.end() )
  {
    throw Error( ErrorCode::unknown_name, "unknown wire " + name );
  }
  return static_cast<std::size_t>( it - wire_names.begin() );
}

CompiledCircuit compile( const Circuit& c )
{
  if ( const auto report = validate( c ); !report.ok() )
  {
    throw Error( ErrorCode::invalid_circuit, "invalid circuit " + c.name + ": " + report.to_string() );
  }
  const auto wires = collect_wires( c );
  const auto order = topo_indices( c, wires );

  CompiledCircuit cc;
  std::unordered_map<std::string, std::size_t> index;
  auto add = [&]( const std::string& name ) {
    index.emplace( name, cc.wire_names.size() );
    cc.wire_names.push_back( name );
  };
  for ( const auto& w : c.primary_inputs ) add( w );
  cc.primary_input_count = c.primary_inputs.size();
  for ( const auto& k : c.constants )
  {
    add( k.wire );
    cc.constant_values.push_back( k.value ? 1 : 0 );
  }
  for ( auto i : order )
  {
    for ( const auto& w : c.instances[i].outputs ) add( w );
  }
  for ( auto i : order )
  {
    const auto& inst = c.instances[i];
    CompiledCircuit::Op op{ i, inst.gate.get(), {}, {} };
    for ( const auto& w : inst.inputs ) op.inputs.push_back( index.at( w ) );
    for ( const auto& w : inst.outputs ) op.outputs.push_back( index.at( w ) );
    cc.ops.push_back( std::move( op ) );
  }
  for ( const auto& w : c.primary_outputs ) cc.primary_output_wires.push_back( index.at( w ) );
  for ( const auto& w : c.garbage_outputs ) cc.garbage_wires.push_back( index.at( w ) );
  cc.output_line_wires = cc.primary_output_wires;
  cc.output_line_wires.insert( cc.output_line_wires.end(), cc.garbage_wires.begin(), cc.garbage_wires.end() );
  return cc;
}

GateSpec circuit_as_bijection( const Circuit& c )
{
  const auto cc = compile( c );
  const auto lines = cc.input_line_count();
  if ( lines == 0 || lines > max_gate_arity )
  {
    throw Error( ErrorCode::too_large, "circuit " + c.name + " has " + std::to_string( lines ) +
                                           " lines; composite view supports 1 to " + std::to_string( max_gate_arity ) );
  }
  std::vector<std::uint32_t> table( std::size_t{ 1 } << lines );
  std::vector<std::uint8_t> in( lines );
  for ( std::uint32_t x = 0; x < table.size(); ++x )
  {
    for ( std::size_t i = 0; i < lines; ++i ) in[i] = ( x >> ( lines - 1 - i ) ) & 1u;
    const auto values = propagate( cc, in );
    std::uint32_t y = 0;
    for ( auto w : cc.output_line_wires ) y = ( y << 1 ) | values[w];
    table[x] = y;
  }
  CostVector cost;
  for ( const auto& inst : c.instances ) cost += inst.gate->cost();
  return GateSpec( c.name, static_cast<unsigned>( lines ), std::move( table ), cost );
}

Circuit invert_circuit( const Circuit& c )
{
  if ( const auto report = validate( c ); !report.ok() )
  {
    throw Error( ErrorCode::invalid_circuit, "invalid circuit " + c.name + ": " + report.to_string() );
  }
  Circuit inv;
  inv.name = c.name + "_inv";
  inv.primary_inputs = c.primary_outputs;
  inv.primary_inputs.insert( inv.primary_inputs.end(), c.garbage_outputs.begin(), c.garbage_outputs.end() );
  const auto order = topological_order( c );
  for ( auto it = order.rbegin(); it != order.rend(); ++it )
  {
    const auto& inst = *std::find_if( c.instances.begin(), c.instances.end(),
                                      [&]( const GateInstance& g ) { return g.id == *it; } );
    auto inverse = invert_gate( *inst.gate );
    if ( !( inverse == *inst.gate ) )
    {
      inverse = inverse.renamed( inst.gate->name() + "_inv" );
    }
    inv.instances.push_back( { inst.id, std::make_shared<const GateSpec>( std::move( inverse ) ), inst.outputs, inst.inputs } );
  }
  inv.primary_outputs = c.primary_inputs;
  for ( const auto& k : c.constants ) inv.primary_outputs.push_back( k.wire );
  return inv;
}

} // namespace revft
