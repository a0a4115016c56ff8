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

#include "revft/simulator.hpp"
#include "revft/error.hpp"

#include <algorithm>
#include <sstream>

namespace revft
{

TruthSpec::TruthSpec( std::size_t input_arity, std::vector<Output> outputs )
    : input_arity_( input_arity ), outputs_( std::move( outputs ) )
{
  if ( input_arity_ > max_exhaustive_inputs )
  {
    throw Error( ErrorCode::too_large, "truth spec arity above " + std::to_string( max_exhaustive_inputs ) );
  }
  const std::size_t rows = std::size_t{ 1 } << input_arity_;
  for ( const auto& o : outputs_ )
  {
    if ( o.values.size() != rows )
    {
      throw Error( ErrorCode::invalid_argument, "output " + o.name + " needs " + std::to_string( rows ) + " values, got " +
                                                    std::to_string( o.values.size() ) );
    }
    if ( std::any_of( o.values.begin(), o.values.end(), []( std::uint8_t v ) { return v > 1; } ) )
    {
      throw Error( ErrorCode::invalid_argument, "output " + o.name + " has a non-binary value" );
    }
  }
}

std::uint64_t TruthSpec::output_pattern( std::uint64_t i ) const
{
  std::uint64_t pattern = 0;
  for ( const auto& o : outputs_ ) pattern = ( pattern << 1 ) | o.values.at( i );
  return pattern;
}

TruthSpec parse_truth_spec( std::string_view text )
{
  std::optional<std::size_t> arity;
  std::vector<TruthSpec::Output> outputs;
  std::size_t line_no = 0;
  std::istringstream in{ std::string( text ) };
  std::string line;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    if ( const auto hash = line.find( '#' ); hash != std::string::npos ) line.erase( hash );
    std::istringstream ls( line );
    std::vector<std::string> tokens;
    for ( std::string t; ls >> t; ) tokens.push_back( t );
    if ( tokens.empty() ) continue;

    if ( tokens[0] == "inputs" )
    {
      if ( arity )
      {
        throw ParseError( line_no, 1, "duplicate 'inputs' declaration" );
      }
      if ( tokens.size() != 2 || tokens[1].empty() || tokens[1].size() > 2 ||
           !std::all_of( tokens[1].begin(), tokens[1].end(), []( char ch ) { return ch >= '0' && ch <= '9'; } ) ||
           std::stoul( tokens[1] ) > max_exhaustive_inputs )
      {
        throw ParseError( line_no, 1, "expected 'inputs <n>' with n <= " + std::to_string( max_exhaustive_inputs ) );
      }
      arity = std::stoul( tokens[1] );
    }
    else if ( tokens[0] == "output" )
    {
      if ( !arity )
      {
        throw ParseError( line_no, 1, "'output' before 'inputs'" );
      }
      if ( tokens.size() != 3 || !is_identifier( tokens[1] ) )
      {
        throw ParseError( line_no, 1, "expected 'output <name> <bits>'" );
      }
      const auto rows = std::size_t{ 1 } << *arity;
      if ( tokens[2].size() != rows )
      {
        throw ParseError( line_no, 1, "output " + tokens[1] + " needs " + std::to_string( rows ) + " bits, got " +
                                          std::to_string( tokens[2].size() ) );
      }
      TruthSpec::Output o{ tokens[1], {} };
      for ( char ch : tokens[2] )
      {
        if ( ch != '0' && ch != '1' )
        {
          throw ParseError( line_no, 1, "output values must be 0 or 1" );
        }
        o.values.push_back( static_cast<std::uint8_t>( ch - '0' ) );
      }
      outputs.push_back( std::move( o ) );
    }
    else
    {
      throw ParseError( line_no, 1, "unknown keyword '" + tokens[0] + "'" );
    }
  }
  if ( !arity )
  {
    throw ParseError( line_no + 1, 1, "missing 'inputs' declaration" );
  }
  return TruthSpec( *arity, std::move( outputs ) );
}

TruthSpec full_adder_spec()
{
  return TruthSpec::from_function( 3, { "s", "cout" }, []( const BitVector& x ) {
    const int a = x[0], b = x[1], cin = x[2];
    return BitVector{ a ^ b ^ cin, ( ( a ^ b ) & cin ) ^ ( a & b ) };
  } );
}

std::optional<bool> Trace::value_of( std::string_view wire ) const
{
  for ( const auto& wv : assignment )
  {
    if ( wv.wire == wire ) return wv.value;
  }
  return std::nullopt;
}

std::optional<bool> Trace::output( std::string_view name, const Circuit& c ) const
{
  const auto it = std::find( c.primary_outputs.begin(), c.primary_outputs.end(), name );
  if ( it == c.primary_outputs.end() ) return std::nullopt;
  return outputs[static_cast<std::size_t>( it - c.primary_outputs.begin() )];
}

std::vector<std::uint8_t> propagate( const CompiledCircuit& cc, const std::vector<std::uint8_t>& input_lines,
                                     const WireTap& tap )
{
  if ( input_lines.size() != cc.input_line_count() )
  {
    throw Error( ErrorCode::invalid_argument, "expected " + std::to_string( cc.input_line_count() ) + " input lines, got " +
                                                  std::to_string( input_lines.size() ) );
  }
  std::vector<std::uint8_t> values( cc.wire_names.size(), 0 );
  for ( std::size_t i = 0; i < input_lines.size(); ++i )
  {
    values[i] = input_lines[i];
    if ( tap ) tap( i, values[i] );
  }
  for ( const auto& op : cc.ops )
  {
    std::uint32_t pattern = 0;
    for ( auto w : op.inputs ) pattern = ( pattern << 1 ) | values[w];
    const auto result = op.gate->apply( pattern );
    const auto k = op.outputs.size();
    for ( std::size_t p = 0; p < k; ++p )
    {
      auto& v = values[op.outputs[p]];
      v = static_cast<std::uint8_t>( ( result >> ( k - 1 - p ) ) & 1u );
      if ( tap ) tap( op.outputs[p], v );
    }
  }
  return values;
}

std::vector<std::uint8_t> propagate( const CompiledCircuit& cc, const std::vector<std::uint8_t>& input_lines )
{
  return propagate( cc, input_lines, WireTap{} );
}

Trace make_trace( const CompiledCircuit& cc, const std::vector<std::uint8_t>& wires )
{
  Trace t;
  t.assignment.reserve( wires.size() );
  for ( std::size_t i = 0; i < wires.size(); ++i ) t.assignment.push_back( { cc.wire_names[i], wires[i] != 0 } );

  auto pick = [&]( auto first, auto last ) {
    std::vector<std::uint8_t> bits;
    for ( auto it = first; it != last; ++it ) bits.push_back( wires[*it] );
    return BitVector( std::move( bits ) );
  };
  t.inputs = BitVector( std::vector<std::uint8_t>( wires.begin(), wires.begin() + cc.primary_input_count ) );
  t.input_lines = BitVector( std::vector<std::uint8_t>( wires.begin(), wires.begin() + cc.input_line_count() ) );
  t.outputs = pick( cc.primary_output_wires.begin(), cc.primary_output_wires.end() );
  t.garbage = pick( cc.garbage_wires.begin(), cc.garbage_wires.end() );
  t.output_lines = pick( cc.output_line_wires.begin(), cc.output_line_wires.end() );
  return t;
}

namespace
{

std::vector<std::uint8_t> line_values( const CompiledCircuit& cc, const BitVector& inputs )
{
  if ( inputs.width() != cc.primary_input_count )
  {
    throw Error( ErrorCode::invalid_argument, "expected " + std::to_string( cc.primary_input_count ) +
                                                  " input bits, got " + std::to_string( inputs.width() ) );
  }
  auto lines = inputs.bits();
  lines.insert( lines.end(), cc.constant_values.begin(), cc.constant_values.end() );
  return lines;
}

void check_cap( const Circuit& c, std::size_t cap )
{
  if ( c.primary_inputs.size() > cap )
  {
    throw Error( ErrorCode::too_large, "exhaustive simulation too large: " + std::to_string( c.primary_inputs.size() ) +
                                           " inputs exceeds cap " + std::to_string( cap ) );
  }
}

} // namespace

Trace evaluate( const Circuit& c, const BitVector& inputs )
{
  const auto cc = compile( c );
  return make_trace( cc, propagate( cc, line_values( cc, inputs ) ) );
}

std::vector<Trace> exhaustive_table( const Circuit& c, std::size_t cap )
{
  check_cap( c, cap );
  const auto cc = compile( c );
  const auto n = cc.primary_input_count;
  std::vector<Trace> traces;
  traces.reserve( std::size_t{ 1 } << n );
  for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << n ); ++x )
  {
    traces.push_back( make_trace( cc, propagate( cc, line_values( cc, BitVector::from_index( x, n ) ) ) ) );
  }
  return traces;
}

EquivalenceResult check_equivalence( const Circuit& c, const TruthSpec& spec, const std::map<std::string, std::string>& binding )
{
  if ( spec.input_arity() != c.primary_inputs.size() )
  {
    throw Error( ErrorCode::invalid_argument, "spec has " + std::to_string( spec.input_arity() ) + " inputs, circuit has " +
                                                  std::to_string( c.primary_inputs.size() ) );
  }
  std::vector<std::size_t> positions;
  for ( const auto& o : spec.outputs() )
  {
    const auto bound = binding.empty() ? o.name : ( binding.contains( o.name ) ? binding.at( o.name ) : std::string{} );
    const auto it = std::find( c.primary_outputs.begin(), c.primary_outputs.end(), bound );
    if ( bound.empty() || it == c.primary_outputs.end() )
    {
      throw Error( ErrorCode::unknown_name, "unbound output " + o.name );
    }
    positions.push_back( static_cast<std::size_t>( it - c.primary_outputs.begin() ) );
  }

  const auto traces = exhaustive_table( c );
  for ( std::size_t x = 0; x < traces.size(); ++x )
  {
    for ( std::size_t o = 0; o < positions.size(); ++o )
    {
      if ( traces[x].outputs[positions[o]] != ( spec.outputs()[o].values[x] != 0 ) )
      {
        return { false, traces[x].inputs, spec.outputs()[o].name };
      }
    }
  }
  return {};
}

ParityAudit parity_audit( const Circuit& c )
{
  ParityAudit audit;
  for ( const auto& t : exhaustive_table( c ) )
  {
    if ( t.input_lines.parity() != t.output_lines.parity() )
    {
      audit.circuit_parity_preserving = false;
      audit.offending_vectors.push_back( t.inputs );
    }
  }
  return audit;
}

std::string exhaustive_table_tsv( const Circuit& c, const std::vector<Trace>& traces )
{
  std::ostringstream os;
  std::vector<std::string> header = c.primary_inputs;
  header.insert( header.end(), c.primary_outputs.begin(), c.primary_outputs.end() );
  header.insert( header.end(), c.garbage_outputs.begin(), c.garbage_outputs.end() );
  header.push_back( "parity_in" );
  header.push_back( "parity_out" );
  for ( std::size_t i = 0; i < header.size(); ++i ) os << ( i ? "\t" : "" ) << header[i];
  os << '\n';
  for ( const auto& t : traces )
  {
    bool first = true;
    for ( const auto* v : { &t.inputs, &t.outputs, &t.garbage } )
    {
      for ( auto b : v->bits() )
      {
        os << ( first ? "" : "\t" ) << static_cast<int>( b );
        first = false;
      }
    }
    os << ( first ? "" : "\t" ) << t.input_lines.parity() << '\t' << t.output_lines.parity() << '\n';
  }
  return os.str();
}

} // namespace revft
