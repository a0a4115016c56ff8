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

#include "revft/netlist_dsl.hpp"
#include "revft/error.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace revft
{

namespace
{

struct Token
{
  std::string_view text;
  std::size_t column;
};

struct WireState
{
  std::size_t defined_line;
  bool consumed{ false };
  bool by_gate{ false };
};

class NetlistReader
{
public:
  ParsedCircuit read( std::string_view text )
  {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while ( pos <= text.size() )
    {
      const auto end = text.find( '\n', pos );
      auto line = text.substr( pos, end == std::string_view::npos ? std::string_view::npos : end - pos );
      ++line_no;
      read_line( line, line_no );
      if ( end == std::string_view::npos ) break;
      pos = end + 1;
    }
    return finish( line_no + 1 );
  }

private:
  void read_line( std::string_view line, std::size_t line_no )
  {
    if ( !line.empty() && line.back() == '\r' ) line.remove_suffix( 1 );
    if ( const auto hash = line.find( '#' ); hash != std::string_view::npos ) line = line.substr( 0, hash );

    for ( std::size_t j = 0; j < line.size(); ++j )
    {
      const auto ch = static_cast<unsigned char>( line[j] );
      if ( ch != ' ' && ch != '\t' && ( ch < 0x21 || ch > 0x7e ) )
      {
        throw ParseError( line_no, j + 1, "unexpected character" );
      }
    }

    std::vector<Token> tokens;
    std::size_t i = 0;
    while ( i < line.size() )
    {
      if ( line[i] == ' ' || line[i] == '\t' )
      {
        ++i;
        continue;
      }
      const auto start = i;
      while ( i < line.size() && line[i] != ' ' && line[i] != '\t' ) ++i;
      tokens.push_back( { line.substr( start, i - start ), start + 1 } );
    }
    if ( tokens.empty() ) return;

    const auto keyword = tokens.front().text;
    if ( !seen_circuit_ && keyword != "circuit" )
    {
      throw ParseError( line_no, tokens.front().column, "expected 'circuit' header" );
    }
    if ( keyword == "circuit" ) read_header( tokens, line_no );
    else if ( keyword == "inputs" ) read_inputs( tokens, line_no );
    else if ( keyword == "constants" ) read_constants( tokens, line_no );
    else if ( keyword == "gate" ) read_gate( tokens, line_no );
    else if ( keyword == "outputs" ) read_designation( tokens, line_no, seen_outputs_, circuit_.primary_outputs );
    else if ( keyword == "garbage" ) read_designation( tokens, line_no, seen_garbage_, circuit_.garbage_outputs );
    else throw ParseError( line_no, tokens.front().column, "unknown keyword '" + std::string( keyword ) + "'" );
  }

  static std::string identifier( const Token& t, std::size_t line_no )
  {
    if ( !is_identifier( t.text ) )
    {
      throw ParseError( line_no, t.column, "invalid identifier '" + std::string( t.text ) + "'" );
    }
    return std::string( t.text );
  }

  void once( bool& seen, const Token& t, std::size_t line_no )
  {
    if ( seen )
    {
      throw ParseError( line_no, t.column, "duplicate '" + std::string( t.text ) + "' declaration" );
    }
    seen = true;
  }

  void define( const std::string& wire, const Token& t, std::size_t line_no )
  {
    if ( wires_.contains( wire ) )
    {
      throw ParseError( line_no, t.column, "wire " + wire + " redefined" );
    }
    wires_.emplace( wire, WireState{ line_no } );
    wire_order_.push_back( wire );
  }

  WireState& lookup( const std::string& wire, const Token& t, std::size_t line_no, std::string_view context )
  {
    const auto it = wires_.find( wire );
    if ( it == wires_.end() )
    {
      throw ParseError( line_no, t.column, "undeclared wire " + wire + std::string( context ) );
    }
    return it->second;
  }

  void read_header( const std::vector<Token>& tokens, std::size_t line_no )
  {
    once( seen_circuit_, tokens[0], line_no );
    if ( tokens.size() != 2 )
    {
      throw ParseError( line_no, tokens[0].column, "expected 'circuit <name>'" );
    }
    circuit_.name = identifier( tokens[1], line_no );
  }

  void read_inputs( const std::vector<Token>& tokens, std::size_t line_no )
  {
    once( seen_inputs_, tokens[0], line_no );
    for ( std::size_t i = 1; i < tokens.size(); ++i )
    {
      auto wire = identifier( tokens[i], line_no );
      define( wire, tokens[i], line_no );
      circuit_.primary_inputs.push_back( std::move( wire ) );
    }
  }

  void read_constants( const std::vector<Token>& tokens, std::size_t line_no )
  {
    once( seen_constants_, tokens[0], line_no );
    for ( std::size_t i = 1; i < tokens.size(); ++i )
    {
      const auto text = tokens[i].text;
      const auto eq = text.find( '=' );
      if ( eq == std::string_view::npos )
      {
        throw ParseError( line_no, tokens[i].column, "expected <id>=<0|1>" );
      }
      const auto value = text.substr( eq + 1 );
      if ( value != "0" && value != "1" )
      {
        throw ParseError( line_no, tokens[i].column + eq + 1, "constant value must be 0 or 1" );
      }
      auto wire = identifier( { text.substr( 0, eq ), tokens[i].column }, line_no );
      define( wire, tokens[i], line_no );
      circuit_.constants.push_back( { std::move( wire ), value == "1" } );
    }
  }

  void read_gate( const std::vector<Token>& tokens, std::size_t line_no )
  {
    if ( tokens.size() < 3 )
    {
      throw ParseError( line_no, tokens[0].column, "expected 'gate <id> <GATE> <in>... -> <out>...'" );
    }
    auto id = identifier( tokens[1], line_no );
    if ( !instance_ids_.insert( id ).second )
    {
      throw ParseError( line_no, tokens[1].column, "duplicate instance id " + id );
    }
    const auto gate_name = tokens[2].text;
    if ( !is_builtin_gate( gate_name ) )
    {
      throw ParseError( line_no, tokens[2].column, "unknown gate '" + std::string( gate_name ) + "'" );
    }
    auto gate = builtin_gate_ref( gate_name );

    std::optional<std::size_t> arrow;
    for ( std::size_t i = 3; i < tokens.size(); ++i )
    {
      if ( tokens[i].text == "->" )
      {
        if ( arrow )
        {
          throw ParseError( line_no, tokens[i].column, "more than one '->'" );
        }
        arrow = i;
      }
    }
    if ( !arrow )
    {
      throw ParseError( line_no, tokens[2].column, "missing '->' in gate line" );
    }

    const auto k = gate->arity();
    const auto n_in = *arrow - 3;
    const auto n_out = tokens.size() - *arrow - 1;
    if ( n_in != k )
    {
      throw ParseError( line_no, tokens[2].column, std::string( gate_name ) + " expects " + std::to_string( k ) +
                                                       " inputs, got " + std::to_string( n_in ) );
    }
    if ( n_out != k )
    {
      throw ParseError( line_no, tokens[*arrow].column, std::string( gate_name ) + " expects " + std::to_string( k ) +
                                                            " outputs, got " + std::to_string( n_out ) );
    }

    GateInstance inst{ std::move( id ), gate, {}, {} };
    for ( std::size_t i = 3; i < *arrow; ++i )
    {
      auto wire = identifier( tokens[i], line_no );
      auto& state = lookup( wire, tokens[i], line_no, "" );
      if ( state.consumed )
      {
        throw ParseError( line_no, tokens[i].column, "fan-out at " + wire );
      }
      state.consumed = true;
      state.by_gate = true;
      inst.inputs.push_back( std::move( wire ) );
    }
    for ( std::size_t i = *arrow + 1; i < tokens.size(); ++i )
    {
      auto wire = identifier( tokens[i], line_no );
      define( wire, tokens[i], line_no );
      inst.outputs.push_back( std::move( wire ) );
    }
    circuit_.instances.push_back( std::move( inst ) );
  }

  void read_designation( const std::vector<Token>& tokens, std::size_t line_no, bool& seen, std::vector<std::string>& into )
  {
    once( seen, tokens[0], line_no );
    const std::string context = " in " + std::string( tokens[0].text );
    for ( std::size_t i = 1; i < tokens.size(); ++i )
    {
      auto wire = identifier( tokens[i], line_no );
      auto& state = lookup( wire, tokens[i], line_no, context );
      if ( state.consumed )
      {
        throw ParseError( line_no, tokens[i].column,
                          state.by_gate ? "fan-out at " + wire : "wire " + wire + " designated more than once" );
      }
      state.consumed = true;
      into.push_back( std::move( wire ) );
    }
  }

  ParsedCircuit finish( std::size_t end_line )
  {
    if ( !seen_circuit_ ) throw ParseError( end_line, 1, "missing 'circuit' header" );
    if ( !seen_inputs_ ) throw ParseError( end_line, 1, "missing 'inputs' declaration" );
    if ( !seen_outputs_ ) throw ParseError( end_line, 1, "missing 'outputs' declaration" );

    ParsedCircuit parsed;
    std::vector<std::string> leftover;
    for ( const auto& wire : wire_order_ )
    {
      const auto& state = wires_.at( wire );
      if ( state.consumed ) continue;
      if ( seen_garbage_ )
      {
        throw ParseError( state.defined_line, 1, "wire " + wire + " is neither consumed nor designated" );
      }
      leftover.push_back( wire );
    }
    if ( !leftover.empty() )
    {
      std::string list;
      for ( const auto& w : leftover ) list += " " + w;
      parsed.warnings.push_back( "auto-designated garbage:" + list );
      circuit_.garbage_outputs = leftover;
    }

    if ( const auto report = validate( circuit_ ); !report.ok() )
    {
      throw ParseError( end_line, 1, report.to_string() );
    }
    parsed.circuit = std::move( circuit_ );
    return parsed;
  }

  Circuit circuit_;
  bool seen_circuit_{ false };
  bool seen_inputs_{ false };
  bool seen_constants_{ false };
  bool seen_outputs_{ false };
  bool seen_garbage_{ false };
  std::map<std::string, WireState, std::less<>> wires_;
  std::vector<std::string> wire_order_;
  std::set<std::string> instance_ids_;
};

void write_list( std::ostream& os, std::string_view keyword, const std::vector<std::string>& items )
{
  os << keyword;
  for ( const auto& item : items ) os << ' ' << item;
  os << '\n';
}

} // namespace

ParsedCircuit parse_netlist( std::string_view text )
{
  return NetlistReader{}.read( text );
}

std::string serialize_netlist( const Circuit& c )
{
  const auto cc = compile( c );
  std::ostringstream os;
  os << "circuit " << c.name << '\n';
  write_list( os, "inputs", c.primary_inputs );
  if ( !c.constants.empty() )
  {
    os << "constants";
    for ( const auto& k : c.constants ) os << ' ' << k.wire << '=' << ( k.value ? '1' : '0' );
    os << '\n';
  }
  for ( const auto& op : cc.ops )
  {
    const auto& inst = c.instances[op.instance];
    if ( !is_builtin_gate( inst.gate->name() ) )
    {
      throw Error( ErrorCode::invalid_argument, "gate " + inst.gate->name() + " has no netlist spelling" );
    }
    os << "gate " << inst.id << ' ' << inst.gate->name();
    for ( const auto& w : inst.inputs ) os << ' ' << w;
    os << " ->";
    for ( const auto& w : inst.outputs ) os << ' ' << w;
    os << '\n';
  }
  write_list( os, "outputs", c.primary_outputs );
  if ( !c.garbage_outputs.empty() )
  {
    write_list( os, "garbage", c.garbage_outputs );
  }
  return os.str();
}

} // namespace revft
