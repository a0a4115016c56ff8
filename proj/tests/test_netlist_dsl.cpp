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

#include <doctest.h>

#include <revft/builders.hpp>
#include <revft/error.hpp>
#include <revft/netlist_dsl.hpp>

#include <fstream>
#include <random>
#include <sstream>

using namespace revft;

namespace
{

std::string read_golden( const std::string& name )
{
  std::ifstream in( std::string( REVFT_GOLDEN_DIR ) + "/" + name );
  REQUIRE( in );
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ParseError parse_failure( std::string_view text )
{
  try
  {
    parse_netlist( text );
  }
  catch ( const ParseError& e )
  {
    return e;
  }
  FAIL( "expected a parse error" );
  return ParseError( 0, 0, "" );
}

std::vector<Circuit> builder_circuits()
{
  std::vector<Circuit> all{ build_full_adder(), build_parity_preserving_toffoli() };
  for ( std::size_t n = 1; n <= 4; ++n ) all.push_back( build_ripple_carry_adder( n ) );
  for ( const auto& f : ig_function_names() ) all.push_back( ig_function_library( f ) );
  return all;
}

} // namespace

TEST_CASE( "round trip over every builder" )
{
  for ( const auto& c : builder_circuits() )
  {
    CAPTURE( c.name );
    const auto text = serialize_netlist( c );
    const auto parsed = parse_netlist( text );
    CHECK( parsed.warnings.empty() );
    CHECK( parsed.circuit == c );
    CHECK( serialize_netlist( parsed.circuit ) == text );
    CHECK( serialize_netlist( c ) == text );
  }
}

TEST_CASE( "golden files" )
{
  CHECK( serialize_netlist( build_full_adder() ) == read_golden( "full_adder.rnl" ) );
  CHECK( serialize_netlist( build_parity_preserving_toffoli() ) == read_golden( "toffoli_pp.rnl" ) );
  CHECK( serialize_netlist( ig_function_library( "OR" ) ) == read_golden( "ig_or.rnl" ) );
}

TEST_CASE( "gate line counts" )
{
  auto count_gates = []( const std::string& text ) {
    std::size_t n = 0;
    for ( std::size_t pos = 0; ( pos = text.find( "\ngate ", pos ) ) != std::string::npos; ++pos ) ++n;
    return n;
  };
  CHECK( count_gates( serialize_netlist( wrap_gate( "IG" ) ) ) == 1 );
  CHECK( count_gates( serialize_netlist( build_ripple_carry_adder( 4 ) ) ) == 8 );
}

TEST_CASE( "serializer emits topological order" )
{
  Circuit c;
  c.name = "swapped";
  c.primary_inputs = { "a", "b" };
  c.instances.push_back( { "second", builtin_gate_ref( "FG" ), { "x", "y" }, { "p", "q" } } );
  c.instances.push_back( { "first", builtin_gate_ref( "FG" ), { "a", "b" }, { "x", "y" } } );
  c.primary_outputs = { "p", "q" };
  const auto text = serialize_netlist( c );
  CHECK( text.find( "gate first" ) < text.find( "gate second" ) );
  const auto again = parse_netlist( text ).circuit;
  CHECK( serialize_netlist( again ) == text );
}

TEST_CASE( "comments, blank lines and CR are accepted" )
{
  const auto parsed = parse_netlist( "# full adder\r\n"
                                     "circuit fa   # name\r\n"
                                     "\r\n"
                                     "inputs a b cin\r\n"
                                     "constants c0=0 c1=0\r\n"
                                     "gate ig1 IG a cin c0 c1 -> g0 w0 w1 w2\r\n"
                                     "gate ig2 IG w0 b w1 w2 -> g1 s cout g2\r\n"
                                     "outputs s cout\r\n"
                                     "garbage g0 g1 g2" );
  CHECK( parsed.circuit.instances.size() == 2 );
  CHECK( parsed.circuit.garbage_outputs.size() == 3 );
}

TEST_CASE( "missing garbage declaration auto-designates with a warning" )
{
  const auto parsed = parse_netlist( "circuit t\ninputs a b\ngate f FG a b -> p q\noutputs q\n" );
  CHECK( parsed.circuit.garbage_outputs == std::vector<std::string>{ "p" } );
  REQUIRE( parsed.warnings.size() == 1 );
  CHECK( parsed.warnings[0].find( "auto-designated garbage: p" ) != std::string::npos );
}

TEST_CASE( "parse errors carry line numbers" )
{
  const std::string head = "circuit t\ninputs a b c0 c1\n";

  auto e = parse_failure( head + "gate g1 IG a b c0 c1 -> w1 w2 w3\n" );
  CHECK( e.line() == 3 );
  CHECK( e.detail() == "IG expects 4 outputs, got 3" );

  e = parse_failure( head + "gate g1 IG a b c0 -> w1 w2 w3 w4\n" );
  CHECK( e.detail() == "IG expects 4 inputs, got 3" );

  e = parse_failure( "circuit t\ninputs a b c\ngate f1 FG a b -> w1 w2\ngate f2 FG w2 c -> x y\ngate f3 FG w2 w1 -> u v\n" );
  CHECK( e.line() == 5 );
  CHECK( e.detail() == "fan-out at w2" );

  e = parse_failure( head + "gate g1 XYZ a b -> p q\n" );
  CHECK( e.detail() == "unknown gate 'XYZ'" );
  CHECK( e.column() == 9 );

  e = parse_failure( head + "gate g1 FG a zz -> p q\n" );
  CHECK( e.detail() == "undeclared wire zz" );

  e = parse_failure( head + "gate g1 FG a b -> a q\n" );
  CHECK( e.detail() == "wire a redefined" );

  e = parse_failure( head + "outputs a b c0 nope\n" );
  CHECK( e.detail() == "undeclared wire nope in outputs" );

  e = parse_failure( "circuit t\ninputs a\noutputs a\noutputs a\n" );
  CHECK( e.line() == 4 );

  e = parse_failure( "inputs a\n" );
  CHECK( e.detail() == "expected 'circuit' header" );

  e = parse_failure( "circuit t\ninputs a\n" );
  CHECK( e.detail() == "missing 'outputs' declaration" );

  e = parse_failure( "circuit t\ninputs a 9x\n" );
  CHECK( e.detail() == "invalid identifier '9x'" );
  CHECK( e.column() == 10 );

  e = parse_failure( "circuit t\ninputs a\nconstants k=2\n" );
  CHECK( e.detail() == "constant value must be 0 or 1" );

  e = parse_failure( "circuit t\ninputs a\xff\n" );
  CHECK( e.detail() == "unexpected character" );
  CHECK( e.column() == 9 );

  e = parse_failure( "circuit t\ninputs a b\ngate f FG a b -> p q\noutputs q\ngarbage\n" );
  CHECK( e.line() == 3 );
  CHECK( e.detail() == "wire p is neither consumed nor designated" );

  e = parse_failure( "circuit t\ninputs a b\nwire x\n" );
  CHECK( e.detail() == "unknown keyword 'wire'" );
}

TEST_CASE( "fuzz: arbitrary bytes parse or diagnose" )
{
  std::mt19937 rng( 7 );
  const std::string seed_text = serialize_netlist( build_full_adder() );
  std::uniform_int_distribution<int> byte( 0, 255 );
  for ( int round = 0; round < 3000; ++round )
  {
    std::string text;
    if ( round % 2 == 0 )
    {
      text.resize( std::uniform_int_distribution<std::size_t>( 0, 200 )( rng ) );
      for ( auto& ch : text ) ch = static_cast<char>( byte( rng ) );
    }
    else
    {
      // mutate a valid document
      text = seed_text;
      const auto edits = std::uniform_int_distribution<int>( 1, 4 )( rng );
      for ( int e = 0; e < edits; ++e )
      {
        const auto pos = std::uniform_int_distribution<std::size_t>( 0, text.size() - 1 )( rng );
        switch ( byte( rng ) % 3 )
        {
        case 0:
          text[pos] = static_cast<char>( byte( rng ) );
          break;
        case 1:
          text.erase( pos, 1 );
          break;
        default:
          text.insert( pos, 1, " \n#-=ab0"[byte( rng ) % 8] );
        }
      }
    }
    try
    {
      const auto parsed = parse_netlist( text );
      CHECK( validate( parsed.circuit ).ok() );
    }
    catch ( const ParseError& e )
    {
      CHECK( e.line() >= 1 );
    }
  }
}

TEST_CASE( "serializer refuses invalid circuits" )
{
  Circuit c;
  c.name = "bad";
  c.primary_inputs = { "a", "b" };
  c.instances.push_back( { "f", builtin_gate_ref( "FG" ), { "a", "a" }, { "p", "q" } } );
  c.primary_outputs = { "p", "q" };
  CHECK_THROWS_AS( serialize_netlist( c ), Error );
}
