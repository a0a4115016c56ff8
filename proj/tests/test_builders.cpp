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
#include <revft/simulator.hpp>

using namespace revft;

TEST_CASE( "full adder structure" )
{
  const auto fa = build_full_adder();
  CHECK( validate( fa ).ok() );
  CHECK( fa.primary_inputs == std::vector<std::string>{ "a", "b", "cin" } );
  CHECK( fa.primary_outputs == std::vector<std::string>{ "s", "cout" } );
  CHECK( fa.garbage_outputs.size() == 3 );
  CHECK( fa.constants.size() == 2 );
  REQUIRE( fa.instances.size() == 2 );
  CHECK( fa.instances[0].id == "ig1" );
  CHECK( fa.instances[0].gate->name() == "IG" );
  CHECK( fa.instances[1].gate->name() == "IG" );
  for ( const auto& k : fa.constants ) CHECK_FALSE( k.value );
}

TEST_CASE( "full adder function" )
{
  const auto fa = build_full_adder();
  for ( std::uint32_t x = 0; x < 8; ++x )
  {
    const auto in = BitVector::from_index( x, 3 );
    const bool a = in[0], b = in[1], cin = in[2];
    const auto t = evaluate( fa, in );
    CAPTURE( x );
    CHECK( t.outputs[0] == ( a ^ b ^ cin ) );
    CHECK( t.outputs[1] == ( ( ( a ^ b ) & cin ) ^ ( a & b ) ) );
  }
  // single-one rows all yield sum without carry
  for ( const char* v : { "001", "010", "100" } )
  {
    CHECK( evaluate( fa, BitVector::from_string( v ) ).outputs == BitVector{ 1, 0 } );
  }
}

TEST_CASE( "ripple-carry adder" )
{
  CHECK_THROWS_AS( build_ripple_carry_adder( 0 ), Error );
  for ( std::size_t n = 1; n <= 4; ++n )
  {
    const auto rca = build_ripple_carry_adder( n );
    CHECK( validate( rca ).ok() );
    CHECK( rca.instances.size() == 2 * n );
    CHECK( rca.primary_inputs.size() == 2 * n + 1 );
    CHECK( rca.primary_outputs.size() == n + 1 );
    CHECK( rca.primary_inputs.back() == "cin" );
    CHECK( rca.primary_outputs.back() == "cout" );
    const std::uint64_t mask = ( std::uint64_t{ 1 } << n ) - 1;
    for ( const auto& t : exhaustive_table( rca ) )
    {
      std::uint64_t a = 0, b = 0, s = 0;
      for ( std::size_t i = 0; i < n; ++i )
      {
        a |= std::uint64_t( t.inputs[i] ) << i;
        b |= std::uint64_t( t.inputs[n + i] ) << i;
        s |= std::uint64_t( t.outputs[i] ) << i;
      }
      s |= std::uint64_t( t.outputs[n] ) << n;
      CHECK( s == ( a & mask ) + ( b & mask ) + t.inputs[2 * n] );
    }
  }
}

TEST_CASE( "parity-preserving Toffoli" )
{
  const auto c = build_parity_preserving_toffoli();
  CHECK( validate( c ).ok() );
  CHECK( c.instances.size() == 2 );
  CHECK( c.garbage_outputs.size() == 1 );
  CHECK( c.constants.size() == 1 );
  const auto& tg = builtin_gate( "TG" );
  for ( std::uint32_t x = 0; x < 8; ++x )
  {
    CHECK( evaluate( c, BitVector::from_index( x, 3 ) ).outputs.to_index() == tg.apply( x ) );
  }
}

TEST_CASE( "IG function library" )
{
  CHECK( ig_function_names() == std::vector<std::string>{ "NOT", "COPY", "AND", "NAND", "XOR", "OR" } );
  auto expect = []( std::string_view f, const BitVector& x ) -> BitVector {
    if ( f == "NOT" ) return { !x[0] };
    if ( f == "COPY" ) return { x[0], x[0] };
    if ( f == "AND" ) return { x[0] && x[1] };
    if ( f == "NAND" ) return { !( x[0] && x[1] ) };
    if ( f == "XOR" ) return { x[0] != x[1] };
    return { x[0] || x[1] };
  };
  for ( const auto& name : ig_function_names() )
  {
    CAPTURE( name );
    const auto c = ig_function_library( name );
    CHECK( validate( c ).ok() );
    for ( const auto& inst : c.instances ) CHECK( inst.gate->name() == "IG" );
    for ( const auto& t : exhaustive_table( c ) ) CHECK( t.outputs == expect( name, t.inputs ) );
  }
  CHECK( ig_function_library( "OR" ).instances.size() == 2 );
  CHECK_THROWS_AS( ig_function_library( "MUX" ), Error );
}

TEST_CASE( "wrapped gates" )
{
  for ( const auto& name : builtin_gate_names() )
  {
    const auto c = wrap_gate( name );
    const auto& g = builtin_gate( name );
    CHECK( c.instances.size() == 1 );
    for ( std::uint32_t x = 0; x < ( 1u << g.arity() ); ++x )
    {
      CHECK( evaluate( c, BitVector::from_index( x, g.arity() ) ).outputs.to_index() == g.apply( x ) );
    }
  }
  CHECK( wrap_gate( "PG" ).instances[0].id == "pg1" );
  CHECK_THROWS_AS( wrap_gate( "XX" ), Error );
}
