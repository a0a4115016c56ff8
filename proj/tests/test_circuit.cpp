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
#include <revft/circuit.hpp>
#include <revft/error.hpp>

#include "support/random_circuit.hpp"

using namespace revft;

namespace
{

bool mentions( const ValidationReport& r, std::string_view text )
{
  return std::any_of( r.violations.begin(), r.violations.end(),
                      [&]( const std::string& v ) { return v.find( text ) != std::string::npos; } );
}

Circuit two_feynman()
{
  Circuit c;
  c.name = "t";
  c.primary_inputs = { "a", "b" };
  c.instances.push_back( { "f1", builtin_gate_ref( "FG" ), { "a", "b" }, { "x", "y" } } );
  c.instances.push_back( { "f2", builtin_gate_ref( "FG" ), { "x", "y" }, { "p", "q" } } );
  c.primary_outputs = { "p", "q" };
  return c;
}

} // namespace

TEST_CASE( "builder circuits validate" )
{
  CHECK( validate( build_full_adder() ).ok() );
  CHECK( validate( build_parity_preserving_toffoli() ).ok() );
  CHECK( validate( build_ripple_carry_adder( 3 ) ).ok() );
  CHECK( validate( two_feynman() ).ok() );
}

TEST_CASE( "fan-out is reported" )
{
  auto c = two_feynman();
  c.instances[1].inputs = { "x", "x" };
  const auto r = validate( c );
  CHECK_FALSE( r.ok() );
  CHECK( mentions( r, "fan-out at wire x" ) );
  CHECK( mentions( r, "dangling wire y" ) );
}

TEST_CASE( "cycles are reported" )
{
  Circuit c;
  c.name = "loop";
  c.primary_inputs = { "a" };
  c.instances.push_back( { "f1", builtin_gate_ref( "FG" ), { "a", "z" }, { "x", "y" } } );
  c.instances.push_back( { "f2", builtin_gate_ref( "FG" ), { "x", "y" }, { "p", "z" } } );
  c.primary_outputs = { "p" };
  const auto r = validate( c );
  CHECK( mentions( r, "cycle detected" ) );
  CHECK_THROWS_WITH_AS( topological_order( c ), "cycle detected", Error );
}

TEST_CASE( "other violations" )
{
  SUBCASE( "unresolved gate" )
  {
    auto c = two_feynman();
    c.instances[0].gate = nullptr;
    CHECK( mentions( validate( c ), "unresolved gate in instance f1" ) );
  }
  SUBCASE( "arity" )
  {
    auto c = two_feynman();
    c.instances[0].gate = builtin_gate_ref( "TG" );
    CHECK( mentions( validate( c ), "TG expects 3 inputs, got 2" ) );
  }
  SUBCASE( "undriven and redefined" )
  {
    auto c = two_feynman();
    c.instances[1].inputs = { "x", "nope" };
    auto r = validate( c );
    CHECK( mentions( r, "undriven wire nope" ) );
    c = two_feynman();
    c.instances[1].outputs = { "p", "a" };
    CHECK( mentions( validate( c ), "wire a defined more than once" ) );
  }
  SUBCASE( "designation" )
  {
    auto c = two_feynman();
    c.garbage_outputs = { "q" };
    CHECK( mentions( validate( c ), "designated both primary and garbage" ) );
    c = two_feynman();
    c.primary_outputs = { "p", "q", "q" };
    CHECK( mentions( validate( c ), "designated more than once" ) );
  }
  SUBCASE( "line conservation" )
  {
    auto c = two_feynman();
    c.constants.push_back( { "k", false } );
    const auto r = validate( c );
    CHECK( mentions( r, "line count mismatch" ) );
    CHECK( mentions( r, "dangling wire k" ) );
  }
}

TEST_CASE( "validate is idempotent" )
{
  auto c = two_feynman();
  c.instances[1].inputs = { "x", "x" };
  const auto copy = c;
  CHECK( validate( c ).violations == validate( c ).violations );
  CHECK( c == copy );
}

TEST_CASE( "topological order" )
{
  CHECK( topological_order( build_full_adder() ) == std::vector<std::string>{ "ig1", "ig2" } );
  CHECK( topological_order( ig_function_library( "AND" ) ) == std::vector<std::string>{ "ig1" } );

  const auto rca = build_ripple_carry_adder( 4 );
  const auto order = topological_order( rca );
  REQUIRE( order.size() == 8 );
  for ( std::size_t i = 0; i < 8; ++i ) CHECK( order[i] == "ig" + std::to_string( i + 1 ) );

  // ties broken by natural order, independent of declaration order
  Circuit par;
  par.name = "par";
  par.primary_inputs = { "a", "b", "c", "d" };
  par.instances.push_back( { "f10", builtin_gate_ref( "FG" ), { "a", "b" }, { "p", "q" } } );
  par.instances.push_back( { "f9", builtin_gate_ref( "FG" ), { "c", "d" }, { "r", "s" } } );
  par.primary_outputs = { "p", "q", "r", "s" };
  CHECK( topological_order( par ) == std::vector<std::string>{ "f9", "f10" } );
}

TEST_CASE( "natural ordering" )
{
  CHECK( natural_less( "ig2", "ig10" ) );
  CHECK_FALSE( natural_less( "ig10", "ig2" ) );
  CHECK( natural_less( "a", "b" ) );
  CHECK( natural_less( "s9_x", "s10_a" ) );
  CHECK_FALSE( natural_less( "x", "x" ) );
}

TEST_CASE( "composite bijection" )
{
  const auto single = wrap_gate( "IG" );
  CHECK( circuit_as_bijection( single ).table() == builtin_gate( "IG" ).table() );

  const auto fa = circuit_as_bijection( build_full_adder() );
  CHECK( fa.arity() == 5 );
  CHECK( is_reversible( fa ) );

  const auto tg = circuit_as_bijection( build_parity_preserving_toffoli() );
  CHECK( tg.arity() == 4 );
  CHECK( is_parity_preserving( tg ) );
  CHECK( fa.cost() == CostVector{ 8, 6, 2 } );
}

TEST_CASE( "random legal circuits: reversible, parity preserving, invertible" )
{
  std::mt19937 rng( 20260101 );
  for ( int i = 0; i < 200; ++i )
  {
    const auto c = test::random_circuit( rng );
    CAPTURE( i );
    REQUIRE( validate( c ).ok() );
    const auto g = circuit_as_bijection( c );
    CHECK( is_reversible( g ) );
    CHECK( is_parity_preserving( g ) );

    const auto inv = circuit_as_bijection( invert_circuit( c ) );
    for ( std::uint32_t x = 0; x < g.table().size(); ++x )
    {
      REQUIRE( inv.apply( g.apply( x ) ) == x );
    }
  }
}

TEST_CASE( "non-parity gates can break parity" )
{
  CHECK_FALSE( is_parity_preserving( circuit_as_bijection( wrap_gate( "TG" ) ) ) );
  CHECK( is_reversible( circuit_as_bijection( wrap_gate( "PG" ) ) ) );
}

TEST_CASE( "compile rejects invalid circuits" )
{
  auto c = two_feynman();
  c.instances[1].inputs = { "x", "x" };
  CHECK_THROWS_AS( compile( c ), Error );
  const auto cc = compile( build_full_adder() );
  CHECK( cc.wire_names.size() == 13 );
  CHECK( cc.wire_names.front() == "a" );
  CHECK( cc.input_line_count() == 5 );
}
