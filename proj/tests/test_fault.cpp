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
#include <revft/fault.hpp>

#include "support/random_circuit.hpp"

using namespace revft;

namespace
{
const std::set<FaultModel> all_models{ FaultModel::bit_flip, FaultModel::stuck_at_0, FaultModel::stuck_at_1 };
}

TEST_CASE( "model names" )
{
  CHECK( to_string( FaultModel::bit_flip ) == "bitflip" );
  CHECK( fault_model_from_string( "sa0" ) == FaultModel::stuck_at_0 );
  CHECK( fault_model_from_string( "sa1" ) == FaultModel::stuck_at_1 );
  CHECK_FALSE( fault_model_from_string( "flip" ).has_value() );
}

TEST_CASE( "fault site enumeration" )
{
  const auto fa = build_full_adder();
  const auto sites = enumerate_fault_sites( fa, { FaultModel::bit_flip } );
  CHECK( sites.size() == 13 );
  CHECK( sites.front().wire == "a" );
  CHECK( enumerate_fault_sites( fa, all_models ).size() == 39 );
  CHECK( enumerate_fault_sites( fa, {} ).empty() );

  // per stage: 2 data inputs, 2 constants, 8 gate outputs; plus the carry-in
  for ( std::size_t n = 1; n <= 4; ++n )
  {
    CHECK( enumerate_fault_sites( build_ripple_carry_adder( n ), { FaultModel::stuck_at_1 } ).size() == 12 * n + 1 );
  }
}

TEST_CASE( "single injection" )
{
  const auto fa = build_full_adder();

  // the observer compares against the applied vector, so an input-line flip is caught
  auto run = inject_and_run( fa, FaultSite{ "a", FaultModel::bit_flip }, BitVector{ 0, 0, 0 } );
  CHECK( run.verdict.activated );
  CHECK( run.verdict.parity_detected );
  CHECK( run.faulty.inputs == BitVector{ 0, 0, 0 } );
  CHECK( *run.faulty.value_of( "a" ) == true );

  run = inject_and_run( fa, FaultSite{ "w0", FaultModel::bit_flip }, BitVector{ 0, 0, 0 } );
  CHECK( run.verdict.activated );
  CHECK( run.verdict.parity_detected );
  CHECK( run.verdict.output_corrupted );

  run = inject_and_run( fa, FaultSite{ "w0", FaultModel::stuck_at_0 }, BitVector{ 0, 0, 0 } );
  CHECK_FALSE( run.verdict.activated );
  CHECK_FALSE( run.verdict.parity_detected );
  CHECK_FALSE( run.verdict.output_corrupted );

  run = inject_and_run( fa, FaultSite{ "s", FaultModel::stuck_at_1 }, BitVector{ 0, 0, 0 } );
  CHECK( run.verdict.activated );
  CHECK( run.verdict.parity_detected );
  CHECK( run.verdict.primary_parity_detected );
  CHECK( run.faulty.outputs == BitVector{ 1, 0 } );

  CHECK_THROWS_AS( inject_and_run( fa, FaultSite{ "nope", FaultModel::bit_flip }, BitVector{ 0, 0, 0 } ), Error );
}

TEST_CASE( "full adder campaign" )
{
  const auto r = campaign( build_full_adder(), all_models, VectorSelection::exhaustive() );
  const auto& s = r.summary;
  CHECK( s.runs == 312 );
  CHECK( s.bit_flip_total == 104 );
  CHECK( s.bit_flip_detected == 104 );
  CHECK( s.bit_flip_rate() == 1.0 );
  CHECK( s.stuck_at_total == 208 );
  CHECK( s.stuck_at_activated == 104 );
  CHECK( s.stuck_at_detected == 104 );
  CHECK( s.undetected.empty() );
  CHECK_FALSE( s.seed.has_value() );
  CHECK( r.reports.size() == 39 );
}

TEST_CASE( "stuck-at verdict equals bit-flip verdict when activated" )
{
  std::mt19937 rng( 515 );
  for ( int i = 0; i < 40; ++i )
  {
    const auto c = test::random_circuit( rng );
    const auto wires = enumerate_fault_sites( c, { FaultModel::bit_flip } );
    for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << c.primary_inputs.size() ); ++x )
    {
      const auto in = BitVector::from_index( x, c.primary_inputs.size() );
      for ( const auto& w : wires )
      {
        const auto flip = inject_and_run( c, w, in );
        for ( auto m : { FaultModel::stuck_at_0, FaultModel::stuck_at_1 } )
        {
          const auto sa = inject_and_run( c, FaultSite{ w.wire, m }, in );
          if ( sa.verdict.activated )
          {
            CHECK( sa.verdict.parity_detected == flip.verdict.parity_detected );
            CHECK( sa.faulty.output_lines == flip.faulty.output_lines );
          }
          else
          {
            CHECK_FALSE( sa.verdict.output_corrupted );
          }
        }
      }
    }
  }
}

TEST_CASE( "control circuit is not fully covered" )
{
  // independent oracle: 12 of the 48 PG bit-flip runs keep parity
  const auto r = campaign( wrap_gate( "PG" ), { FaultModel::bit_flip }, VectorSelection::exhaustive() );
  CHECK( r.summary.bit_flip_total == 48 );
  CHECK( r.summary.bit_flip_detected == 36 );
  CHECK( r.summary.bit_flip_rate() < 1.0 );
  CHECK( r.summary.undetected.size() == 12 );
}

TEST_CASE( "primary-only observer" )
{
  const auto fa = build_full_adder();
  const auto all = campaign( fa, { FaultModel::bit_flip }, VectorSelection::exhaustive(), Observer::all_lines );
  const auto prim = campaign( fa, { FaultModel::bit_flip }, VectorSelection::exhaustive(), Observer::primary_only );
  CHECK( prim.summary.observer == Observer::primary_only );
  CHECK( prim.summary.bit_flip_detected < all.summary.bit_flip_detected );
  // garbage lines are invisible to this observer
  const auto run = inject_and_run( fa, FaultSite{ "g0", FaultModel::bit_flip }, BitVector{ 0, 1, 1 } );
  CHECK( run.verdict.parity_detected );
  CHECK_FALSE( run.verdict.primary_parity_detected );
}

TEST_CASE( "sampled campaigns are deterministic" )
{
  const auto rca = build_ripple_carry_adder( 4 );
  const auto a = campaign( rca, { FaultModel::bit_flip }, VectorSelection::sample( 20, 11 ) );
  const auto b = campaign( rca, { FaultModel::bit_flip }, VectorSelection::sample( 20, 11 ) );
  const auto c = campaign( rca, { FaultModel::bit_flip }, VectorSelection::sample( 20, 12 ) );
  CHECK( campaign_csv( a ) == campaign_csv( b ) );
  CHECK( campaign_csv( a ) != campaign_csv( c ) );
  CHECK( a.summary.seed == 11u );
  CHECK( a.reports.front().verdicts.size() == 20 );
  for ( std::size_t i = 1; i < a.reports.front().verdicts.size(); ++i )
  {
    CHECK( a.reports.front().verdicts[i - 1].vector.to_index() < a.reports.front().verdicts[i].vector.to_index() );
  }
  const auto over = campaign( build_full_adder(), { FaultModel::bit_flip }, VectorSelection::sample( 100, 1 ) );
  CHECK( over.summary.bit_flip_total == 104 );
}

TEST_CASE( "empty model set" )
{
  const auto r = campaign( build_full_adder(), {}, VectorSelection::exhaustive() );
  CHECK( r.summary.runs == 0 );
  CHECK( r.reports.empty() );
  CHECK( r.summary.bit_flip_rate() == 1.0 );
}

TEST_CASE( "reports" )
{
  const auto r = campaign( build_full_adder(), { FaultModel::bit_flip }, VectorSelection::exhaustive() );
  const auto csv = campaign_csv( r );
  CHECK( csv.rfind( "wire,model,vector,activated,parity_detected,output_corrupted\n", 0 ) == 0 );
  CHECK( csv.find( "a,bitflip,000,1,1,1\n" ) != std::string::npos );
  CHECK( csv.find( "# bitflip_detected,104/104\n" ) != std::string::npos );
  CHECK( campaign_text( r ).find( "bit-flip detection 100.0% (104/104)" ) != std::string::npos );
}

TEST_CASE( "double faults can cancel" )
{
  const auto d = find_undetected_double_fault( build_full_adder() );
  REQUIRE( d.has_value() );
  const FaultSite both[] = { d->first, d->second };
  const auto run = inject_and_run( build_full_adder(), both, d->vector );
  CHECK( run.verdict.activated );
  CHECK_FALSE( run.verdict.parity_detected );
}
