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

#include "revft/builders.hpp"
#include "revft/error.hpp"

#include <algorithm>
#include <cctype>

namespace revft
{

namespace
{

/// Hands out canonical wire names: c<k> constants, w<k> internal, g<k>
/// garbage.
class CircuitBuilder
{
public:
  explicit CircuitBuilder( std::string name ) { c_.name = std::move( name ); }

  const std::string& input( std::string name )
  {
    c_.primary_inputs.push_back( std::move( name ) );
    return c_.primary_inputs.back();
  }

  std::string constant( bool value )
  {
    auto wire = "c" + std::to_string( c_.constants.size() );
    c_.constants.push_back( { wire, value } );
    return wire;
  }

  std::string internal() { return "w" + std::to_string( next_internal_++ ); }

  std::string garbage()
  {
    auto wire = "g" + std::to_string( c_.garbage_outputs.size() );
    c_.garbage_outputs.push_back( wire );
    return wire;
  }

  void output( std::string wire ) { c_.primary_outputs.push_back( std::move( wire ) ); }

  void gate( std::string id, std::string_view gate, std::vector<std::string> in, std::vector<std::string> out )
  {
    c_.instances.push_back( { std::move( id ), builtin_gate_ref( gate ), std::move( in ), std::move( out ) } );
  }

  Circuit finish() { return std::move( c_ ); }

private:
  Circuit c_;
  std::size_t next_internal_{ 0 };
};

// One adder stage. The carry enters the first IG so that it crosses both
// gates: IG1(a, cin, 0, 0) = (a, a^cin, a.cin, a.~cin), then
// IG2(a^cin, b, a.cin, a.~cin) = (a^cin, sum, carry, garbage).
void add_full_adder_stage( CircuitBuilder& cb, std::size_t stage, const std::string& a, const std::string& b,
                           const std::string& carry_in, const std::string& sum, const std::string& carry_out )
{
  const auto k0 = cb.constant( false );
  const auto k1 = cb.constant( false );
  const auto x = cb.internal();
  const auto y = cb.internal();
  const auto z = cb.internal();
  cb.gate( "ig" + std::to_string( 2 * stage + 1 ), "IG", { a, carry_in, k0, k1 }, { cb.garbage(), x, y, z } );
  const auto g1 = cb.garbage();
  cb.gate( "ig" + std::to_string( 2 * stage + 2 ), "IG", { x, b, y, z }, { g1, sum, carry_out, cb.garbage() } );
}

} // namespace

Circuit build_full_adder()
{
  CircuitBuilder cb( "full_adder" );
  cb.input( "a" );
  cb.input( "b" );
  cb.input( "cin" );
  add_full_adder_stage( cb, 0, "a", "b", "cin", "s", "cout" );
  cb.output( "s" );
  cb.output( "cout" );
  return cb.finish();
}

Circuit build_ripple_carry_adder( std::size_t bits )
{
  if ( bits < 1 )
  {
    throw Error( ErrorCode::invalid_argument, "ripple-carry adder needs at least one bit" );
  }
  CircuitBuilder cb( "rca" + std::to_string( bits ) );
  for ( std::size_t i = 0; i < bits; ++i ) cb.input( "a" + std::to_string( i ) );
  for ( std::size_t i = 0; i < bits; ++i ) cb.input( "b" + std::to_string( i ) );
  cb.input( "cin" );

  std::string carry = "cin";
  for ( std::size_t i = 0; i < bits; ++i )
  {
    const auto next = i + 1 == bits ? std::string( "cout" ) : "k" + std::to_string( i + 1 );
    add_full_adder_stage( cb, i, "a" + std::to_string( i ), "b" + std::to_string( i ), carry, "s" + std::to_string( i ), next );
    carry = next;
  }
  for ( std::size_t i = 0; i < bits; ++i ) cb.output( "s" + std::to_string( i ) );
  cb.output( "cout" );
  return cb.finish();
}

Circuit build_parity_preserving_toffoli()
{
  CircuitBuilder cb( "toffoli_pp" );
  cb.input( "a" );
  cb.input( "b" );
  cb.input( "c" );
  const auto zero = cb.constant( false );
  const auto ab = cb.internal();
  const auto nab = cb.internal();
  // FRG(a, 0, b) = (a, ab, ~a.b); F2G(ab, c, ~a.b) = (ab, ab^c, b)
  cb.gate( "frg1", "FRG", { "a", zero, "b" }, { "p", ab, nab } );
  cb.gate( "f2g1", "F2G", { ab, "c", nab }, { cb.garbage(), "r", "q" } );
  cb.output( "p" );
  cb.output( "q" );
  cb.output( "r" );
  return cb.finish();
}

const std::vector<std::string>& ig_function_names()
{
  static const std::vector<std::string> names{ "NOT", "COPY", "AND", "NAND", "XOR", "OR" };
  return names;
}

Circuit ig_function_library( std::string_view name )
{
  std::string lower( name );
  std::transform( lower.begin(), lower.end(), lower.begin(), []( unsigned char ch ) { return std::tolower( ch ); } );
  CircuitBuilder cb( "ig_" + lower );

  if ( name == "XOR" || name == "AND" || name == "NAND" )
  {
    cb.input( "a" );
    cb.input( "b" );
    const auto k0 = cb.constant( name == "NAND" );
    const auto k1 = cb.constant( false );
    if ( name == "XOR" )
    {
      const auto g0 = cb.garbage();
      cb.gate( "ig1", "IG", { "a", "b", k0, k1 }, { g0, "y", cb.garbage(), cb.garbage() } );
    }
    else
    {
      const auto g0 = cb.garbage();
      const auto g1 = cb.garbage();
      cb.gate( "ig1", "IG", { "a", "b", k0, k1 }, { g0, g1, "y", cb.garbage() } );
    }
    cb.output( "y" );
  }
  else if ( name == "NOT" )
  {
    cb.input( "a" );
    const auto k0 = cb.constant( false );
    const auto k1 = cb.constant( false );
    const auto k2 = cb.constant( true );
    const auto g0 = cb.garbage();
    const auto g1 = cb.garbage();
    const auto g2 = cb.garbage();
    cb.gate( "ig1", "IG", { "a", k0, k1, k2 }, { g0, g1, g2, "y" } );
    cb.output( "y" );
  }
  else if ( name == "COPY" )
  {
    cb.input( "a" );
    const auto k0 = cb.constant( false );
    const auto k1 = cb.constant( false );
    const auto k2 = cb.constant( false );
    const auto g0 = cb.garbage();
    cb.gate( "ig1", "IG", { "a", k0, k1, k2 }, { "y0", "y1", g0, cb.garbage() } );
    cb.output( "y0" );
    cb.output( "y1" );
  }
  else if ( name == "OR" )
  {
    // copy b, then S = a.~b ^ b = a | b
    cb.input( "a" );
    cb.input( "b" );
    const auto k0 = cb.constant( false );
    const auto k1 = cb.constant( false );
    const auto k2 = cb.constant( false );
    const auto b0 = cb.internal();
    const auto b1 = cb.internal();
    const auto g0 = cb.garbage();
    cb.gate( "ig1", "IG", { "b", k0, k1, k2 }, { b0, b1, g0, cb.garbage() } );
    const auto k3 = cb.constant( false );
    const auto g2 = cb.garbage();
    const auto g3 = cb.garbage();
    cb.gate( "ig2", "IG", { "a", b0, k3, b1 }, { g2, g3, cb.garbage(), "y" } );
    cb.output( "y" );
  }
  else
  {
    throw Error( ErrorCode::unknown_name, "no such IG function '" + std::string( name ) + "'" );
  }
  return cb.finish();
}

Circuit wrap_gate( std::string_view gate_name )
{
  const auto gate = builtin_gate_ref( gate_name );
  std::string lower( gate_name );
  std::transform( lower.begin(), lower.end(), lower.begin(), []( unsigned char ch ) { return std::tolower( ch ); } );

  CircuitBuilder cb( lower );
  std::vector<std::string> in, out;
  for ( auto port : input_port_names( gate->arity() ) )
  {
    std::transform( port.begin(), port.end(), port.begin(), []( unsigned char ch ) { return std::tolower( ch ); } );
    in.push_back( cb.input( port ) );
  }
  for ( auto port : output_port_names( gate->arity() ) )
  {
    std::transform( port.begin(), port.end(), port.begin(), []( unsigned char ch ) { return std::tolower( ch ); } );
    out.push_back( port );
  }
  cb.gate( lower + "1", gate_name, in, out );
  for ( const auto& o : out ) cb.output( o );
  return cb.finish();
}

} // namespace revft
