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

#include "revft/revft.h"

#include "revft/builders.hpp"
#include "revft/error.hpp"
#include "revft/fault.hpp"
#include "revft/metrics.hpp"
#include "revft/netlist_dsl.hpp"
#include "revft/simulator.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

struct revft_circuit
{
  revft::Circuit circuit;
};

struct revft_truth_spec
{
  revft::TruthSpec spec;
};

namespace
{

thread_local std::string last_error;
thread_local std::size_t last_error_line = 0;

revft_status status_of( revft::ErrorCode code )
{
  using revft::ErrorCode;
  switch ( code )
  {
  case ErrorCode::invalid_argument:
    return REVFT_ERR_INVALID_ARGUMENT;
  case ErrorCode::unknown_name:
    return REVFT_ERR_UNKNOWN_NAME;
  case ErrorCode::not_reversible:
    return REVFT_ERR_NOT_REVERSIBLE;
  case ErrorCode::invalid_circuit:
    return REVFT_ERR_INVALID_CIRCUIT;
  case ErrorCode::parse_error:
    return REVFT_ERR_PARSE;
  case ErrorCode::too_large:
    return REVFT_ERR_TOO_LARGE;
  }
  return REVFT_ERR_INTERNAL;
}

revft_status fail( revft_status status, std::string message, std::size_t line = 0 )
{
  last_error = std::move( message );
  last_error_line = line;
  return status;
}

template<class Fn>
revft_status guarded( Fn&& fn ) noexcept
{
  try
  {
    last_error.clear();
    last_error_line = 0;
    fn();
    return REVFT_OK;
  }
  catch ( const revft::ParseError& e )
  {
    return fail( REVFT_ERR_PARSE, e.what(), e.line() );
  }
  catch ( const revft::Error& e )
  {
    return fail( status_of( e.code() ), e.what() );
  }
  catch ( const std::bad_alloc& )
  {
    return fail( REVFT_ERR_INTERNAL, "out of memory" );
  }
  catch ( const std::exception& e )
  {
    return fail( REVFT_ERR_INTERNAL, e.what() );
  }
  catch ( ... )
  {
    return fail( REVFT_ERR_INTERNAL, "unknown error" );
  }
}

char* duplicate( const std::string& s )
{
  auto* out = static_cast<char*>( std::malloc( s.size() + 1 ) );
  if ( !out ) throw std::bad_alloc();
  std::memcpy( out, s.c_str(), s.size() + 1 );
  return out;
}

void require( bool condition, const char* what )
{
  if ( !condition ) throw revft::Error( revft::ErrorCode::invalid_argument, what );
}

template<class Build>
revft_status build_into( revft_circuit** out, Build&& build )
{
  return guarded( [&] {
    require( out != nullptr, "null output handle" );
    *out = new revft_circuit{ build() };
  } );
}

std::string describe_trace( const revft::Circuit& c, const revft::Trace& t )
{
  std::ostringstream os;
  auto named = [&os]( const char* label, const std::vector<std::string>& names, const revft::BitVector& bits ) {
    os << label;
    for ( std::size_t i = 0; i < names.size(); ++i ) os << ' ' << names[i] << '=' << bits[i];
    os << '\n';
  };
  named( "inputs", c.primary_inputs, t.inputs );
  os << "constants";
  for ( const auto& k : c.constants ) os << ' ' << k.wire << '=' << k.value;
  os << '\n';
  named( "outputs", c.primary_outputs, t.outputs );
  named( "garbage", c.garbage_outputs, t.garbage );
  os << "wires";
  for ( const auto& wv : t.assignment ) os << ' ' << wv.wire << '=' << wv.value;
  os << '\n';
  os << "parity in=" << t.input_lines.parity() << " out=" << t.output_lines.parity() << '\n';
  return os.str();
}

} // namespace

extern "C" {

const char* revft_version( void )
{
  return "0.1.0";
}

const char* revft_last_error( void )
{
  return last_error.c_str();
}

size_t revft_last_error_line( void )
{
  return last_error_line;
}

void revft_string_free( char* s )
{
  std::free( s );
}

revft_status revft_gate_names( char** out )
{
  return guarded( [&] {
    require( out != nullptr, "null output string" );
    std::string names;
    for ( const auto& n : revft::builtin_gate_names() ) names += n + "\n";
    *out = duplicate( names );
  } );
}

revft_status revft_gate_info_get( const char* name, revft_gate_info* out )
{
  return guarded( [&] {
    require( name != nullptr && out != nullptr, "null argument" );
    const auto& g = revft::builtin_gate( name );
    *out = { g.arity(), revft::is_reversible( g ), revft::is_parity_preserving( g ), g.cost().alpha, g.cost().beta,
             g.cost().delta };
  } );
}

revft_status revft_gate_truth_table( const char* name, revft_format format, char** out )
{
  return guarded( [&] {
    require( name != nullptr && out != nullptr, "null argument" );
    const auto& g = revft::builtin_gate( name );
    if ( format == REVFT_FORMAT_TSV )
    {
      *out = duplicate( revft::truth_table_tsv( g ) );
      return;
    }
    std::ostringstream os;
    for ( const auto& n : revft::input_port_names( g.arity() ) ) os << n;
    os << " -> ";
    for ( const auto& n : revft::output_port_names( g.arity() ) ) os << n;
    os << '\n';
    for ( const auto& row : revft::truth_table( g ) )
    {
      os << row.input.to_string() << std::string( 4, ' ' ) << row.output.to_string() << '\n';
    }
    *out = duplicate( os.str() );
  } );
}

revft_status revft_circuit_parse( const char* text, size_t length, revft_circuit** out, char** warnings )
{
  return guarded( [&] {
    require( out != nullptr && ( text != nullptr || length == 0 ), "null argument" );
    auto parsed = revft::parse_netlist( std::string_view( text ? text : "", length ) );
    if ( warnings )
    {
      std::string w;
      for ( const auto& line : parsed.warnings ) w += line + "\n";
      *warnings = duplicate( w );
    }
    *out = new revft_circuit{ std::move( parsed.circuit ) };
  } );
}

void revft_circuit_free( revft_circuit* circuit )
{
  delete circuit;
}

revft_status revft_circuit_serialize( const revft_circuit* circuit, char** out )
{
  return guarded( [&] {
    require( circuit != nullptr && out != nullptr, "null argument" );
    *out = duplicate( revft::serialize_netlist( circuit->circuit ) );
  } );
}

revft_status revft_circuit_check( const revft_circuit* circuit, revft_check_result* result, char** details )
{
  return guarded( [&] {
    require( circuit != nullptr && result != nullptr, "null argument" );
    const auto& c = circuit->circuit;
    std::ostringstream os;
    const auto report = revft::validate( c );
    *result = { report.ok(), 0, 0 };
    for ( const auto& v : report.violations ) os << "violation: " << v << '\n';
    if ( report.ok() )
    {
      result->reversible = revft::is_reversible( revft::circuit_as_bijection( c ) );
      const auto audit = revft::parity_audit( c );
      result->parity_preserving = audit.circuit_parity_preserving;
      for ( const auto& v : audit.offending_vectors ) os << "parity violated at input " << v.to_string() << '\n';
    }
    if ( details ) *details = duplicate( os.str() );
  } );
}

revft_status revft_circuit_truth_table( const revft_circuit* circuit, revft_format format, char** out )
{
  return guarded( [&] {
    require( circuit != nullptr && out != nullptr, "null argument" );
    const auto& c = circuit->circuit;
    const auto traces = revft::exhaustive_table( c );
    if ( format == REVFT_FORMAT_TSV )
    {
      *out = duplicate( revft::exhaustive_table_tsv( c, traces ) );
      return;
    }
    std::ostringstream os;
    os << "inputs | outputs | garbage | parity in/out\n";
    for ( const auto& t : traces )
    {
      os << t.inputs.to_string() << " | " << t.outputs.to_string() << " | " << t.garbage.to_string() << " | "
         << t.input_lines.parity() << '/' << t.output_lines.parity() << '\n';
    }
    *out = duplicate( os.str() );
  } );
}

revft_status revft_circuit_simulate( const revft_circuit* circuit, const char* bits, char** trace )
{
  return guarded( [&] {
    require( circuit != nullptr && bits != nullptr && trace != nullptr, "null argument" );
    const auto t = revft::evaluate( circuit->circuit, revft::BitVector::from_string( bits ) );
    *trace = duplicate( describe_trace( circuit->circuit, t ) );
  } );
}

revft_status revft_circuit_measure( const revft_circuit* circuit, revft_metrics* out )
{
  return guarded( [&] {
    require( circuit != nullptr && out != nullptr, "null argument" );
    const auto m = revft::measure( circuit->circuit );
    *out = { m.gate_count, m.garbage_outputs, m.constant_inputs, m.unit_delay, m.total_cost.alpha, m.total_cost.beta,
             m.total_cost.delta };
  } );
}

revft_status revft_build_full_adder( revft_circuit** out )
{
  return build_into( out, [] { return revft::build_full_adder(); } );
}

revft_status revft_build_ripple_carry_adder( size_t bits, revft_circuit** out )
{
  return build_into( out, [bits] { return revft::build_ripple_carry_adder( bits ); } );
}

revft_status revft_build_toffoli( revft_circuit** out )
{
  return build_into( out, [] { return revft::build_parity_preserving_toffoli(); } );
}

revft_status revft_build_function( const char* name, revft_circuit** out )
{
  return build_into( out, [name] {
    require( name != nullptr, "null function name" );
    return revft::ig_function_library( name );
  } );
}

revft_status revft_truth_spec_parse( const char* text, size_t length, revft_truth_spec** out )
{
  return guarded( [&] {
    require( out != nullptr && ( text != nullptr || length == 0 ), "null argument" );
    *out = new revft_truth_spec{ revft::parse_truth_spec( std::string_view( text ? text : "", length ) ) };
  } );
}

void revft_truth_spec_free( revft_truth_spec* spec )
{
  delete spec;
}

revft_status revft_check_equivalence( const revft_circuit* circuit, const revft_truth_spec* spec, int* equivalent,
                                      char** counterexample, char** failing_output )
{
  return guarded( [&] {
    require( circuit != nullptr && spec != nullptr && equivalent != nullptr, "null argument" );
    const auto r = revft::check_equivalence( circuit->circuit, spec->spec );
    *equivalent = r.equivalent;
    if ( counterexample ) *counterexample = r.counterexample ? duplicate( r.counterexample->to_string() ) : nullptr;
    if ( failing_output ) *failing_output = r.equivalent ? nullptr : duplicate( r.failing_output );
  } );
}

revft_status revft_ft_lower_bounds( const revft_truth_spec* spec, size_t* garbage, size_t* constants )
{
  return guarded( [&] {
    require( spec != nullptr && garbage != nullptr && constants != nullptr, "null argument" );
    *garbage = revft::ft_garbage_lower_bound( spec->spec );
    *constants = revft::ft_constant_input_lower_bound( spec->spec );
  } );
}

revft_status revft_fault_campaign( const revft_circuit* circuit, const revft_campaign_options* options,
                                   revft_campaign_summary* summary, revft_format format, char** report )
{
  return guarded( [&] {
    require( circuit != nullptr && options != nullptr && summary != nullptr, "null argument" );
    require( ( options->models & ~7u ) == 0, "unknown fault model bit" );
    std::set<revft::FaultModel> models;
    if ( options->models & REVFT_FAULT_BITFLIP ) models.insert( revft::FaultModel::bit_flip );
    if ( options->models & REVFT_FAULT_STUCK_AT_0 ) models.insert( revft::FaultModel::stuck_at_0 );
    if ( options->models & REVFT_FAULT_STUCK_AT_1 ) models.insert( revft::FaultModel::stuck_at_1 );
    const auto vectors = options->sample ? revft::VectorSelection::sample( options->sample_size, options->seed )
                                         : revft::VectorSelection::exhaustive();
    const auto observer = options->primary_observer ? revft::Observer::primary_only : revft::Observer::all_lines;

    const auto result = revft::campaign( circuit->circuit, models, vectors, observer );
    const auto& s = result.summary;
    *summary = { result.reports.size(), s.runs, s.bit_flip_total, s.bit_flip_detected, s.stuck_at_total,
                 s.stuck_at_activated, s.stuck_at_detected, s.corrupted, s.undetected.size() };
    if ( report )
    {
      *report = duplicate( format == REVFT_FORMAT_CSV ? revft::campaign_csv( result ) : revft::campaign_text( result ) );
    }
  } );
}

revft_status revft_cost_format( uint64_t alpha, uint64_t beta, uint64_t delta, int ascii, char** out )
{
  return guarded( [&] {
    require( out != nullptr, "null output string" );
    const revft::CostVector cost{ alpha, beta, delta };
    *out = duplicate( cost.to_string( ascii ? revft::CostNotation::ascii : revft::CostNotation::greek ) );
  } );
}

revft_status revft_comparison_table( revft_comparison kind, size_t bits, revft_format format, int ascii, char** out )
{
  return guarded( [&] {
    require( out != nullptr, "null output string" );
    revft::ComparisonKind k;
    switch ( kind )
    {
    case REVFT_COMPARE_FULL_ADDER:
      k = revft::ComparisonKind::full_adder;
      break;
    case REVFT_COMPARE_RIPPLE_CARRY:
      k = revft::ComparisonKind::ripple_carry;
      break;
    case REVFT_COMPARE_TOFFOLI:
      k = revft::ComparisonKind::toffoli;
      break;
    default:
      throw revft::Error( revft::ErrorCode::invalid_argument, "unknown comparison kind" );
    }
    const auto notation = ascii ? revft::CostNotation::ascii : revft::CostNotation::greek;
    const auto rows = revft::comparison_table( k, bits );
    *out = duplicate( format == REVFT_FORMAT_CSV ? revft::render_comparison_csv( rows, k, notation )
                                                 : revft::render_comparison_text( rows, k, notation ) );
  } );
}

} // extern "C"
