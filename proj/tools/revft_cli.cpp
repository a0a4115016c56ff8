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

// revft command-line front end. Talks to the library only through the C API.

#include "revft/revft.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace
{

enum ExitCode
{
  exit_ok = 0,
  exit_property_failure = 1,
  exit_usage = 2,
  exit_io = 3,
};

struct CircuitDeleter
{
  void operator()( revft_circuit* c ) const { revft_circuit_free( c ); }
};
struct SpecDeleter
{
  void operator()( revft_truth_spec* s ) const { revft_truth_spec_free( s ); }
};
using CircuitPtr = std::unique_ptr<revft_circuit, CircuitDeleter>;
using SpecPtr = std::unique_ptr<revft_truth_spec, SpecDeleter>;

/// Failure carrying the process exit code.
struct CliError
{
  int code;
  std::string message;
};

int code_for( revft_status status )
{
  switch ( status )
  {
  case REVFT_ERR_INVALID_ARGUMENT:
  case REVFT_ERR_UNKNOWN_NAME:
    return exit_usage;
  default:
    return exit_io;
  }
}

void check( revft_status status, const std::string& context = {} )
{
  if ( status != REVFT_OK )
  {
    throw CliError{ code_for( status ), ( context.empty() ? "" : context + ": " ) + revft_last_error() };
  }
}

/// Takes ownership of a string from the library.
std::string take( char* s )
{
  std::string out = s ? s : "";
  revft_string_free( s );
  return out;
}

std::string read_file( const std::string& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw CliError{ exit_io, "cannot read " + path };
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output( const std::string& path, const std::string& text )
{
  if ( path.empty() || path == "-" )
  {
    std::cout << text;
    return;
  }
  std::ofstream out( path, std::ios::binary );
  if ( !out || !( out << text ) )
  {
    throw CliError{ exit_io, "cannot write " + path };
  }
}

CircuitPtr load_circuit( const std::string& path )
{
  const auto text = read_file( path );
  revft_circuit* raw = nullptr;
  char* warnings = nullptr;
  check( revft_circuit_parse( text.data(), text.size(), &raw, &warnings ), path );
  CircuitPtr circuit( raw );
  std::istringstream ws( take( warnings ) );
  for ( std::string line; std::getline( ws, line ); )
  {
    std::cerr << path << ": warning: " << line << '\n';
  }
  return circuit;
}

std::string cost_text( uint64_t a, uint64_t b, uint64_t d, bool ascii )
{
  char* s = nullptr;
  check( revft_cost_format( a, b, d, ascii, &s ) );
  return take( s );
}

const char* pass_fail( int ok )
{
  return ok ? "PASS" : "FAIL";
}

struct Options
{
  std::string gate;
  bool tsv{ false };
  bool csv{ false };
  bool ascii{ false };
  std::string file;
  std::string bits;
  std::string spec;
  std::string models{ "bitflip" };
  std::string vectors{ "all" };
  std::optional<uint64_t> seed;
  std::string observer{ "all" };
  std::size_t width{ 0 };
  std::string function;
  std::string output;
};

int cmd_gates_list()
{
  std::istringstream names( [] {
    char* s = nullptr;
    check( revft_gate_names( &s ) );
    return take( s );
  }() );
  for ( std::string name; std::getline( names, name ); )
  {
    revft_gate_info info{};
    check( revft_gate_info_get( name.c_str(), &info ) );
    std::printf( "%-4s %ux%u  reversible=%s  parity-preserving=%s  cost=%s\n", name.c_str(), info.arity, info.arity,
                 info.reversible ? "yes" : "no", info.parity_preserving ? "yes" : "no",
                 cost_text( info.alpha, info.beta, info.delta, false ).c_str() );
  }
  return exit_ok;
}

int cmd_gates_show( const Options& o )
{
  char* s = nullptr;
  check( revft_gate_truth_table( o.gate.c_str(), o.tsv ? REVFT_FORMAT_TSV : REVFT_FORMAT_TEXT, &s ), o.gate );
  std::cout << take( s );
  return exit_ok;
}

int cmd_check( const Options& o )
{
  auto c = load_circuit( o.file );
  revft_check_result r{};
  char* details = nullptr;
  check( revft_circuit_check( c.get(), &r, &details ) );
  std::cout << "validate            " << pass_fail( r.valid ) << '\n'
            << "reversible          " << pass_fail( r.reversible ) << '\n'
            << "parity-preserving   " << pass_fail( r.parity_preserving ) << '\n'
            << take( details );
  return r.valid && r.reversible && r.parity_preserving ? exit_ok : exit_property_failure;
}

int cmd_truth( const Options& o )
{
  auto c = load_circuit( o.file );
  char* s = nullptr;
  check( revft_circuit_truth_table( c.get(), o.tsv ? REVFT_FORMAT_TSV : REVFT_FORMAT_TEXT, &s ) );
  std::cout << take( s );
  return exit_ok;
}

int cmd_sim( const Options& o )
{
  auto c = load_circuit( o.file );
  char* s = nullptr;
  check( revft_circuit_simulate( c.get(), o.bits.c_str(), &s ), "--in" );
  std::cout << take( s );
  return exit_ok;
}

int cmd_equiv( const Options& o )
{
  auto c = load_circuit( o.file );
  const auto text = read_file( o.spec );
  revft_truth_spec* raw = nullptr;
  check( revft_truth_spec_parse( text.data(), text.size(), &raw ), o.spec );
  SpecPtr spec( raw );

  int equivalent = 0;
  char* counterexample = nullptr;
  char* output = nullptr;
  check( revft_check_equivalence( c.get(), spec.get(), &equivalent, &counterexample, &output ) );
  const auto cex = take( counterexample );
  const auto name = take( output );
  if ( equivalent )
  {
    std::cout << "equivalent: yes\n";
    return exit_ok;
  }
  std::cout << "equivalent: no\ncounterexample: " << cex << " (output " << name << ")\n";
  return exit_property_failure;
}

int cmd_faults( const Options& o )
{
  auto c = load_circuit( o.file );
  revft_campaign_options opts{};
  std::istringstream models( o.models );
  for ( std::string m; std::getline( models, m, ',' ); )
  {
    if ( m == "bitflip" ) opts.models |= REVFT_FAULT_BITFLIP;
    else if ( m == "sa0" ) opts.models |= REVFT_FAULT_STUCK_AT_0;
    else if ( m == "sa1" ) opts.models |= REVFT_FAULT_STUCK_AT_1;
    else if ( !m.empty() ) throw CliError{ exit_usage, "unknown fault model '" + m + "'" };
  }
  if ( o.vectors != "all" )
  {
    const std::string prefix = "sample:";
    std::size_t k = 0;
    try
    {
      if ( o.vectors.rfind( prefix, 0 ) != 0 ) throw std::invalid_argument( "" );
      std::size_t used = 0;
      k = std::stoul( o.vectors.substr( prefix.size() ), &used );
      if ( used != o.vectors.size() - prefix.size() ) throw std::invalid_argument( "" );
    }
    catch ( const std::exception& )
    {
      throw CliError{ exit_usage, "--vectors expects 'all' or 'sample:K'" };
    }
    if ( !o.seed )
    {
      throw CliError{ exit_usage, "sampled campaigns require --seed" };
    }
    opts.sample = 1;
    opts.sample_size = k;
    opts.seed = *o.seed;
  }
  opts.primary_observer = o.observer == "primary";

  revft_campaign_summary summary{};
  char* report = nullptr;
  check( revft_fault_campaign( c.get(), &opts, &summary, o.csv ? REVFT_FORMAT_CSV : REVFT_FORMAT_TEXT, &report ) );
  std::cout << take( report );
  return summary.undetected == 0 ? exit_ok : exit_property_failure;
}

int cmd_build( const std::string& which, const Options& o )
{
  revft_circuit* raw = nullptr;
  if ( which == "fa" ) check( revft_build_full_adder( &raw ) );
  else if ( which == "rca" ) check( revft_build_ripple_carry_adder( o.width, &raw ), "--bits" );
  else if ( which == "tg" ) check( revft_build_toffoli( &raw ) );
  else check( revft_build_function( o.function.c_str(), &raw ), "--name" );
  CircuitPtr c( raw );
  char* text = nullptr;
  check( revft_circuit_serialize( c.get(), &text ) );
  write_output( o.output, take( text ) );
  return exit_ok;
}

int cmd_metrics( const Options& o )
{
  auto c = load_circuit( o.file );
  revft_metrics m{};
  check( revft_circuit_measure( c.get(), &m ) );
  std::cout << "gates=" << m.gates << " garbage=" << m.garbage << " constants=" << m.constants << " delay=" << m.delay
            << " T=" << cost_text( m.alpha, m.beta, m.delta, o.ascii ) << '\n';
  return exit_ok;
}

int cmd_compare( revft_comparison kind, const Options& o )
{
  char* s = nullptr;
  check( revft_comparison_table( kind, o.width, o.csv ? REVFT_FORMAT_CSV : REVFT_FORMAT_TEXT, o.ascii, &s ), "--bits" );
  std::cout << take( s );
  return exit_ok;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "revft: parity-preserving reversible logic toolkit" };
  app.require_subcommand( 1 );
  Options o;
  std::function<int()> action;

  auto* gates = app.add_subcommand( "gates", "Builtin gate catalog" )->require_subcommand( 1 );
  gates->add_subcommand( "list", "List builtin gates" )->callback( [&] { action = cmd_gates_list; } );
  auto* show = gates->add_subcommand( "show", "Print a gate's truth table" );
  show->add_option( "name", o.gate, "Gate name" )->required();
  show->add_flag( "--tsv", o.tsv, "Tab-separated output" );
  show->callback( [&] { action = [&] { return cmd_gates_show( o ); }; } );

  auto file_command = [&]( const std::string& name, const std::string& help, int ( *fn )( const Options& ) ) {
    auto* sub = app.add_subcommand( name, help );
    sub->add_option( "file", o.file, "Netlist (.rnl)" )->required();
    sub->callback( [&, fn] { action = [&, fn] { return fn( o ); }; } );
    return sub;
  };
  file_command( "check", "Validate and audit reversibility and parity", cmd_check );
  file_command( "truth", "Exhaustive truth table with parity columns", cmd_truth )->add_flag( "--tsv", o.tsv );
  file_command( "sim", "Simulate one input vector", cmd_sim )->add_option( "--in", o.bits, "Input bits" )->required();
  file_command( "equiv", "Check against a truth spec", cmd_equiv )
      ->add_option( "--spec", o.spec, "Truth spec file" )
      ->required();
  auto* faults = file_command( "faults", "Single-fault injection campaign (exit 1 if an activated fault goes undetected)", cmd_faults );
  faults->add_option( "--model", o.models, "Comma-separated: bitflip,sa0,sa1" );
  faults->add_option( "--vectors", o.vectors, "all or sample:K" );
  faults->add_option( "--seed", o.seed, "Seed for sampled campaigns" );
  faults->add_option( "--observer", o.observer, "all or primary" )->check( CLI::IsMember( { "all", "primary" } ) );
  faults->add_flag( "--csv", o.csv, "CSV report" );
  file_command( "metrics", "Gate count, garbage, constants, delay, cost", cmd_metrics )
      ->add_flag( "--ascii", o.ascii, "Print cost as 8a+6b+2d" );

  auto* build = app.add_subcommand( "build", "Emit a builder circuit as .rnl" )->require_subcommand( 1 );
  auto build_leaf = [&]( const std::string& name, const std::string& help ) {
    auto* sub = build->add_subcommand( name, help );
    sub->add_option( "-o,--output", o.output, "Output file (default stdout)" );
    sub->callback( [&, name] { action = [&, name] { return cmd_build( name, o ); }; } );
    return sub;
  };
  build_leaf( "fa", "Fault-tolerant full adder" );
  build_leaf( "rca", "Ripple-carry adder" )->add_option( "--bits", o.width, "Width N" )->required();
  build_leaf( "tg", "Parity-preserving Toffoli" );
  build_leaf( "fn", "IG function library" )
      ->add_option( "--name", o.function, "NOT, COPY, AND, NAND, XOR or OR" )
      ->required();

  auto* compare = app.add_subcommand( "compare", "Comparison tables" )->require_subcommand( 1 );
  auto compare_leaf = [&]( const std::string& name, const std::string& help, revft_comparison kind ) {
    auto* sub = compare->add_subcommand( name, help );
    sub->add_flag( "--csv", o.csv, "CSV output" );
    sub->add_flag( "--ascii", o.ascii, "ASCII cost notation" );
    sub->callback( [&, kind] { action = [&, kind] { return cmd_compare( kind, o ); }; } );
    return sub;
  };
  compare_leaf( "fa", "Fault-tolerant full adders", REVFT_COMPARE_FULL_ADDER );
  compare_leaf( "rca", "Ripple-carry adders", REVFT_COMPARE_RIPPLE_CARRY )
      ->add_option( "--bits", o.width, "Width N" )
      ->required();
  compare_leaf( "tg", "Parity-preserving Toffoli circuits", REVFT_COMPARE_TOFFOLI );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return exit_usage;
  }

  try
  {
    return action ? action() : exit_usage;
  }
  catch ( const CliError& e )
  {
    std::cerr << "revft: " << e.message << '\n';
    return e.code;
  }
}
