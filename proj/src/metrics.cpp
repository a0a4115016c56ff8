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

#include "revft/metrics.hpp"
#include "revft/builders.hpp"
#include "revft/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace revft
{

std::string CircuitMetrics::to_string( CostNotation notation ) const
{
  std::ostringstream os;
  os << "gates=" << gate_count << " garbage=" << garbage_outputs << " constants=" << constant_inputs
     << " delay=" << unit_delay << " T=" << total_cost.to_string( notation );
  return os.str();
}

CircuitMetrics measure( const Circuit& c )
{
  const auto cc = compile( c );
  CircuitMetrics m;
  m.gate_count = c.instances.size();
  m.garbage_outputs = c.garbage_outputs.size();
  m.constant_inputs = c.constants.size();

  std::vector<std::size_t> depth( cc.wire_names.size(), 0 );
  for ( const auto& op : cc.ops )
  {
    std::size_t d = 0;
    for ( auto w : op.inputs ) d = std::max( d, depth[w] );
    for ( auto w : op.outputs ) depth[w] = d + 1;
    m.unit_delay = std::max( m.unit_delay, d + 1 );
    m.total_cost += op.gate->cost();
  }
  return m;
}

std::size_t ft_garbage_lower_bound( const TruthSpec& spec )
{
  std::map<std::pair<std::uint64_t, bool>, std::size_t> classes;
  bool parity_already_matches = true;
  const std::uint64_t rows = std::uint64_t{ 1 } << spec.input_arity();
  for ( std::uint64_t x = 0; x < rows; ++x )
  {
    const auto o = spec.output_pattern( x );
    ++classes[{ o, parity_of( x ) }];
    parity_already_matches = parity_already_matches && parity_of( x ) == parity_of( o );
  }
  std::size_t largest = 0;
  for ( const auto& [key, count] : classes ) largest = std::max( largest, count );

  if ( largest <= 1 && parity_already_matches )
  {
    return 0;
  }
  // garbage patterns within one class share a fixed parity: 2^(g-1) choices
  std::size_t g = 1;
  while ( ( std::size_t{ 1 } << ( g - 1 ) ) < largest ) ++g;
  return g;
}

std::size_t ft_constant_input_lower_bound( const TruthSpec& spec )
{
  const auto lines = spec.outputs().size() + ft_garbage_lower_bound( spec );
  return lines > spec.input_arity() ? lines - spec.input_arity() : 0;
}

CostVector recompute_cost( const std::vector<GateCount>& mix )
{
  CostVector total;
  for ( const auto& [gate, count] : mix ) total += count * builtin_gate( gate ).cost();
  return total;
}

namespace
{

std::string composition_text( const std::vector<GateCount>& mix )
{
  std::string out;
  for ( const auto& [gate, count] : mix )
  {
    if ( !out.empty() ) out += '+';
    if ( count != 1 ) out += std::to_string( count );
    out += gate;
  }
  return out;
}

std::vector<GateCount> gate_mix( const Circuit& c )
{
  std::vector<GateCount> mix;
  for ( const auto& inst : c.instances )
  {
    auto it = std::find_if( mix.begin(), mix.end(), [&]( const GateCount& g ) { return g.gate == inst.gate->name(); } );
    if ( it == mix.end() ) mix.push_back( { inst.gate->name(), 1 } );
    else ++it->count;
  }
  return mix;
}

ComparisonRow computed_row( std::string label, const Circuit& c )
{
  const auto m = measure( c );
  ComparisonRow row;
  row.label = std::move( label );
  row.gates = m.gate_count;
  row.delay = m.unit_delay;
  row.garbage = m.garbage_outputs;
  row.constants = m.constant_inputs;
  row.cost = m.total_cost;
  row.composition = composition_text( gate_mix( c ) );
  return row;
}

ComparisonRow literature_row( std::string citation, std::optional<std::size_t> gates, std::optional<std::size_t> delay,
                              std::optional<std::size_t> garbage, std::optional<std::size_t> constants,
                              std::optional<CostVector> printed, const std::vector<GateCount>& mix )
{
  ComparisonRow row;
  row.label = "Existing " + citation;
  row.source = ComparisonRow::Source::literature;
  row.citation = std::move( citation );
  row.gates = gates;
  row.delay = delay;
  row.garbage = garbage;
  row.constants = constants;
  row.cost = printed;
  row.composition = composition_text( mix );
  if ( printed )
  {
    row.recomputed_cost = recompute_cost( mix );
    if ( *row.recomputed_cost != *printed )
    {
      row.footnote = "printed " + printed->to_string() + "; per-gate vectors give " + row.recomputed_cost->to_string();
    }
  }
  return row;
}

std::size_t display_width( const std::string& s )
{
  return static_cast<std::size_t>(
      std::count_if( s.begin(), s.end(), []( char ch ) { return ( static_cast<unsigned char>( ch ) & 0xC0 ) != 0x80; } ) );
}

std::string opt( const std::optional<std::size_t>& v )
{
  return v ? std::to_string( *v ) : "-";
}

std::vector<std::string> header_for( ComparisonKind kind )
{
  switch ( kind )
  {
  case ComparisonKind::full_adder:
    return { "Circuit", "Gates", "Clock cycles", "Garbage", "Constants", "Total logical calculation" };
  case ComparisonKind::ripple_carry:
    return { "Circuit", "Gates", "Garbage", "Constants", "Unit delay" };
  case ComparisonKind::toffoli:
    return { "Circuit", "Gates", "Garbage", "Total logical calculation" };
  }
  return {};
}

std::vector<std::string> cells_for( const ComparisonRow& r, ComparisonKind kind, CostNotation notation )
{
  const auto cost = r.cost ? r.cost->to_string( notation ) + ( r.footnote.empty() ? "" : " *" ) : std::string( "-" );
  switch ( kind )
  {
  case ComparisonKind::full_adder:
    return { r.label, opt( r.gates ), opt( r.delay ), opt( r.garbage ), opt( r.constants ), cost };
  case ComparisonKind::ripple_carry:
    return { r.label, opt( r.gates ), opt( r.garbage ), opt( r.constants ), opt( r.delay ) };
  case ComparisonKind::toffoli:
    return { r.label, opt( r.gates ), opt( r.garbage ), cost };
  }
  return {};
}

std::string footnote_text( const ComparisonRow& r, CostNotation notation )
{
  return "printed " + r.cost->to_string( notation ) + "; per-gate vectors give " + r.recomputed_cost->to_string( notation );
}

} // namespace

std::vector<ComparisonRow> comparison_table( ComparisonKind kind, std::size_t bits )
{
  std::vector<ComparisonRow> rows;
  switch ( kind )
  {
  case ComparisonKind::full_adder:
    rows.push_back( computed_row( "Proposed", build_full_adder() ) );
    rows.push_back( literature_row( "[12]", 4, 4, 3, 2, CostVector{ 8, 16, 4 }, { { "FRG", 4 } } ) );
    rows.push_back( literature_row( "[11]", 6, 6, 6, 5, CostVector{ 12, 8, 2 }, { { "FRG", 2 }, { "F2G", 4 } } ) );
    break;
  case ComparisonKind::ripple_carry:
  {
    if ( bits < 1 )
    {
      throw Error( ErrorCode::invalid_argument, "ripple-carry comparison needs N >= 1" );
    }
    const auto n = bits;
    rows.push_back( computed_row( "Proposed", build_ripple_carry_adder( n ) ) );
    rows.back().cost.reset();
    auto r12 = literature_row( "[12]", 4 * n, 4 * n, 3 * n, 2 * n, std::nullopt, { { "FRG", 4 * n } } );
    auto r11 = literature_row( "[11]", 6 * n, 6 * n, 6 * n, 5 * n, std::nullopt, { { "FRG", 2 * n }, { "F2G", 4 * n } } );
    rows.push_back( std::move( r12 ) );
    rows.push_back( std::move( r11 ) );
    break;
  }
  case ComparisonKind::toffoli:
    rows.push_back( computed_row( "Proposed", build_parity_preserving_toffoli() ) );
    rows.push_back( literature_row( "[4]", 3, std::nullopt, 2, std::nullopt, CostVector{ 6, 4, 2 }, { { "FRG", 1 }, { "F2G", 2 } } ) );
    rows.push_back( literature_row( "[10]", 2, std::nullopt, 1, std::nullopt, CostVector{ 5, 3, 2 }, { { "NFT", 1 }, { "F2G", 1 } } ) );
    break;
  }
  return rows;
}

std::string render_comparison_text( const std::vector<ComparisonRow>& rows, ComparisonKind kind, CostNotation notation )
{
  std::vector<std::vector<std::string>> table{ header_for( kind ) };
  for ( const auto& r : rows ) table.push_back( cells_for( r, kind, notation ) );

  std::vector<std::size_t> widths( table.front().size(), 0 );
  for ( const auto& row : table )
  {
    for ( std::size_t i = 0; i < row.size(); ++i ) widths[i] = std::max( widths[i], display_width( row[i] ) );
  }
  std::ostringstream os;
  for ( const auto& row : table )
  {
    std::string line;
    for ( std::size_t i = 0; i < row.size(); ++i )
    {
      if ( i ) line += "  ";
      line += row[i];
      if ( i + 1 < row.size() ) line += std::string( widths[i] - display_width( row[i] ), ' ' );
    }
    os << line << '\n';
  }
  for ( const auto& r : rows )
  {
    if ( !r.footnote.empty() ) os << "* " << r.label << ": " << footnote_text( r, notation ) << '\n';
  }
  return os.str();
}

std::string render_comparison_csv( const std::vector<ComparisonRow>& rows, ComparisonKind, CostNotation notation )
{
  std::ostringstream os;
  os << "label,source,citation,gates,delay,garbage,constants,cost,composition,recomputed_cost,footnote\n";
  for ( const auto& r : rows )
  {
    auto num = [&os]( const std::optional<std::size_t>& v ) {
      if ( v ) os << *v;
      os << ',';
    };
    os << r.label << ',' << ( r.source == ComparisonRow::Source::computed ? "computed" : "literature" ) << ','
       << r.citation << ',';
    num( r.gates );
    num( r.delay );
    num( r.garbage );
    num( r.constants );
    os << ( r.cost ? r.cost->to_string( notation ) : "" ) << ',' << r.composition << ','
       << ( r.recomputed_cost ? r.recomputed_cost->to_string( notation ) : "" ) << ','
       << ( r.footnote.empty() ? "" : "\"" + footnote_text( r, notation ) + "\"" ) << '\n';
  }
  return os.str();
}

} // namespace revft
