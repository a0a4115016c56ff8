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

#include "revft/fault.hpp"
#include "revft/error.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>

namespace revft
{

std::string_view to_string( FaultModel model ) noexcept
{
  switch ( model )
  {
  case FaultModel::bit_flip:
    return "bitflip";
  case FaultModel::stuck_at_0:
    return "sa0";
  case FaultModel::stuck_at_1:
    return "sa1";
  }
  return "?";
}

std::optional<FaultModel> fault_model_from_string( std::string_view text ) noexcept
{
  if ( text == "bitflip" || text == "bit-flip" ) return FaultModel::bit_flip;
  if ( text == "sa0" || text == "stuck-at-0" ) return FaultModel::stuck_at_0;
  if ( text == "sa1" || text == "stuck-at-1" ) return FaultModel::stuck_at_1;
  return std::nullopt;
}

double CampaignSummary::bit_flip_rate() const noexcept
{
  return bit_flip_total == 0 ? 1.0 : static_cast<double>( bit_flip_detected ) / static_cast<double>( bit_flip_total );
}

double CampaignSummary::stuck_at_rate() const noexcept
{
  return stuck_at_activated == 0 ? 1.0
                                 : static_cast<double>( stuck_at_detected ) / static_cast<double>( stuck_at_activated );
}

namespace
{

struct IndexedFault
{
  std::size_t wire;
  FaultModel model;
};

std::uint8_t apply_fault( FaultModel model, std::uint8_t value ) noexcept
{
  switch ( model )
  {
  case FaultModel::bit_flip:
    return value ^ 1u;
  case FaultModel::stuck_at_0:
    return 0;
  case FaultModel::stuck_at_1:
    return 1;
  }
  return value;
}

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

std::vector<IndexedFault> resolve( const CompiledCircuit& cc, std::span<const FaultSite> sites )
{
  std::vector<IndexedFault> faults;
  for ( const auto& s : sites )
  {
    faults.push_back( { cc.wire_index( s.wire ), s.model } );
  }
  return faults;
}

bool parity_over( const std::vector<std::uint8_t>& values, const std::vector<std::size_t>& wires )
{
  std::uint8_t p = 0;
  for ( auto w : wires ) p ^= values[w];
  return p != 0;
}

struct Outcome
{
  std::vector<std::uint8_t> faulty;
  Verdict verdict;
};

Outcome run_faulty( const CompiledCircuit& cc, const std::vector<IndexedFault>& faults,
                    const std::vector<std::uint8_t>& lines, const std::vector<std::uint8_t>& good )
{
  Outcome out;
  out.faulty = propagate( cc, lines, [&faults]( std::size_t wire, std::uint8_t& value ) {
    for ( const auto& f : faults )
    {
      if ( f.wire == wire ) value = apply_fault( f.model, value );
    }
  } );

  auto& v = out.verdict;
  v.activated = std::any_of( faults.begin(), faults.end(), [&]( const IndexedFault& f ) {
    return out.faulty[f.wire] != good[f.wire];
  } );
  std::uint8_t input_parity = 0;
  for ( auto b : lines ) input_parity ^= b;
  v.parity_detected = ( input_parity != 0 ) != parity_over( out.faulty, cc.output_line_wires );
  v.primary_parity_detected =
      parity_over( out.faulty, cc.primary_output_wires ) != parity_over( good, cc.primary_output_wires );
  v.output_corrupted = std::any_of( cc.primary_output_wires.begin(), cc.primary_output_wires.end(),
                                    [&]( std::size_t w ) { return out.faulty[w] != good[w]; } );
  return out;
}

std::vector<BitVector> select_vectors( std::size_t n, const VectorSelection& selection )
{
  if ( n > max_exhaustive_inputs )
  {
    throw Error( ErrorCode::too_large, "exhaustive simulation too large: " + std::to_string( n ) + " inputs" );
  }
  const std::uint64_t space = std::uint64_t{ 1 } << n;
  std::vector<std::uint64_t> indices( space );
  std::iota( indices.begin(), indices.end(), std::uint64_t{ 0 } );
  if ( !selection.all && selection.sample_size < space )
  {
    std::vector<std::uint64_t> picked;
    std::mt19937_64 rng( selection.seed );
    std::sample( indices.begin(), indices.end(), std::back_inserter( picked ), selection.sample_size, rng );
    std::sort( picked.begin(), picked.end() );
    indices = std::move( picked );
  }
  std::vector<BitVector> vectors;
  vectors.reserve( indices.size() );
  for ( auto i : indices ) vectors.push_back( BitVector::from_index( i, n ) );
  return vectors;
}

std::string percent( std::size_t num, std::size_t den )
{
  char buf[32];
  std::snprintf( buf, sizeof( buf ), "%.1f%%", den == 0 ? 100.0 : 100.0 * static_cast<double>( num ) / static_cast<double>( den ) );
  return buf;
}

} // namespace

std::vector<FaultSite> enumerate_fault_sites( const Circuit& c, const std::set<FaultModel>& models )
{
  const auto cc = compile( c );
  std::vector<FaultSite> sites;
  for ( const auto& wire : cc.wire_names )
  {
    for ( auto m : models ) sites.push_back( { wire, m } );
  }
  return sites;
}

FaultRun inject_and_run( const Circuit& c, std::span<const FaultSite> sites, const BitVector& inputs )
{
  const auto cc = compile( c );
  const auto faults = resolve( cc, sites );
  const auto lines = line_values( cc, inputs );
  const auto good = propagate( cc, lines );
  auto outcome = run_faulty( cc, faults, lines, good );

  FaultRun run{ make_trace( cc, outcome.faulty ), outcome.verdict };
  // the observer sees the applied input lines, not the faulted wire values
  run.faulty.inputs = inputs;
  run.faulty.input_lines = BitVector( lines );
  return run;
}

FaultRun inject_and_run( const Circuit& c, const FaultSite& site, const BitVector& inputs )
{
  return inject_and_run( c, std::span<const FaultSite>( &site, 1 ), inputs );
}

CampaignResult campaign( const Circuit& c, const std::set<FaultModel>& models, const VectorSelection& vectors,
                         Observer observer )
{
  const auto cc = compile( c );
  const auto selected = select_vectors( cc.primary_input_count, vectors );

  std::vector<std::vector<std::uint8_t>> lines, good;
  for ( const auto& v : selected )
  {
    lines.push_back( line_values( cc, v ) );
    good.push_back( propagate( cc, lines.back() ) );
  }

  CampaignResult result;
  auto& sum = result.summary;
  sum.observer = observer;
  if ( !vectors.all ) sum.seed = vectors.seed;

  for ( const auto& wire : cc.wire_names )
  {
    for ( auto model : models )
    {
      FaultReport report{ { wire, model }, {} };
      const std::vector<IndexedFault> faults{ { cc.wire_index( wire ), model } };
      for ( std::size_t i = 0; i < selected.size(); ++i )
      {
        const auto verdict = run_faulty( cc, faults, lines[i], good[i] ).verdict;
        const bool detected = verdict.detected( observer );
        report.verdicts.push_back( { selected[i], verdict } );
        report.activated += verdict.activated;
        report.detected += detected;
        report.corrupted += verdict.output_corrupted;

        ++sum.runs;
        sum.detections += detected;
        sum.corrupted += verdict.output_corrupted;
        if ( model == FaultModel::bit_flip )
        {
          ++sum.bit_flip_total;
          sum.bit_flip_detected += detected;
        }
        else
        {
          ++sum.stuck_at_total;
          sum.stuck_at_activated += verdict.activated;
          sum.stuck_at_detected += verdict.activated && detected;
        }
        if ( verdict.activated && !detected )
        {
          sum.undetected.push_back( { report.site, selected[i] } );
        }
      }
      result.reports.push_back( std::move( report ) );
    }
  }
  return result;
}

std::string campaign_csv( const CampaignResult& result )
{
  const auto observer = result.summary.observer;
  std::ostringstream os;
  os << "wire,model,vector,activated,parity_detected,output_corrupted\n";
  for ( const auto& r : result.reports )
  {
    for ( const auto& vv : r.verdicts )
    {
      os << r.site.wire << ',' << to_string( r.site.model ) << ',' << vv.vector.to_string() << ','
         << vv.verdict.activated << ',' << vv.verdict.detected( observer ) << ',' << vv.verdict.output_corrupted << '\n';
    }
  }
  const auto& s = result.summary;
  os << "# observer," << ( observer == Observer::all_lines ? "all" : "primary" ) << '\n';
  if ( s.seed ) os << "# seed," << *s.seed << '\n';
  os << "# runs," << s.runs << '\n';
  os << "# bitflip_detected," << s.bit_flip_detected << '/' << s.bit_flip_total << '\n';
  os << "# stuckat_detected_of_activated," << s.stuck_at_detected << '/' << s.stuck_at_activated << '\n';
  os << "# output_corrupted," << s.corrupted << '\n';
  os << "# undetected_activated," << s.undetected.size() << '\n';
  return os.str();
}

std::string campaign_text( const CampaignResult& result )
{
  const auto& s = result.summary;
  std::ostringstream os;
  os << "fault campaign: " << result.reports.size() << " sites, " << s.runs << " runs, observer "
     << ( s.observer == Observer::all_lines ? "all lines" : "primary outputs" );
  if ( s.seed ) os << ", seed " << *s.seed;
  os << '\n';
  if ( s.bit_flip_total > 0 )
  {
    os << "bit-flip detection " << percent( s.bit_flip_detected, s.bit_flip_total ) << " (" << s.bit_flip_detected << '/'
       << s.bit_flip_total << ")\n";
  }
  if ( s.stuck_at_total > 0 )
  {
    os << "stuck-at detection " << percent( s.stuck_at_detected, s.stuck_at_activated ) << " of activated ("
       << s.stuck_at_detected << '/' << s.stuck_at_activated << "), " << ( s.stuck_at_total - s.stuck_at_activated )
       << " not activated\n";
  }
  os << "primary outputs corrupted in " << s.corrupted << " runs\n";
  os << "undetected activated faults: " << s.undetected.size() << '\n';
  for ( const auto& u : s.undetected )
  {
    os << "  " << u.site.wire << ' ' << to_string( u.site.model ) << " @ " << u.vector.to_string() << '\n';
  }
  return os.str();
}

std::optional<DoubleFault> find_undetected_double_fault( const Circuit& c )
{
  const auto cc = compile( c );
  const auto vectors = select_vectors( cc.primary_input_count, VectorSelection::exhaustive() );
  const auto wires = cc.wire_names.size();
  for ( std::size_t i = 0; i < wires; ++i )
  {
    for ( std::size_t j = i + 1; j < wires; ++j )
    {
      const std::vector<IndexedFault> faults{ { i, FaultModel::bit_flip }, { j, FaultModel::bit_flip } };
      for ( const auto& v : vectors )
      {
        const auto lines = line_values( cc, v );
        const auto verdict = run_faulty( cc, faults, lines, propagate( cc, lines ) ).verdict;
        if ( verdict.output_corrupted && !verdict.parity_detected )
        {
          return DoubleFault{ { cc.wire_names[i], FaultModel::bit_flip }, { cc.wire_names[j], FaultModel::bit_flip }, v };
        }
      }
    }
  }
  return std::nullopt;
}

} // namespace revft
