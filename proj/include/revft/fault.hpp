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

#pragma once

#include "bit_vector.hpp"
#include "circuit.hpp"
#include "simulator.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace revft
{

enum class FaultModel
{
  bit_flip,
  stuck_at_0,
  stuck_at_1,
};

std::string_view to_string( FaultModel model ) noexcept;
/// Accepts bitflip, sa0, sa1 (and the long spellings).
std::optional<FaultModel> fault_model_from_string( std::string_view text ) noexcept;

/// Which output lines the parity checker can see.
enum class Observer
{
  all_lines,    ///< inputs incl. constants vs. primary outputs and garbage
  primary_only, ///< parity of primary outputs vs. its fault-free value
};

struct FaultSite
{
  std::string wire;
  FaultModel model;

  friend bool operator==( const FaultSite&, const FaultSite& ) = default;
};

struct Verdict
{
  bool activated{ false };
  bool parity_detected{ false };         ///< all-lines observer
  bool primary_parity_detected{ false }; ///< primary-only observer
  bool output_corrupted{ false };

  bool detected( Observer observer ) const noexcept
  {
    return observer == Observer::all_lines ? parity_detected : primary_parity_detected;
  }
};

struct FaultRun
{
  Trace faulty;
  Verdict verdict;
};

/// One site per (wire, model), wires in topological order, then model order.
std::vector<FaultSite> enumerate_fault_sites( const Circuit& c, const std::set<FaultModel>& models );

/// Throws Error(unknown_name) for a wire not in the circuit.
FaultRun inject_and_run( const Circuit& c, const FaultSite& site, const BitVector& inputs );
/// Several simultaneous faults; activated means any faulted wire changed.
FaultRun inject_and_run( const Circuit& c, std::span<const FaultSite> sites, const BitVector& inputs );

struct VectorSelection
{
  bool all{ true };
  std::size_t sample_size{ 0 };
  std::uint64_t seed{ 0 };

  static VectorSelection exhaustive() { return {}; }
  static VectorSelection sample( std::size_t k, std::uint64_t seed ) { return { false, k, seed }; }
};

struct VectorVerdict
{
  BitVector vector;
  Verdict verdict;
};

struct FaultReport
{
  FaultSite site;
  std::vector<VectorVerdict> verdicts;
  std::size_t activated{ 0 };
  std::size_t detected{ 0 };
  std::size_t corrupted{ 0 };
};

struct UndetectedCase
{
  FaultSite site;
  BitVector vector;
};

struct CampaignSummary
{
  Observer observer{ Observer::all_lines };
  std::size_t runs{ 0 };
  std::size_t bit_flip_total{ 0 };
  std::size_t bit_flip_detected{ 0 };
  std::size_t stuck_at_total{ 0 };
  std::size_t stuck_at_activated{ 0 };
  std::size_t stuck_at_detected{ 0 };
  std::size_t corrupted{ 0 };
  std::size_t detections{ 0 };
  std::vector<UndetectedCase> undetected; ///< activated but not detected
  std::optional<std::uint64_t> seed;

  double bit_flip_rate() const noexcept;
  double stuck_at_rate() const noexcept; ///< among activated cases
};

struct CampaignResult
{
  std::vector<FaultReport> reports;
  CampaignSummary summary;
};

CampaignResult campaign( const Circuit& c, const std::set<FaultModel>& models, const VectorSelection& vectors,
                         Observer observer = Observer::all_lines );

/// Rows: wire,model,vector,activated,parity_detected,output_corrupted; then a
/// summary block of `# key,value` lines.
std::string campaign_csv( const CampaignResult& result );
std::string campaign_text( const CampaignResult& result );

struct DoubleFault
{
  FaultSite first;
  FaultSite second;
  BitVector vector;
};

/// First pair of bit-flip sites and input vector where a primary output is
/// corrupted yet the all-lines parity check passes.
std::optional<DoubleFault> find_undetected_double_fault( const Circuit& c );

} // namespace revft
