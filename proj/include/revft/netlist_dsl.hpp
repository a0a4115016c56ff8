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

#include "circuit.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace revft
{

/// Reader and writer for the line-oriented `.rnl` netlist format:
///
///   circuit <name>
///   inputs <id> ...
///   constants <id>=<0|1> ...
///   gate <inst-id> <GATE> <in-id>... -> <out-id>...
///   outputs <id> ...
///   garbage <id> ...
///
/// `#` starts a comment. Wires must be defined before they are consumed.
struct ParsedCircuit
{
  Circuit circuit;
  std::vector<std::string> warnings;
};

/// Throws ParseError on any lexical, reference or structural problem.
ParsedCircuit parse_netlist( std::string_view text );

/// Canonical text: gates in topological order, LF line endings. Throws
/// Error(invalid_circuit) for circuits that do not validate.
std::string serialize_netlist( const Circuit& c );

} // namespace revft
