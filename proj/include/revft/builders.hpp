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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace revft
{

/// Two-IG fault-tolerant full adder: inputs a b cin, constants c0 c1,
/// outputs s cout, three garbage lines.
Circuit build_full_adder();

/// N cascaded full adders; inputs a0..aN-1 b0..bN-1 cin, outputs
/// s0..sN-1 cout. Throws Error(invalid_argument) for N < 1.
Circuit build_ripple_carry_adder( std::size_t bits );

/// FRG + F2G realization of the Toffoli gate with one constant and one
/// garbage line; outputs p q r.
Circuit build_parity_preserving_toffoli();

/// NOT, COPY, AND, NAND, XOR or OR realized with IG gates and constants.
Circuit ig_function_library( std::string_view name );
const std::vector<std::string>& ig_function_names();

/// A single builtin gate with inputs A.. and outputs P..; no constants.
Circuit wrap_gate( std::string_view gate_name );

} // namespace revft
