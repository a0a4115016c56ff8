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

#include "revft/cost.hpp"

namespace revft
{

std::string CostVector::to_string( CostNotation notation ) const
{
  const bool greek = notation == CostNotation::greek;
  const std::pair<std::uint64_t, const char*> terms[] = {
      { alpha, greek ? "α" : "a" },
      { beta, greek ? "β" : "b" },
      { delta, greek ? "δ" : "d" } };

  std::string out;
  for ( const auto& [count, symbol] : terms )
  {
    if ( count == 0 )
    {
      continue;
    }
    if ( !out.empty() )
    {
      out += '+';
    }
    out += std::to_string( count ) + symbol;
  }
  return out.empty() ? "0" : out;
}

} // namespace revft
