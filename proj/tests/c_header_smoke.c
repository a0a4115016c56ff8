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

/* the public header must compile and link as plain C */
#include <revft/revft.h>

#include <stdio.h>
#include <string.h>

int main( void )
{
  revft_circuit* c = NULL;
  revft_metrics m;
  if ( revft_build_full_adder( &c ) != REVFT_OK ) return 1;
  if ( revft_circuit_measure( c, &m ) != REVFT_OK ) return 1;
  revft_circuit_free( c );
  if ( m.gates != 2 || m.delay != 2 ) return 1;
  printf( "revft %s ok\n", revft_version() );
  return 0;
}
