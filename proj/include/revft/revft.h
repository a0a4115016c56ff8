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

/* C interface to the revft reversible-logic toolkit.
 *
 * Every function returns a revft_status. On failure a message is available
 * from revft_last_error() on the calling thread until the next call. Strings
 * handed out through char** parameters are owned by the caller and must be
 * released with revft_string_free(). Handles are released with their
 * matching *_free function; passing NULL to a *_free function is a no-op.
 */
#ifndef REVFT_H
#define REVFT_H

#include <stddef.h>
#include <stdint.h>

#if defined( REVFT_BUILDING_LIBRARY )
#define REVFT_API __attribute__( ( visibility( "default" ) ) )
#else
#define REVFT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum revft_status
{
  REVFT_OK = 0,
  REVFT_ERR_INVALID_ARGUMENT = 1,
  REVFT_ERR_UNKNOWN_NAME = 2,
  REVFT_ERR_NOT_REVERSIBLE = 3,
  REVFT_ERR_INVALID_CIRCUIT = 4,
  REVFT_ERR_PARSE = 5,
  REVFT_ERR_TOO_LARGE = 6,
  REVFT_ERR_INTERNAL = 7
} revft_status;

typedef enum revft_format
{
  REVFT_FORMAT_TEXT = 0,
  REVFT_FORMAT_TSV = 1,
  REVFT_FORMAT_CSV = 2
} revft_format;

typedef enum revft_comparison
{
  REVFT_COMPARE_FULL_ADDER = 0,
  REVFT_COMPARE_RIPPLE_CARRY = 1,
  REVFT_COMPARE_TOFFOLI = 2
} revft_comparison;

/* fault model bit mask */
enum
{
  REVFT_FAULT_BITFLIP = 1u,
  REVFT_FAULT_STUCK_AT_0 = 2u,
  REVFT_FAULT_STUCK_AT_1 = 4u
};

typedef struct revft_circuit revft_circuit;
typedef struct revft_truth_spec revft_truth_spec;

typedef struct revft_gate_info
{
  unsigned arity;
  int reversible;
  int parity_preserving;
  uint64_t alpha, beta, delta;
} revft_gate_info;

typedef struct revft_check_result
{
  int valid;
  int reversible;
  int parity_preserving;
} revft_check_result;

typedef struct revft_metrics
{
  size_t gates;
  size_t garbage;
  size_t constants;
  size_t delay;
  uint64_t alpha, beta, delta;
} revft_metrics;

typedef struct revft_campaign_options
{
  unsigned models;      /* REVFT_FAULT_* mask; 0 runs nothing */
  int sample;           /* 0: all vectors, 1: sample_size vectors drawn with seed */
  size_t sample_size;
  uint64_t seed;
  int primary_observer; /* 0: parity over all lines, 1: primary outputs only */
} revft_campaign_options;

typedef struct revft_campaign_summary
{
  size_t sites;
  size_t runs;
  size_t bitflip_total;
  size_t bitflip_detected;
  size_t stuckat_total;
  size_t stuckat_activated;
  size_t stuckat_detected;
  size_t corrupted;
  size_t undetected;
} revft_campaign_summary;

REVFT_API const char* revft_version( void );
REVFT_API const char* revft_last_error( void );
/* 1-based line of the last parse error, 0 if the last error was not a parse error */
REVFT_API size_t revft_last_error_line( void );
REVFT_API void revft_string_free( char* s );

/* gate catalog */
REVFT_API revft_status revft_gate_names( char** out );
REVFT_API revft_status revft_gate_info_get( const char* name, revft_gate_info* out );
REVFT_API revft_status revft_gate_truth_table( const char* name, revft_format format, char** out );

/* circuits */
REVFT_API revft_status revft_circuit_parse( const char* text, size_t length, revft_circuit** out, char** warnings );
REVFT_API void revft_circuit_free( revft_circuit* circuit );
REVFT_API revft_status revft_circuit_serialize( const revft_circuit* circuit, char** out );
REVFT_API revft_status revft_circuit_check( const revft_circuit* circuit, revft_check_result* result, char** details );
REVFT_API revft_status revft_circuit_truth_table( const revft_circuit* circuit, revft_format format, char** out );
REVFT_API revft_status revft_circuit_simulate( const revft_circuit* circuit, const char* bits, char** trace );
REVFT_API revft_status revft_circuit_measure( const revft_circuit* circuit, revft_metrics* out );

/* builders */
REVFT_API revft_status revft_build_full_adder( revft_circuit** out );
REVFT_API revft_status revft_build_ripple_carry_adder( size_t bits, revft_circuit** out );
REVFT_API revft_status revft_build_toffoli( revft_circuit** out );
REVFT_API revft_status revft_build_function( const char* name, revft_circuit** out );

/* truth specs: "inputs <n>" then "output <name> <2^n bits>" lines */
REVFT_API revft_status revft_truth_spec_parse( const char* text, size_t length, revft_truth_spec** out );
REVFT_API void revft_truth_spec_free( revft_truth_spec* spec );
/* counterexample and failing_output may be NULL; they are set to NULL when equivalent */
REVFT_API revft_status revft_check_equivalence( const revft_circuit* circuit, const revft_truth_spec* spec,
                                                int* equivalent, char** counterexample, char** failing_output );
REVFT_API revft_status revft_ft_lower_bounds( const revft_truth_spec* spec, size_t* garbage, size_t* constants );

/* fault campaigns; report may be NULL */
REVFT_API revft_status revft_fault_campaign( const revft_circuit* circuit, const revft_campaign_options* options,
                                             revft_campaign_summary* summary, revft_format format, char** report );

/* reports */
REVFT_API revft_status revft_cost_format( uint64_t alpha, uint64_t beta, uint64_t delta, int ascii, char** out );
REVFT_API revft_status revft_comparison_table( revft_comparison kind, size_t bits, revft_format format, int ascii,
                                               char** out );

#ifdef __cplusplus
}
#endif

#endif /* REVFT_H */
