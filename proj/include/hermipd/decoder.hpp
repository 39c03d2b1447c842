#pragma once

#include <optional>
#include <span>
#include <string>

#include "hermipd/pade_solver.hpp"

namespace hermipd {

enum class FailureReason {
  none,
  no_solution,
  lambda_zero_only,
  division_failed,
  message_degree_exceeded,
  distance_exceeded,
};

const char* to_string(FailureReason r);

struct DecodeOptions {
  int s = 2;
  int ell = 2;
  std::optional<int> tau;  // defaults to radius_practical(q, m, s, ell)
  ModulusMode mode = kDefaultModulusMode;
  ExecMode exec = ExecMode::serial;
};

struct DecodeOutcome {
  bool success = false;
  FailureReason reason = FailureReason::none;
  std::vector<Fq> codeword;
  std::vector<Fq> message;
  int errors_corrected = 0;
  // diagnostics
  int nullspace_dim = 0;
  int lambda0_degh = kNegInf;
  int tau_used = 0;
};

/// Full decoding pipeline: interpolate the received word, assemble and solve
/// the linearized key-equation system, recover the message polynomial from
/// (lambda_0, psi_1) by division modulo G (psi_1 is determined only up to
/// multiples of the modulus, and G vanishes at every evaluation point), then
/// re-encode and verify the distance.  Failures are reported as outcomes,
/// never as errors.
DecodeOutcome decode(const HermitianCode& code, std::span<const Fq> received,
                     const DecodeOptions& opts);

// Retry wrapper: on failure, re-run with smaller tau down to
// ceil((d*-1)/2); returns the first success, or the outcome of the initial
// attempt if every tau fails.
DecodeOutcome decode_with_sweep(const HermitianCode& code,
                                std::span<const Fq> received,
                                DecodeOptions opts);

}  // namespace hermipd
