#pragma once

#include "mtc/integrator.hpp"

#include <string>
#include <vector>

// `key = value` run-configuration documents ('#' starts a comment).
// Recognized keys:
//   example                       1..6 (loads that experiment's defaults)
//   equation.alpha/beta/gamma/delta
//   grid.p  grid.ell
//   stepper.tau/T/fp_tol/fp_max_iters/snapshot_stride
//   output.refine
//   travelwave.c/sigma/stages/newton_max_iters
//   initial.kind                  lorentzian_even | lorentzian_odd | soliton | sech2
//   initial.r/a/x0/c              comma-separated lists (Lorentzian bumps)
//   initial.v/phase               comma-separated lists (soliton speeds/phases)
//   initial.forced                true | false (manufactured source)
// Unknown keys are rejected; error messages carry the key path.

namespace mtc {

struct InitialSpec {
  enum class Kind { None, LorentzianEven, LorentzianOdd, Soliton, Sech2 };
  Kind kind = Kind::None;
  std::vector<double> r, a, x0, c;  // Lorentzian bump parameters
  std::vector<double> v, phase;     // soliton speeds and phases
  bool forced = false;
};

struct RunConfig {
  int example = 0;  // 0 means fully custom
  ModelParams params{1.0, 1.0, 1.0, 1.0};
  int p = 64;
  double ell = 8.0;
  StepperConfig stepper;
  int refine = 4;
  double tw_c = 0.5;
  double tw_sigma = 0.0;
  int tw_stages = 20;
  int tw_newton_max_iters = 60;
  InitialSpec initial;
};

RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace mtc
