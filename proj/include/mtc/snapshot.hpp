#pragma once

#include "mtc/grid.hpp"

#include <string>

// Line-oriented text snapshot of a solver state.  Reals are stored as C
// hexfloats, so a write/read roundtrip is bit-exact.  Format (version 1):
//
//   mtc-snapshot 1
//   p <int>
//   ell <hexfloat>
//   t <hexfloat>
//   params <alpha> <beta> <gamma> <delta>
//   coeffs <count>
//   <one hexfloat per line>
//   end

namespace mtc {

struct Snapshot {
  int p = 0;
  double ell = 0.0;
  double t = 0.0;
  ModelParams params;
  SpectralField state;
};

struct SnapshotError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string snapshot_to_string(const Snapshot& s);
Snapshot snapshot_from_string(const std::string& text);

// Writes to path.tmp, then renames, so readers never observe a partial file.
void write_snapshot(const std::string& path, const Snapshot& s);
Snapshot read_snapshot(const std::string& path);

}  // namespace mtc
