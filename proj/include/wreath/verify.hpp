#pragma once
// Full invariant suite for one group context: relations, Jucys-Murphy
// identities, construction-route agreement, spectral equations, resolution
// of identity, branching and regular ranks.  The report order is fixed and
// independent of the worker count, so output bytes are reproducible.

#include "wreath/group.hpp"
#include "wreath/report.hpp"

namespace wreath {

struct VerifyOptions {
  unsigned jobs = 1;
  Int limit = Int(kDefaultSizeLimit);
  // Deliberately corrupt the first idempotent before checking; used as a
  // negative control to prove the suite can fail.
  bool corrupt = false;
};

std::vector<CheckResult> run_verification(const GroupContext& ctx,
                                          const VerifyOptions& options = {});

}  // namespace wreath
