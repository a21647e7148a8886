#pragma once

#include <cstdint>
#include <vector>

#include "strongdom/bounds.hpp"

namespace strongdom {

// Randomized bound audits: draw seeded fusion instances, evaluate the bound
// checkers, and count violations. A violation would falsify the audited
// inequality, so callers treat any nonzero count as a hard failure.
struct AuditOptions {
    int trials = 200;
    int max_n = 9; // per-part vertex count cap
    std::uint64_t seed = 42;
};

struct AuditOutcome {
    std::vector<BoundReport> rows; // in trial order
    int violations = 0;
};

AuditOutcome audit_hajos_bounds(const AuditOptions& options);
AuditOutcome audit_vsum_bounds(const AuditOptions& options);

} // namespace strongdom
