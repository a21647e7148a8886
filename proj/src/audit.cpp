#include "strongdom/audit.hpp"

#include "strongdom/random_graphs.hpp"

namespace strongdom {

namespace {

AuditOutcome run_audit(const AuditOptions& options, bool hajos) {
    Rng rng(options.seed);
    AuditOutcome outcome;
    outcome.rows.reserve(static_cast<std::size_t>(options.trials));
    for (int t = 0; t < options.trials; ++t) {
        BoundReport report =
            hajos ? check_hajos_bounds(random_hajos_spec(rng, 4, options.max_n))
                  : check_vsum_bounds(random_vsum_spec(rng, 2, 3, 2, options.max_n));
        report.instance = "trial " + std::to_string(t) + " " + report.instance;
        if (!report.holds) ++outcome.violations;
        outcome.rows.push_back(std::move(report));
    }
    return outcome;
}

} // namespace

AuditOutcome audit_hajos_bounds(const AuditOptions& options) { return run_audit(options, true); }

AuditOutcome audit_vsum_bounds(const AuditOptions& options) { return run_audit(options, false); }

} // namespace strongdom
