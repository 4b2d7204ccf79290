#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include "regmat/bitcore.hpp"
#include "regmat/formulas.hpp"
#include "regmat/matrix.hpp"

namespace regmat {

// Depth cap of the pruned search; beyond this the class counts are out of
// desk-scale reach anyway.
inline constexpr int kMaxSearchN = 12;

// Baseline enumeration refuses runs predicted to exceed this many visits
// unless forced.
inline constexpr std::uint64_t kBaselineVisitBudget = 1'000'000'000;

struct EnumerationReport {
    int n = 0;
    int k = 0;
    std::uint64_t mu = 0;              // canonical elements found
    std::uint64_t tuples_visited = 0;  // candidate (partial) tuples examined
    std::string method;                // "baseline" or "pruned"
    double elapsed_seconds = 0.0;
};

// Raised when a baseline run would blow the visit budget and force is off.
struct budget_exceeded : std::runtime_error {
    BigCount predicted;
    explicit budget_exceeded(BigCount predicted_visits);
};

// Visits every nondecreasing n-tuple drawn from pool.masks, in
// lexicographic order on pool indices; returns the visit count, which is
// C(c+n-1, n) for pool size c.
std::uint64_t multiset_tuples(const MaskPool& pool, int n,
                              const std::function<void(std::span<const BitMask>)>& visit);

// Reference path: full multiset enumeration plus the canonical check per
// tuple. Refuses predicted visits above kBaselineVisitBudget unless forced.
EnumerationReport count_canonical(int n, int k, bool force = false);

// Individual pruning rules can be switched off to test their soundness;
// the leaf check keeps the result correct either way.
struct PruneOptions {
    bool column_overflow = true;  // a partial column sum exceeds k
    bool column_deficit = true;   // a column cannot reach k in the rows left
    bool prefix_order = true;     // column prefixes already out of order
};

// Depth-first search over rows with nondecreasing pool indices. With jobs
// > 1 the subtrees below depth 2 are processed by a worker pool; mu and
// tuples_visited are sums and do not depend on the worker count.
EnumerationReport count_canonical_pruned(int n, int k, int jobs = 1,
                                         const PruneOptions& prunes = {});

// Emits every canonical representative in lexicographic order; returns
// mu(n,k). Always sequential.
std::uint64_t stream_representatives(int n, int k,
                                     const std::function<void(const RowTuple&)>& sink);

// Early-stop variant: the sink returns false to stop the search. Returns
// the number of tuples emitted.
std::uint64_t stream_representatives_until(int n, int k,
                                           const std::function<bool(const RowTuple&)>& sink);

}  // namespace regmat
