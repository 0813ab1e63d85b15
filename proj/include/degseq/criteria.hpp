#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "degseq/seqcore.hpp"

namespace degseq {

/// Outcome of a feasibility criterion. `slack` holds (k, rhs - lhs) for
/// every index the criterion examined, ascending in k; a negative entry is
/// a violation and `witness_index` is the smallest violated k. Sum-parity
/// style failures are reported at the synthetic index 0 with slack
/// -|imbalance| so that "rejected iff some slack < 0" holds uniformly.
struct CheckReport {
    std::string criterion;
    bool accepted = false;
    std::optional<i64> witness_index;
    std::vector<std::pair<i64, i64>> slack;

    const char* verdict() const noexcept { return accepted ? "accepted" : "rejected"; }
};

/// Boolean fast path: stops at the first violated index. `inspected` counts
/// the indices evaluated before the decision.
struct FastCheck {
    bool accepted = false;
    i64 inspected = 0;
};

/// Full inequality system: d is bipartite graphic iff
///   sum_{i<=k} d_i + sum_{j<k} (k-j)*n_j <= k*n   for every k in 1..n.
/// Runs in O(n) using running sums of the multiplicity table.
CheckReport check_full(const DegreeSequence& d);
FastCheck check_full_fast(const DegreeSequence& d);

/// Same inequality, evaluated only at strong indices (k with d_k >= k).
/// Agrees with check_full on every input; inspects at most K <= d_1 indices.
CheckReport check_strong(const DegreeSequence& d);
FastCheck check_strong_fast(const DegreeSequence& d);

/// Gale-Ryser test for a pair: a 0/1 matrix with row sums `rows` and column
/// sums `cols` exists iff the sums match and for all k <= len(rows)
///   sum_{i<=k} rows_i <= sum_j min(cols_j, k).
/// A sum mismatch is rejected at witness index 0.
CheckReport gale_ryser_pair(const DegreeSequence& rows, const DegreeSequence& cols);

/// Erdos-Gallai test: d is the degree sequence of a simple graph iff the sum
/// is even and for all k: sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
/// An odd sum is rejected at witness index 0.
CheckReport erdos_gallai(const DegreeSequence& d);

}  // namespace degseq
