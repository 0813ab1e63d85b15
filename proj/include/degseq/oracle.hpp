#pragma once

#include <functional>
#include <vector>

#include "degseq/seqcore.hpp"
#include "degseq/thresholds.hpp"

namespace degseq {

/// Limits for the exhaustive searches. Exceeding a limit raises
/// budget_exceeded; the oracles never degrade to a guess.
struct OracleBudget {
    enum class Mode { bipartite, simple, loops };

    i64 max_n = 6;
    i64 max_nodes = 100'000'000;
    Mode mode = Mode::bipartite;
};

/// Ground truth by definition: backtracks over 0/1 matrices with row sums d1
/// and column sums d2, filling rows in order and pruning only on remaining
/// column capacity versus remaining rows. Shares no code with the criteria
/// it validates.
bool oracle_bipartite_pair(const DegreeSequence& d1, const DegreeSequence& d2,
                           const OracleBudget& budget = {});

/// Exhaustive search over simple graphs (symmetric 0/1, zero diagonal) with
/// degree sequence d. Allows n up to budget.max_n + 1.
bool oracle_graphic(const DegreeSequence& d, const OracleBudget& budget = {});

/// Exhaustive search over graphs with at most one loop per vertex whose
/// reduced degree sequence (loops counted once) equals d.
bool oracle_loops(const DegreeSequence& d, const OracleBudget& budget = {});

/// All non-increasing sequences of length t.n with maximum exactly t.a and
/// minimum exactly t.b that the full criterion rejects, in lexicographic
/// order. Allows n up to budget.max_n + 2 (the per-sequence check is cheap).
std::vector<DegreeSequence> enumerate_counterexamples(const Triple& t,
                                                      const OracleBudget& budget = {});

/// Composition recursion over non-increasing tuples of `length` values with
/// first element exactly `max_exact` and last exactly `min_exact`, in
/// ascending lexicographic order.
void for_each_sequence(i64 length, i64 max_exact, i64 min_exact,
                       const std::function<void(const std::vector<i64>&)>& visit);

/// All non-increasing positive tuples with length in 1..max_len and values
/// in 1..max_value, by length then ascending lexicographic.
void for_each_canonical_sequence(i64 max_len, i64 max_value,
                                 const std::function<void(const std::vector<i64>&)>& visit);

}  // namespace degseq
