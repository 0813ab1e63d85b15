#include "degseq/criteria.hpp"

#include <algorithm>
#include <cstdlib>

namespace degseq {

namespace {

// Incremental sweep of slack(k) = k*n - sum_{i<=k} d_i - sum_{j<k} (k-j)*n_j.
// Calls visit(k, slack) for k = 1..k_limit until it returns false.
template <typename Visit>
void scan_slack(const DegreeSequence& d, i64 k_limit, Visit&& visit) {
    const auto& v = d.values();
    const MultiplicityTable mult(d);
    const i64 n = d.n();
    i64 prefix = 0, c = 0, weighted = 0;
    for (i64 k = 1; k <= k_limit; ++k) {
        const i64 cnt = mult.count(k - 1);
        c += cnt;
        weighted += (k - 1) * cnt;
        prefix += v[static_cast<std::size_t>(k - 1)];
        const i64 slack = k * n - prefix - (k * c - weighted);
        if (!visit(k, slack)) return;
    }
}

i64 largest_strong_index(const DegreeSequence& d) {
    const auto& v = d.values();
    i64 K = 0;
    while (K < d.n() && v[static_cast<std::size_t>(K)] >= K + 1) ++K;
    return K;
}

CheckReport slack_report(const DegreeSequence& d, const char* criterion, i64 k_limit) {
    CheckReport report;
    report.criterion = criterion;
    report.slack.reserve(static_cast<std::size_t>(k_limit));
    scan_slack(d, k_limit, [&](i64 k, i64 slack) {
        report.slack.emplace_back(k, slack);
        if (slack < 0 && !report.witness_index) report.witness_index = k;
        return true;
    });
    report.accepted = !report.witness_index.has_value();
    return report;
}

FastCheck slack_fast(const DegreeSequence& d, i64 k_limit) {
    FastCheck result{true, 0};
    scan_slack(d, k_limit, [&](i64, i64 slack) {
        ++result.inspected;
        if (slack < 0) {
            result.accepted = false;
            return false;
        }
        return true;
    });
    return result;
}

}  // namespace

CheckReport check_full(const DegreeSequence& d) { return slack_report(d, "full", d.n()); }

FastCheck check_full_fast(const DegreeSequence& d) { return slack_fast(d, d.n()); }

CheckReport check_strong(const DegreeSequence& d) {
    return slack_report(d, "strong", largest_strong_index(d));
}

FastCheck check_strong_fast(const DegreeSequence& d) {
    return slack_fast(d, largest_strong_index(d));
}

CheckReport gale_ryser_pair(const DegreeSequence& rows, const DegreeSequence& cols) {
    CheckReport report;
    report.criterion = "gale-ryser";

    if (rows.sum() != cols.sum()) {
        report.witness_index = 0;
        report.slack.emplace_back(0, -std::abs(rows.sum() - cols.sum()));
    }

    // Counting sort of the column sums: cnt_le[v] and sum_le[v] make
    // sum_j min(cols_j, k) an O(1) lookup per k.
    const i64 a2 = cols.max_value();
    const i64 n2 = cols.n();
    std::vector<i64> cnt_le(static_cast<std::size_t>(a2) + 1, 0);
    std::vector<i64> sum_le(static_cast<std::size_t>(a2) + 1, 0);
    for (const i64 v : cols.values()) ++cnt_le[static_cast<std::size_t>(v)];
    for (i64 v = 1; v <= a2; ++v) {
        sum_le[static_cast<std::size_t>(v)] =
            sum_le[static_cast<std::size_t>(v - 1)] + v * cnt_le[static_cast<std::size_t>(v)];
        cnt_le[static_cast<std::size_t>(v)] += cnt_le[static_cast<std::size_t>(v - 1)];
    }

    i64 prefix = 0;
    const auto& rv = rows.values();
    for (i64 k = 1; k <= rows.n(); ++k) {
        prefix += rv[static_cast<std::size_t>(k - 1)];
        const i64 capped = k >= a2 ? cols.sum()
                                   : sum_le[static_cast<std::size_t>(k)] +
                                         k * (n2 - cnt_le[static_cast<std::size_t>(k)]);
        const i64 slack = capped - prefix;
        report.slack.emplace_back(k, slack);
        if (slack < 0 && !report.witness_index) report.witness_index = k;
    }
    report.accepted = !report.witness_index.has_value();
    return report;
}

CheckReport erdos_gallai(const DegreeSequence& d) {
    CheckReport report;
    report.criterion = "erdos-gallai";

    if (d.sum() % 2 != 0) {
        report.witness_index = 0;
        report.slack.emplace_back(0, -1);
    }

    const auto& v = d.values();
    const i64 n = d.n();
    std::vector<i64> prefix(static_cast<std::size_t>(n) + 1, 0);
    for (i64 i = 0; i < n; ++i)
        prefix[static_cast<std::size_t>(i + 1)] =
            prefix[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i)];

    i64 q = n;  // #{p : d_p >= k}, maintained as k grows
    for (i64 k = 1; k <= n; ++k) {
        while (q > 0 && v[static_cast<std::size_t>(q - 1)] < k) --q;
        const i64 high = std::max<i64>(0, q - k);  // tail positions with d_i >= k
        const i64 cut = std::max(k, q);
        const i64 rest = prefix[static_cast<std::size_t>(n)] - prefix[static_cast<std::size_t>(cut)];
        const i64 rhs = k * (k - 1) + k * high + rest;
        const i64 slack = rhs - prefix[static_cast<std::size_t>(k)];
        report.slack.emplace_back(k, slack);
        if (slack < 0 && !report.witness_index) report.witness_index = k;
    }
    report.accepted = !report.witness_index.has_value();
    return report;
}

}  // namespace degseq
