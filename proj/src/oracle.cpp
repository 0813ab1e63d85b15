#include "degseq/oracle.hpp"

#include <algorithm>
#include <functional>

#include "degseq/criteria.hpp"

namespace degseq {

namespace {

struct NodeCounter {
    i64 used = 0;
    i64 cap = 0;

    void tick() {
        if (++used > cap) fail(Errc::budget_exceeded, "oracle search node cap exceeded");
    }
};

}  // namespace

bool oracle_bipartite_pair(const DegreeSequence& d1, const DegreeSequence& d2,
                           const OracleBudget& budget) {
    if (d1.n() > budget.max_n || d2.n() > budget.max_n)
        fail(Errc::budget_exceeded, "sequence longer than the oracle length budget");
    if (d1.sum() != d2.sum()) return false;

    const i64 m = d1.n(), n = d2.n();
    std::vector<i64> cap(d2.values().begin(), d2.values().end());
    NodeCounter nodes{0, budget.max_nodes};

    // Fill rows top-down; within a row choose columns in ascending index
    // order. A partial assignment dies when some column still demands more
    // than the rows left can provide.
    std::function<bool(i64)> fill_row = [&](i64 row) -> bool {
        nodes.tick();
        if (row == m) return true;
        const i64 need = d1.values()[static_cast<std::size_t>(row)];
        if (need > n) return false;
        const i64 rows_after = m - row - 1;

        std::function<bool(i64, i64)> pick = [&](i64 start, i64 still) -> bool {
            nodes.tick();
            if (still == 0) {
                for (const i64 c : cap)
                    if (c > rows_after) return false;
                return fill_row(row + 1);
            }
            if (n - start < still) return false;
            for (i64 col = start; col < n; ++col) {
                if (cap[static_cast<std::size_t>(col)] <= 0) continue;
                --cap[static_cast<std::size_t>(col)];
                if (pick(col + 1, still - 1)) return true;
                ++cap[static_cast<std::size_t>(col)];
            }
            return false;
        };
        return pick(0, need);
    };
    return fill_row(0);
}

bool oracle_graphic(const DegreeSequence& d, const OracleBudget& budget) {
    if (d.n() > budget.max_n + 1)
        fail(Errc::budget_exceeded, "sequence longer than the oracle length budget");
    if (d.sum() % 2 != 0) return false;

    const i64 n = d.n();
    std::vector<i64> rem(d.values().begin(), d.values().end());
    NodeCounter nodes{0, budget.max_nodes};

    // Decide vertex v's edges to later vertices; earlier vertices are final.
    std::function<bool(i64)> place = [&](i64 v) -> bool {
        nodes.tick();
        if (v == n) return true;
        const i64 need = rem[static_cast<std::size_t>(v)];
        if (need < 0) return false;

        std::function<bool(i64, i64)> pick = [&](i64 start, i64 still) -> bool {
            nodes.tick();
            if (still == 0) return place(v + 1);
            if (n - start < still) return false;
            for (i64 w = start; w < n; ++w) {
                if (rem[static_cast<std::size_t>(w)] <= 0) continue;
                --rem[static_cast<std::size_t>(w)];
                if (pick(w + 1, still - 1)) return true;
                ++rem[static_cast<std::size_t>(w)];
            }
            return false;
        };
        return pick(v + 1, need);
    };
    return place(0);
}

bool oracle_loops(const DegreeSequence& d, const OracleBudget& budget) {
    if (d.n() > budget.max_n)
        fail(Errc::budget_exceeded, "sequence longer than the oracle length budget");

    const i64 n = d.n();
    std::vector<i64> rem(d.values().begin(), d.values().end());
    NodeCounter nodes{0, budget.max_nodes};

    // Same vertex-by-vertex search with an optional loop contributing one
    // incidence (loops count once in the reduced degree).
    std::function<bool(i64)> place = [&](i64 v) -> bool {
        nodes.tick();
        if (v == n) return true;

        std::function<bool(i64, i64)> pick = [&](i64 start, i64 still) -> bool {
            nodes.tick();
            if (still == 0) return place(v + 1);
            if (n - start < still) return false;
            for (i64 w = start; w < n; ++w) {
                if (rem[static_cast<std::size_t>(w)] <= 0) continue;
                --rem[static_cast<std::size_t>(w)];
                if (pick(w + 1, still - 1)) return true;
                ++rem[static_cast<std::size_t>(w)];
            }
            return false;
        };

        for (const i64 loop : {0, 1}) {
            const i64 need = rem[static_cast<std::size_t>(v)] - loop;
            if (need < 0) continue;
            if (pick(v + 1, need)) return true;
        }
        return false;
    };
    return place(0);
}

std::vector<DegreeSequence> enumerate_counterexamples(const Triple& t,
                                                      const OracleBudget& budget) {
    if (t.n > budget.max_n + 2)
        fail(Errc::budget_exceeded, "sweep length exceeds the oracle length budget");
    if (t.a > t.n) fail(Errc::domain_error, "sweep requires a <= n");

    NodeCounter nodes{0, budget.max_nodes};
    std::vector<DegreeSequence> out;
    for_each_sequence(t.n, t.a, t.b, [&](const std::vector<i64>& values) {
        nodes.tick();
        auto d = DegreeSequence::from_values(values);
        if (!check_full_fast(d).accepted) out.push_back(std::move(d));
    });
    return out;
}

void for_each_sequence(i64 length, i64 max_exact, i64 min_exact,
                       const std::function<void(const std::vector<i64>&)>& visit) {
    if (length < 1) fail(Errc::domain_error, "length must be positive");
    if (min_exact < 1 || min_exact > max_exact)
        fail(Errc::domain_error, "requires 1 <= min <= max");
    if (length == 1) {
        if (max_exact == min_exact) visit({max_exact});
        return;
    }

    std::vector<i64> buf(static_cast<std::size_t>(length));
    buf.front() = max_exact;
    buf.back() = min_exact;
    std::function<void(i64)> rec = [&](i64 pos) {
        if (pos == length - 1) {
            visit(buf);
            return;
        }
        for (i64 v = min_exact; v <= buf[static_cast<std::size_t>(pos - 1)]; ++v) {
            buf[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(1);
}

void for_each_canonical_sequence(i64 max_len, i64 max_value,
                                 const std::function<void(const std::vector<i64>&)>& visit) {
    if (max_len < 1 || max_value < 1) fail(Errc::domain_error, "bounds must be positive");
    std::vector<i64> buf;
    for (i64 len = 1; len <= max_len; ++len) {
        buf.assign(static_cast<std::size_t>(len), 0);
        std::function<void(i64)> rec = [&](i64 pos) {
            if (pos == len) {
                visit(buf);
                return;
            }
            const i64 hi = pos == 0 ? max_value : buf[static_cast<std::size_t>(pos - 1)];
            for (i64 v = 1; v <= hi; ++v) {
                buf[static_cast<std::size_t>(pos)] = v;
                rec(pos + 1);
            }
        };
        rec(0);
    }
}

}  // namespace degseq
