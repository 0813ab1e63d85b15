#include "degseq/realize.hpp"

#include <algorithm>
#include <numeric>

#include "degseq/criteria.hpp"
#include "degseq/thresholds.hpp"

namespace degseq {

BiadjacencyMatrix::BiadjacencyMatrix(i64 rows, i64 cols) : rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) fail(Errc::domain_error, "matrix dimensions must be positive");
    bits_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
    row_sums_.assign(static_cast<std::size_t>(rows), 0);
    col_sums_.assign(static_cast<std::size_t>(cols), 0);
}

bool BiadjacencyMatrix::at(i64 r, i64 c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        fail(Errc::domain_error, "matrix index out of range");
    return bits_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                 static_cast<std::size_t>(c)] != 0;
}

void BiadjacencyMatrix::set(i64 r, i64 c, bool value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        fail(Errc::domain_error, "matrix index out of range");
    auto& cell = bits_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                       static_cast<std::size_t>(c)];
    const i64 delta = static_cast<i64>(value) - static_cast<i64>(cell);
    cell = value ? 1 : 0;
    row_sums_[static_cast<std::size_t>(r)] += delta;
    col_sums_[static_cast<std::size_t>(c)] += delta;
}

bool BiadjacencyMatrix::symmetric() const {
    if (rows_ != cols_) return false;
    for (i64 r = 0; r < rows_; ++r)
        for (i64 c = r + 1; c < cols_; ++c)
            if (at(r, c) != at(c, r)) return false;
    return true;
}

std::string BiadjacencyMatrix::to_text() const {
    std::string out;
    out.reserve(static_cast<std::size_t>(rows_) * (static_cast<std::size_t>(cols_) + 1));
    for (i64 r = 0; r < rows_; ++r) {
        for (i64 c = 0; c < cols_; ++c) out += at(r, c) ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::vector<i64> SimpleGraph::degrees() const {
    std::vector<i64> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    return deg;
}

std::vector<i64> LoopGraph::reduced_degrees() const {
    std::vector<i64> deg(static_cast<std::size_t>(n), 0);
    for (const auto& [u, v] : edges) {
        ++deg[static_cast<std::size_t>(u)];
        ++deg[static_cast<std::size_t>(v)];
    }
    for (const i64 v : loops) ++deg[static_cast<std::size_t>(v)];
    return deg;
}

BiadjacencyMatrix realize_pair(const DegreeSequence& d1, const DegreeSequence& d2) {
    if (!gale_ryser_pair(d1, d2).accepted)
        fail(Errc::not_realizable, "no 0/1 matrix with the requested row and column sums");

    const i64 m = d1.n(), n = d2.n();
    BiadjacencyMatrix matrix(m, n);
    std::vector<i64> cap(d2.values().begin(), d2.values().end());
    std::vector<i64> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), i64{0});

    for (i64 r = 0; r < m; ++r) {
        const i64 need = d1.values()[static_cast<std::size_t>(r)];
        if (need > n) fail(Errc::internal_error, "row demand exceeds column count after acceptance");
        std::sort(order.begin(), order.end(), [&](i64 x, i64 y) {
            const i64 cx = cap[static_cast<std::size_t>(x)], cy = cap[static_cast<std::size_t>(y)];
            return cx != cy ? cx > cy : x < y;
        });
        for (i64 t = 0; t < need; ++t) {
            const i64 c = order[static_cast<std::size_t>(t)];
            if (cap[static_cast<std::size_t>(c)] <= 0)
                fail(Errc::internal_error, "greedy placement ran out of column capacity");
            matrix.set(r, c, true);
            --cap[static_cast<std::size_t>(c)];
        }
    }
    for (const i64 c : cap)
        if (c != 0) fail(Errc::internal_error, "column capacity left over after placement");
    return matrix;
}

SimpleGraph realize_graphic_labeled(std::span<const i64> targets) {
    const i64 n = static_cast<i64>(targets.size());
    if (n < 1) fail(Errc::empty_input, "no target degrees");
    if (n > kMaxLength) fail(Errc::limit_exceeded, "target vector longer than the length cap");

    std::vector<i64> positive;
    for (const i64 t : targets) {
        if (t < 0) fail(Errc::domain_error, "target degrees must be non-negative");
        if (t > kMaxValue) fail(Errc::limit_exceeded, "target degree exceeds the value cap");
        if (t > 0) positive.push_back(t);
    }
    if (!positive.empty()) {
        const auto sorted = DegreeSequence::from_values(positive);
        if (!erdos_gallai(sorted).accepted)
            fail(Errc::not_realizable, "target degrees are not graphic");
    }

    // Havel-Hakimi with position tracking: satisfy the vertex with the
    // largest remaining target by connecting it to the next-largest ones;
    // ties go to the lowest position.
    std::vector<i64> rem(targets.begin(), targets.end());
    std::vector<i64> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), i64{0});

    SimpleGraph g;
    g.n = n;
    for (;;) {
        std::sort(order.begin(), order.end(), [&](i64 x, i64 y) {
            const i64 rx = rem[static_cast<std::size_t>(x)], ry = rem[static_cast<std::size_t>(y)];
            return rx != ry ? rx > ry : x < y;
        });
        const i64 u = order[0];
        const i64 need = rem[static_cast<std::size_t>(u)];
        if (need == 0) break;
        if (need >= n) fail(Errc::internal_error, "remaining degree exceeds available vertices");
        for (i64 t = 1; t <= need; ++t) {
            const i64 v = order[static_cast<std::size_t>(t)];
            if (rem[static_cast<std::size_t>(v)] <= 0)
                fail(Errc::internal_error, "ran out of partners for a graphic target");
            --rem[static_cast<std::size_t>(v)];
            g.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        rem[static_cast<std::size_t>(u)] = 0;
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

SimpleGraph realize_graphic(const DegreeSequence& d) {
    return realize_graphic_labeled(d.values());
}

bool loops_applicable(const DegreeSequence& d) {
    return d.distinct_count() >= 3 && sharp_bipartite(triple_of(d));
}

LoopsRealization realize_via_loops(const DegreeSequence& d) {
    if (d.distinct_count() < 3)
        fail(Errc::precondition_failed, "needs at least 3 distinct element values");
    if (!sharp_bipartite(triple_of(d)))
        fail(Errc::precondition_failed, "threshold condition fails for this triple");

    const auto& v = d.values();
    const i64 n = d.n();

    i64 s = 0;  // multiplicity of the maximum element
    while (s < n && v[static_cast<std::size_t>(s)] == d.max_value()) ++s;

    i64 s_used = s;
    if ((d.sum() - s) % 2 != 0) ++s_used;  // reduce one more position for an even sum
    if (s_used > n) fail(Errc::internal_error, "reduction exceeds the sequence length");

    std::vector<i64> targets(v.begin(), v.end());
    for (i64 i = 0; i < s_used; ++i) --targets[static_cast<std::size_t>(i)];

    SimpleGraph reduced;
    try {
        reduced = realize_graphic_labeled(targets);
    } catch (const Error& e) {
        if (e.code() == Errc::not_realizable)
            fail(Errc::internal_error, "reduced sequence unexpectedly non-graphic");
        throw;
    }

    LoopGraph lg;
    lg.n = n;
    lg.edges = std::move(reduced.edges);
    lg.loops.resize(static_cast<std::size_t>(s_used));
    std::iota(lg.loops.begin(), lg.loops.end(), i64{0});

    BiadjacencyMatrix matrix = loops_to_biadjacency(lg);
    return {std::move(lg), std::move(matrix), s_used};
}

BiadjacencyMatrix loops_to_biadjacency(const LoopGraph& g) {
    BiadjacencyMatrix m(g.n, g.n);
    for (const auto& [u, v] : g.edges) {
        m.set(u, v, true);
        m.set(v, u, true);
    }
    for (const i64 v : g.loops) m.set(v, v, true);
    return m;
}

LoopGraph biadjacency_to_loops(const BiadjacencyMatrix& m) {
    if (m.rows() != m.cols() || !m.symmetric())
        fail(Errc::domain_error, "loop-graph reading requires a square symmetric matrix");
    LoopGraph g;
    g.n = m.rows();
    for (i64 r = 0; r < m.rows(); ++r) {
        if (m.at(r, r)) g.loops.push_back(r);
        for (i64 c = r + 1; c < m.cols(); ++c)
            if (m.at(r, c)) g.edges.emplace_back(r, c);
    }
    return g;
}

Realization realize(const DegreeSequence& d, RealizeMethod method) {
    const bool use_loops = method == RealizeMethod::loops ||
                           (method == RealizeMethod::automatic && loops_applicable(d));
    if (use_loops) {
        LoopsRealization lr = realize_via_loops(d);
        return {std::move(lr.matrix), "loops", std::move(lr.loop_graph), lr.s_used};
    }
    return {realize_pair(d, d), "gale-ryser", std::nullopt, std::nullopt};
}

}  // namespace degseq
