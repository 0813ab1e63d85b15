#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "degseq/seqcore.hpp"

namespace degseq {

/// Dense 0/1 matrix encoding a bipartite graph: rows are one part, columns
/// the other. Row and column sums are maintained on every write.
class BiadjacencyMatrix {
public:
    BiadjacencyMatrix(i64 rows, i64 cols);

    i64 rows() const noexcept { return rows_; }
    i64 cols() const noexcept { return cols_; }
    bool at(i64 r, i64 c) const;
    void set(i64 r, i64 c, bool value);

    const std::vector<i64>& row_sums() const noexcept { return row_sums_; }
    const std::vector<i64>& col_sums() const noexcept { return col_sums_; }

    bool symmetric() const;

    /// One row per line, '0'/'1' characters.
    std::string to_text() const;

    bool operator==(const BiadjacencyMatrix& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
    }

private:
    i64 rows_;
    i64 cols_;
    std::vector<std::uint8_t> bits_;
    std::vector<i64> row_sums_;
    std::vector<i64> col_sums_;
};

/// Simple undirected graph on vertices 0..n-1; edges are unordered distinct
/// pairs stored with u < v, sorted.
struct SimpleGraph {
    i64 n = 0;
    std::vector<std::pair<i64, i64>> edges;

    std::vector<i64> degrees() const;
};

/// Undirected graph without multiple edges and with at most one loop per
/// vertex. The reduced degree of a vertex counts incident edges plus one for
/// a loop (not two).
struct LoopGraph {
    i64 n = 0;
    std::vector<std::pair<i64, i64>> edges;
    std::vector<i64> loops;  // ascending, distinct

    std::vector<i64> reduced_degrees() const;

    bool operator==(const LoopGraph& other) const noexcept {
        return n == other.n && edges == other.edges && loops == other.loops;
    }
};

/// Greedy construction of a 0/1 matrix with row sums d1 and column sums d2
/// (rows placed largest-first into the columns with most remaining capacity,
/// ties to the lowest column index). Deterministic. Throws not_realizable
/// when gale_ryser_pair rejects the pair.
BiadjacencyMatrix realize_pair(const DegreeSequence& d1, const DegreeSequence& d2);

/// Havel-Hakimi realization of a canonical sequence as a simple graph on
/// vertices 0..n-1 (vertex i gets degree d_i). Throws not_realizable when
/// erdos_gallai rejects.
SimpleGraph realize_graphic(const DegreeSequence& d);

/// Position-wise variant: vertex i gets degree targets[i] exactly, for an
/// arbitrary (not necessarily sorted) non-negative target vector.
SimpleGraph realize_graphic_labeled(std::span<const i64> targets);

/// True when realize_via_loops accepts d: the sharp_bipartite threshold
/// holds for its triple and d has at least 3 distinct values.
bool loops_applicable(const DegreeSequence& d);

struct LoopsRealization {
    LoopGraph loop_graph;
    BiadjacencyMatrix matrix;
    i64 s_used = 0;  // number of loops added
};

/// Realizes d through a graph with loops: with s = multiplicity of the
/// maximum element, reduce the first s values by 1 (first s+1 when that
/// leaves an odd sum), realize the reduced targets as a simple graph, then
/// add a loop at each reduced position. The loop graph has reduced degrees
/// exactly d and converts to a symmetric biadjacency matrix with row and
/// column sums d. Throws precondition_failed unless loops_applicable(d);
/// a non-graphic reduced sequence would be a bug and raises internal_error.
LoopsRealization realize_via_loops(const DegreeSequence& d);

/// M[i][j] = 1 iff {i,j} is an edge or i == j carries a loop. The result is
/// symmetric with row sums equal to the reduced degrees.
BiadjacencyMatrix loops_to_biadjacency(const LoopGraph& g);

/// Inverse reading: diagonal entries become loops, off-diagonal symmetric
/// entries become edges. Requires a square symmetric matrix.
LoopGraph biadjacency_to_loops(const BiadjacencyMatrix& m);

enum class RealizeMethod { automatic, gale_ryser, loops };

struct Realization {
    BiadjacencyMatrix matrix;
    std::string method;  // "gale-ryser" or "loops"
    std::optional<LoopGraph> loop_graph;
    std::optional<i64> s_used;
};

/// Public entry point. `automatic` runs the loops pipeline when applicable
/// and otherwise falls back to the Gale-Ryser greedy on (d, d); the record
/// says which path produced the matrix.
Realization realize(const DegreeSequence& d, RealizeMethod method = RealizeMethod::automatic);

}  // namespace degseq
