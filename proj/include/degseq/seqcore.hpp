#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "degseq/error.hpp"

namespace degseq {

using i64 = std::int64_t;

/// Hard input caps. With both in force every quantity the library computes
/// (k*n, prefix sums, squared thresholds) fits comfortably in a signed
/// 64-bit integer, so all arithmetic is exact.
inline constexpr i64 kMaxLength = 1'000'000;
inline constexpr i64 kMaxValue = 1'000'000;

/// A finite sequence of positive integers held in canonical (non-increasing)
/// order. `original_order()[i]` is the position the i-th canonical element
/// occupied in the raw input, so permuting a realization by `original_order`
/// restores the caller's labelling.
class DegreeSequence {
public:
    /// Builds the canonical form of `raw`. With `allow_zeros`, zero entries
    /// are dropped before sorting (their input positions are skipped by
    /// `original_order`); otherwise any zero is rejected.
    static DegreeSequence from_values(std::vector<i64> raw, bool allow_zeros = false);

    const std::vector<i64>& values() const noexcept { return values_; }
    const std::vector<i64>& original_order() const noexcept { return original_order_; }

    i64 n() const noexcept { return static_cast<i64>(values_.size()); }
    i64 max_value() const noexcept { return values_.front(); }
    i64 min_value() const noexcept { return values_.back(); }
    i64 sum() const noexcept { return sum_; }
    i64 distinct_count() const noexcept { return distinct_; }

    /// Power notation with maximal compression, e.g. (4,4,4,2) -> "4^3,2".
    std::string render() const;

    bool operator==(const DegreeSequence& other) const noexcept {
        return values_ == other.values_;
    }

private:
    DegreeSequence() = default;

    std::vector<i64> values_;
    std::vector<i64> original_order_;
    i64 sum_ = 0;
    i64 distinct_ = 0;
};

/// Parses the grammar  seq := term ("," term)* ; term := INT ("^" INT)?
/// with INT = [1-9][0-9]* and whitespace around tokens ignored. "5^3,4^2"
/// expands to (5,5,5,4,4) before canonicalization. Exponents must be >= 1;
/// values must be >= 1 unless `allow_zeros` is set, in which case zero
/// values are parsed and stripped.
DegreeSequence parse_sequence(std::string_view text, bool allow_zeros = false);

/// Dense table of value multiplicities: count(j) = #{i : d_i = j} for
/// 0 <= j <= max_value; count(j) = 0 outside that range.
class MultiplicityTable {
public:
    explicit MultiplicityTable(const DegreeSequence& d);

    i64 count(i64 value) const noexcept {
        if (value < 0 || value >= static_cast<i64>(counts_.size())) return 0;
        return counts_[static_cast<std::size_t>(value)];
    }

    i64 max_value() const noexcept { return static_cast<i64>(counts_.size()) - 1; }
    const std::vector<i64>& counts() const noexcept { return counts_; }

private:
    std::vector<i64> counts_;
};

MultiplicityTable multiplicities(const DegreeSequence& d);

/// Strong-index bookkeeping for a canonical sequence d of length n.
///
///   strong_indices   = all k with d_k >= k; always the prefix {1..K}.
///   largest_strong   = K (0 if none).
///   conjugate_counts = c[k] = #{p : d_p >= k+1} for k in 0..n (c[k] = 0
///                      when no element exceeds k).
///   slack            = F[k] = k*n - sum_{i<=k} d_i - sum_{j<k} (k-j)*n_j
///                      for k in 1..n (F[0] = 0); the sequence is bipartite
///                      graphic iff every F[k] is non-negative.
struct StrongIndexProfile {
    std::vector<i64> strong_indices;
    i64 largest_strong = 0;
    std::vector<i64> conjugate_counts;
    std::vector<i64> slack;
};

StrongIndexProfile strong_profile(const DegreeSequence& d);

}  // namespace degseq
