#pragma once

#include <functional>
#include <random>
#include <vector>

#include "degseq/error.hpp"
#include "degseq/oracle.hpp"
#include "degseq/seqcore.hpp"

namespace degseq::testutil {

/// Runs `f` and reports the error code it throws, or nullopt if it returns.
template <typename F>
std::optional<Errc> thrown_code(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

/// Uniform values in [1, max_value], canonicalized. The mt19937_64 stream is
/// pinned by the standard, so fixtures are reproducible across platforms.
inline DegreeSequence random_sequence(std::mt19937_64& rng, i64 n, i64 max_value) {
    std::vector<i64> values(static_cast<std::size_t>(n));
    for (auto& v : values)
        v = 1 + static_cast<i64>(rng() % static_cast<std::uint64_t>(max_value));
    return DegreeSequence::from_values(std::move(values));
}

/// Every canonical sequence with length <= max_len and values <= max_value.
inline void for_each_corpus_sequence(i64 max_len, i64 max_value,
                                     const std::function<void(const DegreeSequence&)>& visit) {
    for_each_canonical_sequence(max_len, max_value, [&](const std::vector<i64>& values) {
        visit(DegreeSequence::from_values(values));
    });
}

}  // namespace degseq::testutil
