#include "degseq/seqcore.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace degseq {

namespace {

// Numerals are accumulated with headroom above the caps so that oversized
// inputs fail with limit_exceeded instead of silently wrapping.
constexpr i64 kNumeralCap = 1'000'000'000'000;

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && is_space(text[pos])) ++pos;
    }
    bool done() const { return pos == text.size(); }
    char peek() const { return text[pos]; }

    // INT with an optional leading '-' so that negative inputs report
    // non_positive_element rather than a bare syntax error. Leading zeros
    // ("01") are outside the grammar.
    i64 read_int() {
        bool negative = false;
        if (!done() && peek() == '-') {
            negative = true;
            ++pos;
        }
        if (done() || !is_digit(peek()))
            fail(Errc::syntax_error, "expected an integer at offset " + std::to_string(pos));
        const std::size_t start = pos;
        i64 value = 0;
        while (!done() && is_digit(peek())) {
            value = value * 10 + (peek() - '0');
            if (value > kNumeralCap)
                fail(Errc::limit_exceeded, "numeral too large at offset " + std::to_string(start));
            ++pos;
        }
        if (text[start] == '0' && pos - start > 1)
            fail(Errc::syntax_error, "leading zero at offset " + std::to_string(start));
        return negative ? -value : value;
    }
};

}  // namespace

DegreeSequence DegreeSequence::from_values(std::vector<i64> raw, bool allow_zeros) {
    std::vector<std::pair<i64, i64>> tagged;  // (value, input position)
    tagged.reserve(raw.size());
    for (std::size_t idx = 0; idx < raw.size(); ++idx) {
        const i64 v = raw[idx];
        if (v < 0 || (v == 0 && !allow_zeros))
            fail(Errc::non_positive_element,
                 "element " + std::to_string(v) + " at position " + std::to_string(idx + 1));
        if (v == 0) continue;
        if (v > kMaxValue)
            fail(Errc::limit_exceeded, "element " + std::to_string(v) + " exceeds the value cap");
        tagged.emplace_back(v, static_cast<i64>(idx));
    }
    if (tagged.empty()) fail(Errc::empty_input, "sequence has no positive elements");
    if (static_cast<i64>(tagged.size()) > kMaxLength)
        fail(Errc::limit_exceeded, "sequence longer than the length cap");

    std::stable_sort(tagged.begin(), tagged.end(),
                     [](const auto& lhs, const auto& rhs) { return lhs.first > rhs.first; });

    DegreeSequence d;
    d.values_.reserve(tagged.size());
    d.original_order_.reserve(tagged.size());
    i64 prev = -1;
    for (const auto& [value, position] : tagged) {
        d.values_.push_back(value);
        d.original_order_.push_back(position);
        d.sum_ += value;
        if (value != prev) {
            ++d.distinct_;
            prev = value;
        }
    }
    return d;
}

DegreeSequence parse_sequence(std::string_view text, bool allow_zeros) {
    Cursor cur{text};
    cur.skip_ws();
    if (cur.done()) fail(Errc::empty_input, "empty sequence text");

    std::vector<i64> raw;
    for (;;) {
        cur.skip_ws();
        const i64 value = cur.read_int();
        i64 repeat = 1;
        cur.skip_ws();
        if (!cur.done() && cur.peek() == '^') {
            ++cur.pos;
            cur.skip_ws();
            repeat = cur.read_int();
            if (repeat <= 0)
                fail(Errc::non_positive_element, "exponent " + std::to_string(repeat));
        }
        if (value < 0 || (value == 0 && !allow_zeros))
            fail(Errc::non_positive_element, "element " + std::to_string(value));
        if (value > kMaxValue)
            fail(Errc::limit_exceeded, "element " + std::to_string(value) + " exceeds the value cap");
        if (static_cast<i64>(raw.size()) + repeat > kMaxLength)
            fail(Errc::limit_exceeded, "sequence longer than the length cap");
        raw.insert(raw.end(), static_cast<std::size_t>(repeat), value);
        cur.skip_ws();
        if (cur.done()) break;
        if (cur.peek() != ',')
            fail(Errc::syntax_error,
                 std::string("unexpected character '") + cur.peek() + "' at offset " +
                     std::to_string(cur.pos));
        ++cur.pos;
    }
    return DegreeSequence::from_values(std::move(raw), allow_zeros);
}

std::string DegreeSequence::render() const {
    std::string out;
    std::size_t i = 0;
    while (i < values_.size()) {
        std::size_t j = i;
        while (j < values_.size() && values_[j] == values_[i]) ++j;
        if (!out.empty()) out += ',';
        out += std::to_string(values_[i]);
        if (j - i > 1) {
            out += '^';
            out += std::to_string(j - i);
        }
        i = j;
    }
    return out;
}

MultiplicityTable::MultiplicityTable(const DegreeSequence& d) {
    counts_.assign(static_cast<std::size_t>(d.max_value()) + 1, 0);
    for (const i64 v : d.values()) ++counts_[static_cast<std::size_t>(v)];
}

MultiplicityTable multiplicities(const DegreeSequence& d) { return MultiplicityTable(d); }

StrongIndexProfile strong_profile(const DegreeSequence& d) {
    const auto& v = d.values();
    const i64 n = d.n();
    const MultiplicityTable mult(d);

    StrongIndexProfile p;

    // Strong indices form the prefix {1..K} because v is non-increasing.
    i64 K = 0;
    while (K < n && v[static_cast<std::size_t>(K)] >= K + 1) ++K;
    p.largest_strong = K;
    p.strong_indices.resize(static_cast<std::size_t>(K));
    std::iota(p.strong_indices.begin(), p.strong_indices.end(), i64{1});

    // conjugate_counts[k] = #{positions with value >= k+1}; two-pointer over
    // the sorted values handles max_value > n as well.
    p.conjugate_counts.assign(static_cast<std::size_t>(n) + 1, 0);
    i64 q = n;
    for (i64 k = 0; k <= n; ++k) {
        while (q > 0 && v[static_cast<std::size_t>(q - 1)] < k + 1) --q;
        p.conjugate_counts[static_cast<std::size_t>(k)] = q;
    }

    // slack[k] = k*n - sum_{i<=k} d_i - (k*C - J) with C, J running sums
    // of the multiplicities of values below k.
    p.slack.assign(static_cast<std::size_t>(n) + 1, 0);
    i64 prefix = 0, c = 0, weighted = 0;
    for (i64 k = 1; k <= n; ++k) {
        const i64 cnt = mult.count(k - 1);
        c += cnt;
        weighted += (k - 1) * cnt;
        prefix += v[static_cast<std::size_t>(k - 1)];
        p.slack[static_cast<std::size_t>(k)] = k * n - prefix - (k * c - weighted);
    }
    return p;
}

}  // namespace degseq
