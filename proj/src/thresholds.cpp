#include "degseq/thresholds.hpp"

#include <algorithm>
#include <numeric>

#include "degseq/criteria.hpp"

namespace degseq {

namespace {

void require_positive(i64 value, const char* name) {
    if (value < 1) fail(Errc::domain_error, std::string(name) + " must be a positive integer");
    if (value > kMaxValue) fail(Errc::limit_exceeded, std::string(name) + " exceeds the cap");
}

void validate_two_element(i64 a, i64 b, i64 n, i64 s) {
    require_positive(a, "a");
    require_positive(b, "b");
    require_positive(n, "n");
    require_positive(s, "s");
    if (b >= a) fail(Errc::domain_error, "two-element form requires b < a");
    if (a > n) fail(Errc::domain_error, "two-element form requires a <= n");
    if (s > n) fail(Errc::domain_error, "two-element form requires s <= n");
}

// Multiplicities of (a^s, b^{n-s}).
i64 two_element_count(i64 a, i64 b, i64 n, i64 s, i64 value) {
    i64 c = 0;
    if (value == a) c += s;
    if (value == b) c += n - s;
    return c;
}

}  // namespace

Triple::Triple(i64 a_, i64 b_, i64 n_) : a(a_), b(b_), n(n_) {
    require_positive(a, "a");
    require_positive(b, "b");
    require_positive(n, "n");
    if (b > a) fail(Errc::domain_error, "triple requires b <= a");
    if (n > kMaxLength) fail(Errc::limit_exceeded, "n exceeds the length cap");
}

Triple triple_of(const DegreeSequence& d) { return Triple(d.max_value(), d.min_value(), d.n()); }

Rational::Rational(i64 num, i64 den) : num_(num), den_(den) {
    if (num_ < 1 || den_ < 1) fail(Errc::domain_error, "rational must be positive");
    if (num_ > kMaxValue || den_ > kMaxValue)
        fail(Errc::limit_exceeded, "rational component exceeds the cap");
    const i64 g = std::gcd(num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    auto to_int = [](std::string_view part) -> i64 {
        if (part.empty()) fail(Errc::syntax_error, "empty rational component");
        i64 value = 0;
        for (const char c : part) {
            if (c < '0' || c > '9') fail(Errc::syntax_error, "rational must be P/Q with integer P, Q");
            value = value * 10 + (c - '0');
            if (value > kMaxValue) fail(Errc::limit_exceeded, "rational component exceeds the cap");
        }
        return value;
    };
    if (slash == std::string_view::npos) return Rational(to_int(text), 1);
    return Rational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

bool abk_x(const Triple& t, const Rational& x) {
    if (!x.at_least_one()) fail(Errc::x_less_than_one, "x = " + x.str() + " is below 1");
    const i64 p = x.num(), q = x.den();
    const i64 pq = p + q;
    return t.a * q <= p * t.b && t.a * pq * pq <= 4 * p * q * t.n;
}

bool abk_simple(const Triple& t) {
    const i64 ab = t.a + t.b;
    return 4 * t.n * t.b >= ab * ab;
}

bool sharp_bipartite(const Triple& t) {
    const i64 ab = t.a + t.b;
    if ((t.a - t.b) % 2 == 0) return 4 * t.n * t.b >= ab * ab;
    return 4 * t.n * t.b >= ab * ab - 1;  // nb >= floor((a+b)^2 / 4)
}

bool sharp_graphic(const Triple& t) {
    const i64 ab1 = t.a + t.b + 1;
    i64 threshold = (ab1 * ab1) / 4;
    if (t.b % 2 == 1 || (t.a + t.b) % 4 == 1) threshold -= 1;
    return t.n * t.b >= threshold;
}

bool two_element_is_bipartite(i64 a, i64 b, i64 n, i64 s) {
    validate_two_element(a, b, n, s);
    return s * s - (a + b) * s + n * b >= 0;
}

TwoElementForms two_element_forms(i64 a, i64 b, i64 n, i64 s) {
    validate_two_element(a, b, n, s);
    TwoElementForms f;

    // sum_{j<s} (s-j)*n_j: only values below s contribute.
    i64 below = 0;
    for (const i64 value : {b, a})
        if (value < s) below += (s - value) * two_element_count(a, b, n, s, value);

    f.ineq1_lhs = s * a + below;
    f.ineq1_rhs = s * n;

    // sum_{j<n} (n-j)*n_j evaluated literally.
    i64 tail = 0;
    for (const i64 value : {b, a})
        if (value < n) tail += (n - value) * two_element_count(a, b, n, s, value);
    f.ineq2_lhs = s * a + (n - s) * b + tail;
    f.ineq2_rhs = n * n;

    f.ineqf_lhs = below;
    f.ineqf_rhs = s * (n - a);
    return f;
}

DegreeSequence counterexample(const Triple& t) {
    if (t.b >= t.a) fail(Errc::domain_error, "counterexample requires b < a");
    if (t.a > t.n) fail(Errc::domain_error, "counterexample requires a <= n");
    if (sharp_bipartite(t))
        fail(Errc::not_applicable, "threshold holds; every such sequence is bipartite graphic");

    const i64 s = ((t.a + t.b) % 2 == 0) ? (t.a + t.b) / 2 : (t.a + t.b + 1) / 2;
    std::vector<i64> values(static_cast<std::size_t>(t.n), t.b);
    std::fill_n(values.begin(), static_cast<std::size_t>(s), t.a);
    return DegreeSequence::from_values(std::move(values));
}

BoundCheck strong_index_bound(const DegreeSequence& d, i64 k) {
    const i64 a = d.max_value(), b = d.min_value(), n = d.n();
    if (a > n) fail(Errc::domain_error, "bound requires max element <= length");
    if (k < 1 || k > n || d.values()[static_cast<std::size_t>(k - 1)] < k)
        fail(Errc::domain_error, "k = " + std::to_string(k) + " is not a strong index");
    if (k <= b) fail(Errc::domain_error, "bound requires k > min element");

    const MultiplicityTable mult(d);
    i64 lhs = 0;
    for (i64 i = 1; i <= k; ++i) {
        lhs += d.values()[static_cast<std::size_t>(i - 1)];
        lhs += i * mult.count(k - i);
    }

    i64 K = 0;
    while (K < n && d.values()[static_cast<std::size_t>(K)] >= K + 1) ++K;
    return {lhs, n * (k - b) + K * (a + b) - K * K};
}

const char* predicate_name(Predicate p) {
    switch (p) {
        case Predicate::abk: return "abk";
        case Predicate::abk_simple: return "abk-simple";
        case Predicate::sharp_bipartite: return "sharp-bipartite";
        case Predicate::sharp_graphic: return "sharp-graphic";
    }
    return "unknown";
}

ThresholdReport evaluate_threshold(Predicate p, const Triple& t,
                                   const std::optional<Rational>& x) {
    ThresholdReport r;
    r.predicate = p;
    r.triple = t;
    const i64 ab = t.a + t.b;
    switch (p) {
        case Predicate::abk: {
            if (!x) fail(Errc::domain_error, "abk requires the parameter x");
            if (!x->at_least_one()) fail(Errc::x_less_than_one, "x = " + x->str() + " is below 1");
            const i64 pq = x->num() + x->den();
            const i64 bound1 = (x->num() * t.b) / x->den();
            const i64 bound2 = (4 * x->num() * x->den() * t.n) / (pq * pq);
            r.threshold = std::min(bound1, bound2);
            r.lhs = t.a;
            r.holds = abk_x(t, *x);
            break;
        }
        case Predicate::abk_simple:
            r.threshold = (ab * ab + 3) / 4;  // ceil((a+b)^2 / 4)
            r.lhs = t.n * t.b;
            r.holds = abk_simple(t);
            break;
        case Predicate::sharp_bipartite:
            // floor((a+b)^2 / 4); exact when the parities agree since (a+b)^2
            // is then divisible by 4.
            r.threshold = (ab * ab) / 4;
            r.lhs = t.n * t.b;
            r.holds = sharp_bipartite(t);
            break;
        case Predicate::sharp_graphic: {
            const i64 ab1 = t.a + t.b + 1;
            i64 threshold = (ab1 * ab1) / 4;
            if (t.b % 2 == 1 || (t.a + t.b) % 4 == 1) threshold -= 1;
            r.threshold = threshold;
            r.lhs = t.n * t.b;
            r.holds = sharp_graphic(t);
            break;
        }
    }
    return r;
}

}  // namespace degseq
