#pragma once

#include <optional>
#include <string>

#include "degseq/seqcore.hpp"

namespace degseq {

/// The (max element, min element, length) statistics of a sequence. All the
/// closed-form threshold predicates depend on a sequence only through its
/// triple.
struct Triple {
    i64 a = 1;  // maximum element
    i64 b = 1;  // minimum element
    i64 n = 1;  // length

    Triple(i64 a_, i64 b_, i64 n_);
};

Triple triple_of(const DegreeSequence& d);

/// Positive rational kept in lowest terms. Exact integer cross-multiplication
/// keeps the threshold predicates correct on boundary cases where floating
/// point would round.
class Rational {
public:
    Rational(i64 num, i64 den);

    /// Accepts "p/q" or a bare integer "p".
    static Rational parse(std::string_view text);

    i64 num() const noexcept { return num_; }
    i64 den() const noexcept { return den_; }
    bool at_least_one() const noexcept { return num_ >= den_; }
    std::string str() const;

private:
    i64 num_;
    i64 den_;
};

/// Parametric sufficient condition: with x = num/den >= 1, holds iff
///   a <= x*b  and  a <= 4*x*n / (x+1)^2
/// evaluated exactly as a*den <= num*b and a*(num+den)^2 <= 4*num*den*n.
/// A sequence whose triple passes for some x >= 1 is bipartite graphic.
bool abk_x(const Triple& t, const Rational& x);

/// Parameter-free form of the same condition: holds iff 4*n*b >= (a+b)^2.
bool abk_simple(const Triple& t);

/// Sharp refinement: holds iff
///   n*b >= (a+b)^2 / 4          when a == b (mod 2),
///   n*b >= floor((a+b)^2 / 4)   otherwise.
/// Every sequence whose triple passes is bipartite graphic, and for every
/// triple with b < a <= n that fails there is a non-bipartite-graphic
/// sequence with those statistics (see counterexample()).
bool sharp_bipartite(const Triple& t);

/// Sharp sufficient condition for plain graphicality (even-sum sequences):
/// holds iff n*b >= T where
///   T = floor((a+b+1)^2 / 4) - 1  if b is odd or a+b == 1 (mod 4),
///   T = floor((a+b+1)^2 / 4)      otherwise.
bool sharp_graphic(const Triple& t);

/// Exact criterion for two-element sequences: (a^s, b^{n-s}) with b < a <= n,
/// 1 <= s <= n is bipartite graphic iff s^2 - (a+b)s + nb >= 0.
bool two_element_is_bipartite(i64 a, i64 b, i64 n, i64 s);

/// Both sides of the two inequality forms the two-element criterion reduces
/// to, evaluated literally on (a^s, b^{n-s}):
///   ineq1:  s*a + sum_{j<s} (s-j)*n_j  <=  s*n
///   ineq2:  s*a + (n-s)*b + sum_{j<n} (n-j)*n_j  <=  n^2   (lhs is always n^2)
///   ineqf:  sum_{j<s} (s-j)*n_j  <=  s*(n-a)      (rewriting of ineq1)
struct TwoElementForms {
    i64 ineq1_lhs = 0, ineq1_rhs = 0;
    i64 ineq2_lhs = 0, ineq2_rhs = 0;
    i64 ineqf_lhs = 0, ineqf_rhs = 0;
};

TwoElementForms two_element_forms(i64 a, i64 b, i64 n, i64 s);

/// Extremal witness for sharpness of sharp_bipartite: for b < a <= n with
/// sharp_bipartite(t) false, returns (a^s, b^{n-s}) with s = (a+b)/2 when
/// a == b (mod 2) and s = (a+b+1)/2 otherwise. The result has length n,
/// maximum a, minimum b, and is not bipartite graphic.
DegreeSequence counterexample(const Triple& t);

/// Upper bound on the criterion left-hand side at a strong index k > b
/// (requires a <= n): lhs <= n*(k-b) + K*(a+b) - K^2 where K is the largest
/// strong index.
struct BoundCheck {
    i64 lhs = 0;
    i64 bound = 0;
};

BoundCheck strong_index_bound(const DegreeSequence& d, i64 k);

enum class Predicate { abk, abk_simple, sharp_bipartite, sharp_graphic };

const char* predicate_name(Predicate p);

/// Uniform record for CLI/JSON output. For the n*b predicates, lhs = n*b and
/// the predicate holds iff lhs >= threshold; for abk, lhs = a and it holds
/// iff lhs <= threshold (threshold is the floored minimum of the two x-bounds).
struct ThresholdReport {
    Predicate predicate = Predicate::abk_simple;
    Triple triple{1, 1, 1};
    bool holds = false;
    i64 threshold = 0;
    i64 lhs = 0;
};

ThresholdReport evaluate_threshold(Predicate p, const Triple& t,
                                   const std::optional<Rational>& x = std::nullopt);

}  // namespace degseq
