#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "pathideal/error.hpp"
#include "pathideal/monomial_ideal.hpp"
#include "pathideal/vertex_set.hpp"

namespace pathideal {

/// n = (ell + 1) + b(ell + 2) + c with 0 <= c <= ell + 1; b = -1 and
/// c = n + 1 when n <= ell.
struct SpineParams
{
    int n = 0;
    int ell = 0;
    int b = 0;
    int c = 0;

    bool operator==(const SpineParams&) const = default;
};

inline SpineParams spine_params(int n, int ell)
{
    if (n < 1 || ell < 1)
        throw Error(ErrorCode::InvalidArgument, "spine parameters need n >= 1 and ell >= 1");
    if (n <= ell)
        return {n, ell, -1, n + 1};
    const int rest = n - ell - 1;
    return {n, ell, rest / (ell + 2), rest % (ell + 2)};
}

/// depth of R/P_ell(S_n): ell(b+1) when c = 0, else ell(b+1) + c - 1.
inline int spine_depth(int n, int ell)
{
    const SpineParams p = spine_params(n, ell);
    const int base = ell * (p.b + 1);
    return p.c == 0 ? base : base + p.c - 1;
}

namespace detail {

inline int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
inline int ceil_div(int a, int b) { return -floor_div(-a, b); }

} // namespace detail

/// Sum over 0 <= i < ell of ceil((n - i) / (ell + 2)).
inline int spine_depth_ceilsum(int n, int ell)
{
    spine_params(n, ell);
    int total = 0;
    for (int i = 0; i < ell; ++i)
        total += detail::ceil_div(n - i, ell + 2);
    return total;
}

/// With m = ceil(n / (ell + 2)): m * ell when ell <= (n - 2m + 2) / m,
/// otherwise n - 2m + 2.
inline int spine_depth_mform(int n, int ell)
{
    spine_params(n, ell);
    const int m = detail::ceil_div(n, ell + 2);
    return ell * m <= n - 2 * m + 2 ? m * ell : n - 2 * m + 2;
}

/// P_(ell,1,s): the paths x_i ... x_{i+ell} inside x_1..x_s, as an ideal of
/// the ring on n variables. Zero when s <= ell.
inline MonomialIdeal spine_path_ideal(int s, int ell, int n)
{
    std::vector<VertexSet> gens;
    for (int i = 1; i + ell <= s; ++i)
        gens.push_back(VertexSet::interval(i, i + ell));
    return MonomialIdeal(n, gens);
}

/// (P_(ell,1,s), x_v for v in linear), reduced.
inline MonomialIdeal spine_closed_form(int s, int ell, int n, std::initializer_list<int> linear)
{
    MonomialIdeal out = spine_path_ideal(s, ell, n);
    for (int v : linear)
        out = out.add(VertexSet{v});
    return out.minimal_generators();
}

struct SequenceA
{
    int j = 0;
    int k = 0;
    VertexSet monomial;
};

struct SequenceB
{
    int h = 0;
    VertexSet monomial;
};

/// a_(j,k) = x_{n-ell-k+1} ... x_{n-j-k+1} for 1 <= j <= min(c, ell),
/// 1 <= k <= c - j + 1, in (j, k) order. Empty when c = 0 or b = -1.
inline std::vector<SequenceA> sequence_a(int n, int ell)
{
    const SpineParams p = spine_params(n, ell);
    std::vector<SequenceA> out;
    if (p.b < 0 || p.c == 0)
        return out;
    for (int j = 1; j <= std::min(p.c, ell); ++j)
        for (int k = 1; k <= p.c - j + 1; ++k)
            out.push_back({j, k, VertexSet::interval(n - ell - k + 1, n - j - k + 1)});
    return out;
}

/// b_h = x_{n-ell+h} ... x_{n-c} for 1 <= h <= ell - c; empty when c >= ell
/// or b = -1.
inline std::vector<SequenceB> sequence_b(int n, int ell)
{
    const SpineParams p = spine_params(n, ell);
    std::vector<SequenceB> out;
    if (p.b < 0)
        return out;
    for (int h = 1; h <= ell - p.c; ++h)
        out.push_back({h, VertexSet::interval(n - ell + h, n - p.c)});
    return out;
}

struct ColonStep
{
    int j = 0;
    int k = 0;
    VertexSet a;
    /// C_(j,k) = (previous C, a_(j,k))
    MonomialIdeal c;
    /// K_(j,k) = (previous C : a_(j,k))
    MonomialIdeal k_ideal;
};

struct SumStep
{
    int h = 0;
    VertexSet b;
    /// J_h = (J_{h-1}, b_h)
    MonomialIdeal j;
    /// L_h = (J_{h-1} : b_h)
    MonomialIdeal l;
};

/// Every ideal of the two colon/sum chains, starting from P_(ell,1,n).
struct SpineLedger
{
    SpineParams params;
    MonomialIdeal start;
    std::vector<ColonStep> colon_chain;
    /// The last C of the colon chain, or the start ideal when c = 0.
    MonomialIdeal i_one;
    std::vector<SumStep> sum_chain;
};

inline SpineLedger derive_KCLJ(int n, int ell)
{
    SpineLedger ledger;
    ledger.params = spine_params(n, ell);
    ledger.start = spine_path_ideal(n, ell, n).minimal_generators();
    MonomialIdeal current = ledger.start;
    for (const SequenceA& a : sequence_a(n, ell)) {
        ColonStep step{a.j, a.k, a.monomial, current.add(a.monomial), current.colon(a.monomial)};
        current = step.c;
        ledger.colon_chain.push_back(std::move(step));
    }
    ledger.i_one = current;
    for (const SequenceB& b : sequence_b(n, ell)) {
        SumStep step{b.h, b.monomial, current.add(b.monomial), current.colon(b.monomial)};
        current = step.j;
        ledger.sum_chain.push_back(std::move(step));
    }
    return ledger;
}

/// Ideal equality by membership of every square-free monomial.
inline bool same_by_membership(const MonomialIdeal& x, const MonomialIdeal& y)
{
    if (x.n_vertices() != y.n_vertices())
        return false;
    bool same = true;
    for_each_subset(VertexSet::range(x.n_vertices()), [&](VertexSet m) {
        same = same && x.contains(m) == y.contains(m);
    });
    return same;
}

struct ExplicitFormCheck
{
    int compared = 0;
    /// "K_(j,k)", "L_(h)", "J_(ell-c)", "I_(1)" for every disagreement.
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

inline constexpr int kMembershipCheckMaxN = 10;

/**
 * Compares the derived chains with their closed forms:
 *   K_(j,k)   = (P_(ell,1,n-ell-k-1), x_{n-ell-k}, x_{n-j-k+2})
 *   L_h       = (P_(ell,1,n-ell+h-2), x_{n-ell+h-1})
 *   J_(ell-c) = (P_(ell,1,n-c-1), x_{n-c})
 *   I_(1)     = (P_(ell,1,n-ell-1), x_{n-ell})                  when c = ell
 *   I_(1)     = (P_(ell,1,n-ell-2), x_{n-ell-1}, x_{n-ell})      when c = ell + 1
 * on minimal generators, and also by membership when n <= 10.
 */
inline ExplicitFormCheck check_explicit_forms(int n, int ell)
{
    const SpineLedger ledger = derive_KCLJ(n, ell);
    const SpineParams p = ledger.params;
    ExplicitFormCheck check;
    auto compare = [&](const MonomialIdeal& derived, const MonomialIdeal& closed, const std::string& label) {
        ++check.compared;
        bool same = derived.same_ideal(closed);
        if (same && n <= kMembershipCheckMaxN)
            same = same_by_membership(derived, closed);
        if (!same)
            check.mismatches.push_back(label + ": derived " + derived.to_string() + " vs closed form " +
                                       closed.to_string());
    };
    for (const ColonStep& s : ledger.colon_chain)
        compare(s.k_ideal, spine_closed_form(n - ell - s.k - 1, ell, n, {n - ell - s.k, n - s.j - s.k + 2}),
                "K_(" + std::to_string(s.j) + "," + std::to_string(s.k) + ")");
    if (p.b >= 0 && p.c == ell)
        compare(ledger.i_one, spine_closed_form(n - ell - 1, ell, n, {n - ell}), "I_(1)");
    if (p.b >= 0 && p.c == ell + 1)
        compare(ledger.i_one, spine_closed_form(n - ell - 2, ell, n, {n - ell - 1, n - ell}), "I_(1)");
    for (const SumStep& s : ledger.sum_chain)
        compare(s.l, spine_closed_form(n - ell + s.h - 2, ell, n, {n - ell + s.h - 1}),
                "L_(" + std::to_string(s.h) + ")");
    if (!ledger.sum_chain.empty())
        compare(ledger.sum_chain.back().j, spine_closed_form(n - p.c - 1, ell, n, {n - p.c}),
                "J_(" + std::to_string(ell - p.c) + ")");
    return check;
}

inline bool verify_explicit_forms(int n, int ell) { return check_explicit_forms(n, ell).ok(); }

/// Throws Mismatch naming the first disagreeing ideal.
inline void require_explicit_forms(int n, int ell)
{
    const ExplicitFormCheck check = check_explicit_forms(n, ell);
    if (!check.ok())
        throw Error(ErrorCode::Mismatch, "n=" + std::to_string(n) + " ell=" + std::to_string(ell) + " " +
                                             check.mismatches.front());
}

namespace detail {

/// Lower bound for R_s / P_(ell,1,s), memoized over s.
class SdepthBound
{
public:
    explicit SdepthBound(int ell) : ell_(ell) {}

    int operator()(int s)
    {
        if (s <= ell_)
            return s;
        if (static_cast<std::size_t>(s) < memo_.size() && memo_[static_cast<std::size_t>(s)] >= 0)
            return memo_[static_cast<std::size_t>(s)];
        const int value = compute(s);
        if (memo_.size() <= static_cast<std::size_t>(s))
            memo_.resize(static_cast<std::size_t>(s) + 1, -1);
        memo_[static_cast<std::size_t>(s)] = value;
        return value;
    }

private:
    /// (P_(ell,1,s'), `linear` further variables) in n variables: the part
    /// on x_1..x_s' plus the n - s' - linear variables left free.
    int shifted(int n, int s_inner, int linear) { return (*this)(std::max(s_inner, 0)) + n - std::max(s_inner, 0) - linear; }

    int compute(int n)
    {
        const SpineParams p = spine_params(n, ell_);
        const int ell = ell_;
        const int c = p.c;

        int i_one = 0;
        if (c <= ell - 1) {
            i_one = shifted(n, n - c - 1, 1);
            for (int h = 1; h <= ell - c; ++h)
                i_one = std::min(i_one, shifted(n, n - ell + h - 2, 1));
        } else if (c == ell) {
            i_one = shifted(n, n - ell - 1, 1);
        } else {
            i_one = shifted(n, n - ell - 2, 2);
        }
        if (c == 0)
            return i_one;

        int bound = i_one;
        for (int j = 1; j <= std::min(c, ell); ++j)
            for (int k = 1; k <= c - j + 1; ++k)
                bound = std::min(bound, shifted(n, n - ell - k - 1, 2));
        return bound;
    }

    int ell_;
    std::vector<int> memo_;
};

} // namespace detail

/**
 * Stanley depth lower bound for R/P_ell(S_n), obtained by running the
 * colon/sum chains: each step bounds sdepth(R/I) below by the minimum over
 * (I : u) and (I, u), and every ideal reached is a shorter spine path ideal
 * plus some variables, handled recursively.
 */
inline int spine_sdepth_lower(int n, int ell)
{
    spine_params(n, ell);
    return detail::SdepthBound(ell)(n);
}

struct SpineDepthReport
{
    SpineParams params;
    int depth = 0;
    int sdepth_lower = 0;
    int height = 0;
    int krull_dim = 0;
    bool is_cm = false;
};

inline SpineDepthReport spine_report(int n, int ell)
{
    SpineDepthReport r;
    r.params = spine_params(n, ell);
    r.depth = spine_depth(n, ell);
    r.sdepth_lower = spine_sdepth_lower(n, ell);
    r.height = n / (ell + 1);
    r.krull_dim = n - r.height;
    r.is_cm = r.depth == r.krull_dim;
    return r;
}

} // namespace pathideal
