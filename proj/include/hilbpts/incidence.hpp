#pragma once

// Fixed-point combinatorics of the incidence variety H_{n,n+1} and the
// dimension bounds for the strata W_{i,n} ⊂ H_n × S.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "hilbpts/error.hpp"
#include "hilbpts/monomial.hpp"
#include "hilbpts/partition.hpp"

namespace hilb {

/// A torus-fixed point (ξ ⊂ η) of H_{n,n+1} supported at the origin.
struct NestedPair {
    Partition lower;
    Partition upper;

    friend bool operator==(const NestedPair&, const NestedPair&) = default;
};

/// Pairs (λ, μ) with μ ∈ covers(λ); λ in enumeration order, μ in cover order.
inline std::vector<NestedPair> nested_pairs(int n) {
    std::vector<NestedPair> out;
    for (const Partition& lambda : enumerate_partitions(n))
        for (Partition& mu : covers(lambda))
            out.push_back({lambda, std::move(mu)});
    return out;
}

/// Dimension of φ⁻¹(ξ, P) = P(I_ξ(P)).
inline int phi_fiber_dim(const Partition& lambda, bool at_support = true) {
    return strata_index(lambda, at_support) - 1;
}

/// Dimension of γ⁻¹(η, P) = P(ω_η(P)). Cross-checked against the generator
/// count so that the (i−2)-dimensional fiber statement is enforced.
inline int gamma_fiber_dim(const Partition& mu) {
    const int dim = socle_count(mu) - 1;
    if (dim != generator_count(mu) - 2)
        throw invariant_violation("socle/generator mismatch at " + mu.to_string());
    return dim;
}

struct IncidenceEuler {
    long long pairs = 0;
    long long generator_sum = 0; // Σ_{λ⊢n} dim I_λ(0): blow-up side
    long long socle_sum = 0;     // Σ_{μ⊢n+1} dim ω_μ(0): P(ω) side
};

/// Fixed points of H_{n,n+1} over the origin counted three ways; throws if
/// the counts disagree.
inline IncidenceEuler euler_incidence(int n) {
    if (n < 0)
        throw invalid_input("n must be non-negative");
    IncidenceEuler e;
    e.pairs = static_cast<long long>(nested_pairs(n).size());
    // n = 0: the unit ideal, one generator everywhere.
    for (const Partition& lambda : enumerate_partitions(n))
        e.generator_sum += strata_index(lambda, !lambda.empty());
    for (const Partition& mu : enumerate_partitions(n + 1))
        e.socle_sum += socle_count(mu);
    if (e.pairs != e.generator_sum || e.pairs != e.socle_sum)
        throw invariant_violation("incidence fixed-point counts disagree at n=" + std::to_string(n) + ": pairs=" +
                                  std::to_string(e.pairs) + " generators=" + std::to_string(e.generator_sum) +
                                  " socles=" + std::to_string(e.socle_sum));
    return e;
}

/// Largest |generator_count(λ) − generator_count(μ)| over nested pairs of size n ≥ 1.
inline int max_generator_jump(int n) {
    int worst = 0;
    for (const NestedPair& p : nested_pairs(n))
        worst = std::max(worst, std::abs(generator_count(p.lower) - generator_count(p.upper)));
    return worst;
}

/// Largest number of minimal generators among colength-n monomial ideals.
inline int max_generator_count(int n) {
    if (n < 1)
        throw invalid_input("n must be positive");
    int best = 0;
    for (const Partition& lambda : enumerate_partitions(n))
        best = std::max(best, generator_count(lambda));
    return best;
}

// ---------------------------------------------------------------------------
// Strata bounds

/**
 * Upper bounds dim W_{i,n} ≤ bound(i) for the loci of (ξ, P) ∈ H_n × S
 * where I_ξ needs exactly i generators at P.
 *
 * bounds[i-1] holds the bound for stratum i; std::nullopt means the stratum
 * is empty. Strata past the end of the vector are empty as well.
 */
struct StrataBoundTable {
    int n = 0;
    std::vector<std::optional<int>> bounds;
    /// Largest i whose stratum is actually non-empty at size n.
    int realized_width = 0;

    std::optional<int> bound(int i) const {
        if (i < 1 || i > static_cast<int>(bounds.size()))
            return std::nullopt;
        return bounds[static_cast<std::size_t>(i - 1)];
    }

    int width() const noexcept { return static_cast<int>(bounds.size()); }

    /// Dimension of H_n × S.
    int ambient_dim() const noexcept { return 2 * n + 2; }

    /// The inductive claim dim W_{i,n} ≤ 2n + 4 − 2i.
    int claimed_bound(int i) const noexcept { return 2 * n + 4 - 2 * i; }
};

/// Exact strata for n = 1: off-diagonal of S × S, the diagonal, nothing else.
inline StrataBoundTable strata_base() {
    return StrataBoundTable{1, {4, 2}, max_generator_count(1)};
}

inline void validate(const StrataBoundTable& t) {
    if (t.n < 1)
        throw invalid_input("malformed strata table: n must be at least 1");
    if (t.bounds.empty() || t.bound(1) != t.ambient_dim())
        throw invalid_input("malformed strata table: stratum 1 must have full dimension 2n+2");
    for (const auto& b : t.bounds)
        if (b && *b < 0)
            throw invalid_input("malformed strata table: negative bound");
}

/// One induction step n → n+1. A stratum i at n+1 pulls back under γ into
/// φ⁻¹ of strata i−1, i, i+1 at n, with γ-fibers of dimension i − 2 and
/// φ-fibers of dimension j − 1 over stratum j.
inline StrataBoundTable strata_propagate(const StrataBoundTable& t) {
    validate(t);
    StrataBoundTable next;
    next.n = t.n + 1;
    next.realized_width = max_generator_count(next.n);
    const int width = t.width() + 1;
    for (int i = 1; i <= width; ++i) {
        if (i == 1) {
            next.bounds.emplace_back(next.ambient_dim());
            continue;
        }
        std::optional<int> best;
        for (int j = i - 1; j <= i + 1; ++j) {
            if (j < 1)
                continue;
            if (auto b = t.bound(j)) {
                const int candidate = *b + (j - 1);
                best = best ? std::max(*best, candidate) : candidate;
            }
        }
        if (best)
            next.bounds.emplace_back(*best - (i - 2));
        else
            next.bounds.emplace_back(std::nullopt);
    }
    while (!next.bounds.empty() && !next.bounds.back())
        next.bounds.pop_back();
    return next;
}

/// Tables for 1, 2, ..., n_max.
inline std::vector<StrataBoundTable> strata_tables(int n_max) {
    if (n_max < 1)
        throw invalid_input("n must be at least 1");
    std::vector<StrataBoundTable> out{strata_base()};
    while (out.back().n < n_max)
        out.push_back(strata_propagate(out.back()));
    return out;
}

enum class CodimStatus { ok, violated, vacuous };

inline const char* to_string(CodimStatus s) {
    switch (s) {
    case CodimStatus::ok: return "ok";
    case CodimStatus::violated: return "violated";
    case CodimStatus::vacuous: return "vacuous";
    }
    return "?";
}

struct CodimEntry {
    int i = 0;
    std::optional<int> bound;
    std::optional<int> codim;
    int required = 0; // 2i − 2
    std::optional<int> margin;
    bool realized = false;
    bool within_claim = true; // bound ≤ 2n + 4 − 2i
    bool blowup_a = true;     // codim ≥ i     (i ≥ 2)
    bool blowup_b = true;     // codim ≥ i + 1 (i ≥ 3)
    CodimStatus status = CodimStatus::ok;
};

struct CodimReport {
    int n = 0;
    std::vector<CodimEntry> entries;

    bool all_ok() const {
        return std::none_of(entries.begin(), entries.end(),
                            [](const CodimEntry& e) { return e.status == CodimStatus::violated; });
    }
};

/// codim(i) = (2n+2) − bound(i), checked against 2i − 2 and the two blow-up
/// criterion hypotheses. Empty strata are reported vacuous. Strata with a
/// bound beyond the realized width are still checked, and flagged unrealized.
inline CodimReport check_codim_hypotheses(const StrataBoundTable& t) {
    CodimReport report{t.n, {}};
    const int last = std::max(t.width(), t.realized_width) + 1;
    for (int i = 1; i <= last; ++i) {
        CodimEntry e;
        e.i = i;
        e.required = 2 * i - 2;
        e.realized = i <= t.realized_width;
        e.bound = t.bound(i);
        if (!e.bound) {
            e.status = e.realized ? CodimStatus::violated : CodimStatus::vacuous;
            report.entries.push_back(e);
            continue;
        }
        e.codim = t.ambient_dim() - *e.bound;
        e.margin = *e.codim - e.required;
        e.within_claim = *e.bound <= t.claimed_bound(i);
        e.blowup_a = i < 2 || *e.codim >= i;
        e.blowup_b = i < 3 || *e.codim >= i + 1;
        const bool good = *e.margin >= 0 && e.within_claim && e.blowup_a && e.blowup_b;
        e.status = good ? CodimStatus::ok : CodimStatus::violated;
        report.entries.push_back(e);
    }
    return report;
}

} // namespace hilb
