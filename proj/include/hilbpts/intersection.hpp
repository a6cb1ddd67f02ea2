#pragma once

// Divisor lattices of blown-up surfaces and the replay of the recurrence
// c_{n+1}/(n+1) = c_n · ∫_F [E]² / n² producing the Nakajima constants.

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hilbpts/bigint.hpp"
#include "hilbpts/error.hpp"

namespace hilb {

struct DivisorClass {
    std::vector<std::int64_t> coords;

    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Free abelian group with a symmetric integer pairing.
class IntersectionLattice {
  public:
    IntersectionLattice() = default;

    IntersectionLattice(std::vector<std::vector<std::int64_t>> gram, std::vector<std::string> labels)
        : gram_(std::move(gram)), labels_(std::move(labels)) {
        const std::size_t r = gram_.size();
        if (labels_.size() != r)
            throw invalid_input("label count must equal lattice rank");
        for (std::size_t i = 0; i < r; ++i) {
            if (gram_[i].size() != r)
                throw invalid_input("gram matrix must be square");
            for (std::size_t j = 0; j < i; ++j)
                if (gram_[i][j] != gram_[j][i])
                    throw invalid_input("gram matrix must be symmetric");
        }
    }

    /// Pic(P²) = Z·H with H² = 1.
    static IntersectionLattice projective_plane() { return {{{1}}, {"H"}}; }

    /// Rank-0 lattice (a surface with no divisor classes recorded).
    static IntersectionLattice empty() { return {}; }

    int rank() const noexcept { return static_cast<int>(gram_.size()); }
    const std::vector<std::vector<std::int64_t>>& gram() const noexcept { return gram_; }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    std::int64_t entry(int i, int j) const {
        return gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }

    /// The i-th basis class.
    DivisorClass basis(int i) const {
        if (i < 0 || i >= rank())
            throw invalid_input("basis index out of range");
        DivisorClass d{std::vector<std::int64_t>(static_cast<std::size_t>(rank()), 0)};
        d.coords[static_cast<std::size_t>(i)] = 1;
        return d;
    }

    DivisorClass zero() const { return DivisorClass{std::vector<std::int64_t>(static_cast<std::size_t>(rank()), 0)}; }

    int index_of(const std::string& label) const {
        for (std::size_t i = 0; i < labels_.size(); ++i)
            if (labels_[i] == label)
                return static_cast<int>(i);
        throw invalid_input("no class labelled " + label);
    }

    friend bool operator==(const IntersectionLattice&, const IntersectionLattice&) = default;

  private:
    std::vector<std::vector<std::int64_t>> gram_;
    std::vector<std::string> labels_;
};

/// Appends k exceptional classes E_{r+1}..E_{r+k}, E_i² = −1, orthogonal to
/// everything else. Labels continue the existing E-numbering.
inline IntersectionLattice blow_up(const IntersectionLattice& lattice, int k) {
    if (k < 0)
        throw invalid_input("number of blown-up points must be non-negative");
    int existing = 0;
    for (const std::string& l : lattice.labels())
        if (!l.empty() && l[0] == 'E')
            ++existing;
    const std::size_t old_rank = static_cast<std::size_t>(lattice.rank());
    const std::size_t new_rank = old_rank + static_cast<std::size_t>(k);
    std::vector<std::vector<std::int64_t>> gram(new_rank, std::vector<std::int64_t>(new_rank, 0));
    for (std::size_t i = 0; i < old_rank; ++i)
        for (std::size_t j = 0; j < old_rank; ++j)
            gram[i][j] = lattice.gram()[i][j];
    std::vector<std::string> labels = lattice.labels();
    for (std::size_t i = old_rank; i < new_rank; ++i) {
        gram[i][i] = -1;
        labels.push_back("E" + std::to_string(existing + static_cast<int>(i - old_rank) + 1));
    }
    return {std::move(gram), std::move(labels)};
}

inline std::int64_t pair(const IntersectionLattice& lattice, const DivisorClass& d1, const DivisorClass& d2) {
    const std::size_t r = static_cast<std::size_t>(lattice.rank());
    if (d1.coords.size() != r || d2.coords.size() != r)
        throw invalid_input("divisor length does not match lattice rank");
    std::int64_t total = 0;
    for (std::size_t i = 0; i < r; ++i) {
        if (d1.coords[i] == 0)
            continue;
        for (std::size_t j = 0; j < r; ++j)
            total += d1.coords[i] * lattice.gram()[i][j] * d2.coords[j];
    }
    return total;
}

inline DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    if (a.coords.size() != b.coords.size())
        throw invalid_input("divisor length mismatch");
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        a.coords[i] += b.coords[i];
    return a;
}

inline DivisorClass operator*(std::int64_t k, DivisorClass a) {
    for (auto& c : a.coords)
        c *= k;
    return a;
}

inline DivisorClass operator-(const DivisorClass& a, const DivisorClass& b) { return a + (-1) * b; }

/// Total exceptional divisor of the base blown up at n points, squared.
/// This is ∫_F [E]² on a general fiber F of H_{n,n+1} → H_n.
inline std::int64_t exceptional_total_square(int n, const IntersectionLattice& base) {
    if (n < 1)
        throw invalid_input("n must be at least 1");
    const IntersectionLattice fiber = blow_up(base, n);
    DivisorClass e = fiber.zero();
    for (int i = base.rank(); i < fiber.rank(); ++i)
        e = e + fiber.basis(i);
    return pair(fiber, e, e);
}

// ---------------------------------------------------------------------------
// Nakajima constants

/// dim M_n = n + 1 (support varies over S).
inline int dim_single_support_locus(int n) { return n + 1; }
/// dim M_n(P) = n − 1.
inline int dim_punctual_locus(int n) { return n - 1; }
/// dim H_n = 2n.
inline int dim_hilbert_scheme(int n) { return 2 * n; }

struct NakajimaSequence {
    std::vector<BigInt> values; // values[k] = c_{k+1}

    const BigInt& c(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
};

/// One step of the recurrence, kept for display.
struct RecurrenceStep {
    int n = 0;                   // step n → n+1
    std::int64_t degree_g = 0;   // g : H_{n,n+1} → H_{n+1} is finite of degree n+1
    std::int64_t mult_upper = 0; // g*[M_{n+1}] = (n+1)[M_{n,n+1}]
    std::int64_t mult_lower = 0; // [E]·f*[M_n] = n[M_{n,n+1}]
    std::int64_t e_square = 0;   // ∫_F [E]², from the lattice
    BigInt c_next;
};

/**
 * Replays the derivation of c_{n+1} from c_n:
 *
 *   deg(g)·c_{n+1} = ∫ g*[M_{n+1}]·g*[M_{n+1}(P)]
 *                  = (a/b)² ∫ [E]² f*[M_n] f*[M_n(P)] = (a/b)² · c_n · ∫_F [E]²
 *
 * with a = n+1, b = n the two pullback multiplicities. Arithmetic is exact
 * over Q and every c_n is required to be an integer.
 */
inline std::vector<RecurrenceStep> nakajima_replay(int N,
                                                   const IntersectionLattice& base = IntersectionLattice::projective_plane()) {
    if (N < 1)
        throw invalid_input("N must be at least 1");
    std::vector<RecurrenceStep> steps;
    BigRational c = 1; // c_1: M_1 = S, M_1(P) = P, one transverse point.
    for (int n = 1; n < N; ++n) {
        if (dim_single_support_locus(n) + dim_punctual_locus(n) != dim_hilbert_scheme(n))
            throw invariant_violation("M_n and M_n(P) are not of complementary dimension");
        RecurrenceStep s;
        s.n = n;
        s.degree_g = n + 1;
        s.mult_upper = n + 1;
        s.mult_lower = n;
        s.e_square = exceptional_total_square(n, base);
        const BigRational scale(BigInt(s.mult_upper), BigInt(s.mult_lower));
        c = scale * scale * c * BigRational(s.e_square) / BigRational(s.degree_g);
        if (boost::multiprecision::denominator(c) != 1)
            throw invariant_violation("recurrence produced a non-integral c_" + std::to_string(n + 1));
        s.c_next = boost::multiprecision::numerator(c);
        steps.push_back(std::move(s));
    }
    return steps;
}

inline NakajimaSequence nakajima_recurrence(int N) {
    NakajimaSequence seq;
    seq.values.emplace_back(1);
    for (RecurrenceStep& s : nakajima_replay(N))
        seq.values.push_back(std::move(s.c_next));
    return seq;
}

/// (−1)^{n−1} n.
inline BigInt nakajima_closed_form(int n) {
    if (n < 1)
        throw invalid_input("n must be at least 1");
    return n % 2 == 1 ? BigInt(n) : BigInt(-n);
}

} // namespace hilb
