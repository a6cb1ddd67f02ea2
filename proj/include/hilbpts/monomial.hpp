#pragma once

// Monomial ideals of finite colength in k[x, y], localized at the origin.
// A partition λ is read as the staircase whose quotient basis is
// { x^c y^r : (r, c) a box of λ }.

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "hilbpts/error.hpp"
#include "hilbpts/partition.hpp"

namespace hilb {

struct Monomial {
    int xexp = 0;
    int yexp = 0;

    bool divides(const Monomial& m) const noexcept { return xexp <= m.xexp && yexp <= m.yexp; }

    friend Monomial operator*(Monomial a, Monomial b) noexcept {
        return {a.xexp + b.xexp, a.yexp + b.yexp};
    }
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    std::string to_string() const {
        auto power = [](char var, int e) -> std::string {
            if (e == 0)
                return {};
            if (e == 1)
                return std::string(1, var);
            return std::string(1, var) + "^" + std::to_string(e);
        };
        std::string s = power('x', xexp) + power('y', yexp);
        return s.empty() ? "1" : s;
    }
};

/// Integer multiple of a monomial; coeff == 0 is the zero entry.
struct Term {
    int coeff = 0;
    Monomial mono{};

    bool is_zero() const noexcept { return coeff == 0; }

    friend Term operator*(const Term& a, const Term& b) noexcept {
        if (a.is_zero() || b.is_zero())
            return {};
        return {a.coeff * b.coeff, a.mono * b.mono};
    }
    friend bool operator==(const Term&, const Term&) = default;

    std::string to_string() const {
        if (is_zero())
            return "0";
        std::string m = mono.to_string();
        if (coeff == 1)
            return m;
        if (coeff == -1)
            return "-" + m;
        return std::to_string(coeff) + (m == "1" ? "" : m);
    }
};

struct StaircaseIdeal {
    Partition shape;
    /// Minimal generators, xexp ascending: y^len(λ), ..., x^λ₁.
    std::vector<Monomial> generators;

    /// True iff m lies in the ideal, i.e. m is not a box of the diagram.
    bool contains(const Monomial& m) const noexcept {
        return !shape.contains(Box{m.yexp, m.xexp});
    }
};

inline StaircaseIdeal staircase(const Partition& lambda) {
    StaircaseIdeal ideal{lambda, {}};
    // Outer corners: y^len first, then x^{λ_r} y^r at each row where the part
    // strictly drops, scanning upward so xexp increases.
    ideal.generators.push_back({0, lambda.length()});
    for (int r = lambda.length() - 1; r >= 0; --r)
        if (r == 0 || lambda.row(r) < lambda.row(r - 1))
            ideal.generators.push_back({lambda.row(r), r});
    return ideal;
}

namespace detail {

inline void require_nonempty(const Partition& lambda) {
    if (lambda.empty())
        throw invalid_input("ideal is the unit ideal at a point off support");
}

} // namespace detail

/// dim_k I_ξ(P) at the origin: the number of minimal generators.
inline int generator_count(const Partition& lambda) {
    detail::require_nonempty(lambda);
    return lambda.distinct_parts() + 1;
}

/// Quotient monomials annihilated by both x and y, found box by box.
inline std::vector<Monomial> socle(const Partition& lambda) {
    std::vector<Monomial> out;
    for (const Box& b : lambda.boxes())
        if (!lambda.contains({b.row, b.col + 1}) && !lambda.contains({b.row + 1, b.col}))
            out.push_back({b.col, b.row});
    return out;
}

/// dim_k ω_ξ(P) at the origin: the socle dimension of the local ring.
inline int socle_count(const Partition& lambda) {
    detail::require_nonempty(lambda);
    return lambda.distinct_parts();
}

/**
 * The g × (g−1) syzygy matrix of a staircase ideal.
 *
 * Rows follow generators in xexp DESCENDING order (x^λ₁ first, y^len last),
 * stored in row_generators. Column j is the syzygy between row generators
 * j and j+1:  y^a · g_j − x^b · g_{j+1} = 0, so entry (j, j) = y^a and
 * entry (j+1, j) = −x^b. All other entries vanish.
 */
struct HilbertBurchMatrix {
    int g = 0;
    std::vector<std::vector<Term>> entries; // g rows, g-1 columns
    std::vector<Monomial> row_generators;

    const Term& at(int row, int col) const {
        return entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
    }

    bool is_bidiagonal() const {
        for (int r = 0; r < g; ++r)
            for (int c = 0; c + 1 < g; ++c)
                if (r != c && r != c + 1 && !at(r, c).is_zero())
                    return false;
        return true;
    }

    /// Determinant of the matrix with row i deleted. Exploits the block
    /// triangular shape: diagonal entries above i, subdiagonal ones below.
    Term maximal_minor(int deleted_row) const {
        if (deleted_row < 0 || deleted_row >= g)
            throw invalid_input("row index out of range");
        Term det{1, {}};
        for (int j = 0; j < deleted_row; ++j)
            det = det * at(j, j);
        for (int j = deleted_row; j + 1 < g; ++j)
            det = det * at(j + 1, j);
        return det;
    }
};

inline HilbertBurchMatrix hilbert_burch(const Partition& lambda) {
    detail::require_nonempty(lambda);
    StaircaseIdeal ideal = staircase(lambda);
    std::vector<Monomial> gens(ideal.generators.rbegin(), ideal.generators.rend());
    const int g = static_cast<int>(gens.size());

    HilbertBurchMatrix hb;
    hb.g = g;
    hb.row_generators = gens;
    hb.entries.assign(static_cast<std::size_t>(g), std::vector<Term>(static_cast<std::size_t>(g - 1)));
    for (int j = 0; j + 1 < g; ++j) {
        const Monomial& left = gens[static_cast<std::size_t>(j)];
        const Monomial& right = gens[static_cast<std::size_t>(j + 1)];
        hb.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] =
            Term{1, {0, right.yexp - left.yexp}};
        hb.entries[static_cast<std::size_t>(j + 1)][static_cast<std::size_t>(j)] =
            Term{-1, {left.xexp - right.xexp, 0}};
    }
    return hb;
}

/// dim_k of the fiber of the ideal sheaf at P: 1 off the support (locally
/// principal there), the generator count at the origin otherwise.
inline int strata_index(const Partition& lambda, bool at_support) {
    if (!at_support)
        return 1;
    if (lambda.empty())
        throw invalid_input("empty partition has no support");
    return generator_count(lambda);
}

} // namespace hilb
