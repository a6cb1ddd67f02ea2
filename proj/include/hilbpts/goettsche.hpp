#pragma once

// Bigraded generating series Σ dim H^m(H_n) t^n u^m for a surface with even
// cohomology, computed two ways: the infinite product, and the character of
// the free Fock space on the creation operators.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbpts/bigint.hpp"
#include "hilbpts/error.hpp"
#include "hilbpts/intersection.hpp"
#include "hilbpts/poincare.hpp"

namespace hilb {

struct BasisElement {
    std::string name;
    int degree = 0; // real cohomological degree: 0, 2 or 4
};

/**
 * Cohomology of a surface: Betti numbers, a basis of H^0 ⊕ H^2 ⊕ H^4 and
 * the intersection pairing on it. Only even cohomology is supported.
 */
class SurfaceModel {
  public:
    /// H*(P²) with basis 1, H, pt.
    static SurfaceModel projective_plane() {
        return from_betti({1, 0, 1, 0, 1}, IntersectionLattice::projective_plane());
    }

    /// Surface with the given Betti numbers. The H² pairing defaults to that
    /// of P² blown up at b2 − 1 points, diag(1, −1, …, −1).
    static SurfaceModel from_betti(std::array<int, 5> betti, std::optional<IntersectionLattice> h2 = std::nullopt) {
        for (int b : betti)
            if (b < 0)
                throw invalid_input("Betti numbers must be non-negative");
        if (betti[0] != 1 || betti[4] != 1)
            throw invalid_input("surface must be connected: b0 = b4 = 1");
        if (betti[1] != betti[3])
            throw invalid_input("Poincare duality requires b1 = b3");
        if (betti[1] != 0)
            throw invalid_input("odd cohomology unsupported");
        if (!h2)
            h2 = betti[2] == 0 ? IntersectionLattice::empty()
                               : blow_up(IntersectionLattice::projective_plane(), betti[2] - 1);
        if (h2->rank() != betti[2])
            throw invalid_input("H^2 lattice rank must equal b2");

        SurfaceModel s;
        s.betti_ = betti;
        s.basis_.push_back({"1", 0});
        for (const std::string& l : h2->labels())
            s.basis_.push_back({l, 2});
        s.basis_.push_back({"pt", 4});
        const std::size_t dim = s.basis_.size();
        s.pairing_.assign(dim, std::vector<std::int64_t>(dim, 0));
        s.pairing_[0][dim - 1] = s.pairing_[dim - 1][0] = 1;
        for (int i = 0; i < h2->rank(); ++i)
            for (int j = 0; j < h2->rank(); ++j)
                s.pairing_[static_cast<std::size_t>(i + 1)][static_cast<std::size_t>(j + 1)] = h2->entry(i, j);
        return s;
    }

    const std::array<int, 5>& betti() const noexcept { return betti_; }
    const std::vector<BasisElement>& basis() const noexcept { return basis_; }
    int dimension() const noexcept { return static_cast<int>(basis_.size()); }
    int degree(int index) const { return basis_.at(static_cast<std::size_t>(index)).degree; }
    const std::string& name(int index) const { return basis_.at(static_cast<std::size_t>(index)).name; }

    int index_of(const std::string& name) const {
        for (std::size_t i = 0; i < basis_.size(); ++i)
            if (basis_[i].name == name)
                return static_cast<int>(i);
        throw invalid_input("no basis element named " + name);
    }

    /// ⟨α, β⟩ = ∫_S α ∪ β; zero unless the degrees add up to 4.
    std::int64_t pairing(int a, int b) const {
        return pairing_.at(static_cast<std::size_t>(a)).at(static_cast<std::size_t>(b));
    }

    /// Euler characteristic Σ b_d.
    int euler() const noexcept { return betti_[0] + betti_[1] + betti_[2] + betti_[3] + betti_[4]; }

  private:
    SurfaceModel() = default;

    std::array<int, 5> betti_{};
    std::vector<BasisElement> basis_;
    std::vector<std::vector<std::int64_t>> pairing_;
};

/// Σ_{n ≤ T} Σ_m c(n, m) t^n u^m with u-degree at most 4n at t-degree n.
class GradedSeries {
  public:
    explicit GradedSeries(int torder) : torder_(torder) {
        if (torder < 0)
            throw invalid_input("truncation order must be non-negative");
        coeffs_.resize(static_cast<std::size_t>(torder) + 1);
        for (int n = 0; n <= torder; ++n)
            coeffs_[static_cast<std::size_t>(n)].assign(4 * static_cast<std::size_t>(n) + 1, BigInt(0));
    }

    int torder() const noexcept { return torder_; }

    const BigInt& coefficient(int n, int m) const {
        static const BigInt zero = 0;
        if (n < 0 || n > torder_ || m < 0 || m > 4 * n)
            return zero;
        return coeffs_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }

    BigInt& at(int n, int m) {
        if (n < 0 || n > torder_ || m < 0 || m > 4 * n)
            throw invalid_input("series index out of range");
        return coeffs_[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    }

    /// The t^n coefficient as a polynomial in u (written in q).
    PoincarePoly slice(int n) const {
        if (n < 0 || n > torder_)
            throw invalid_input("t-degree beyond truncation");
        PoincarePoly p;
        const auto& row = coeffs_[static_cast<std::size_t>(n)];
        for (std::size_t m = 0; m < row.size(); ++m)
            if (row[m] != 0) {
                if (m % 2 != 0)
                    throw invariant_violation("odd cohomological degree in an even series");
                p.add(static_cast<int>(m), row[m]);
            }
        return p;
    }

    /// Coefficients of the u = 1 specialization.
    std::vector<BigInt> at_u_one() const {
        std::vector<BigInt> out;
        for (const auto& row : coeffs_) {
            BigInt s = 0;
            for (const BigInt& c : row)
                s += c;
            out.push_back(s);
        }
        return out;
    }

    friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

  private:
    int torder_ = 0;
    std::vector<std::vector<BigInt>> coeffs_;
};

/// Truncation of Π_{m≥1} Π_{d∈{0,2,4}} (1 − t^m u^{2m−2+d})^{−b_d}.
inline GradedSeries goettsche_series(const SurfaceModel& surface, int torder) {
    GradedSeries s(torder);
    s.at(0, 0) = 1;
    for (int m = 1; m <= torder; ++m)
        for (int d = 0; d <= 4; d += 2) {
            const int ushift = 2 * m - 2 + d;
            // Each factor 1/(1 − t^m u^k) is an in-place prefix sum along
            // the ray (m, k), ascending in t.
            for (int rep = 0; rep < surface.betti()[static_cast<std::size_t>(d)]; ++rep)
                for (int n = m; n <= torder; ++n)
                    for (int e = ushift; e <= 4 * n; ++e) {
                        const BigInt& src = s.coefficient(n - m, e - ushift);
                        if (src != 0)
                            s.at(n, e) += src;
                    }
        }
    return s;
}

namespace detail {

struct GeneratorWeight {
    int t = 0;
    int u = 0;
};

inline void count_monomials(const std::vector<GeneratorWeight>& gens, std::size_t first, int tw, int uw, int torder,
                            std::vector<std::vector<std::uint64_t>>& counts) {
    ++counts[static_cast<std::size_t>(tw)][static_cast<std::size_t>(uw)];
    for (std::size_t g = first; g < gens.size(); ++g) {
        if (tw + gens[g].t > torder)
            break; // generators sorted by t-weight
        count_monomials(gens, g, tw + gens[g].t, uw + gens[g].u, torder, counts);
    }
}

} // namespace detail

/// Character of the polynomial algebra on a_{−m}(γ), m ≥ 1, γ in the basis,
/// with bidegree (m, 2m − 2 + deg γ), counted monomial by monomial.
inline GradedSeries fock_character(const SurfaceModel& surface, int torder) {
    GradedSeries s(torder);
    std::vector<detail::GeneratorWeight> gens;
    for (int m = 1; m <= torder; ++m)
        for (const BasisElement& b : surface.basis())
            gens.push_back({m, 2 * m - 2 + b.degree});
    std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(torder) + 1,
                                                   std::vector<std::uint64_t>(4 * static_cast<std::size_t>(torder) + 1, 0));
    detail::count_monomials(gens, 0, 0, 0, torder, counts);
    for (int n = 0; n <= torder; ++n)
        for (int m = 0; m <= 4 * n; ++m)
            s.at(n, m) = counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)];
    for (int n = 0; n <= torder; ++n)
        for (int m = 4 * n + 1; m <= 4 * torder; ++m)
            if (counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(m)] != 0)
                throw invariant_violation("Fock monomial exceeds u-degree 4n");
    return s;
}

} // namespace hilb
