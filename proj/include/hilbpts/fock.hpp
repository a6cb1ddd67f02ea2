#pragma once

// Free Heisenberg Fock space over the even cohomology of a surface.
// Creation operators multiply by generators a_{−m}(γ); annihilation
// operators a_m(α) are the derivations fixed by
//     a_m(α) a_{−k}(β)|0⟩ = δ_{mk} c_m ⟨α, β⟩ |0⟩,   c_m = (−1)^{m−1} m.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hilbpts/bigint.hpp"
#include "hilbpts/error.hpp"
#include "hilbpts/goettsche.hpp"
#include "hilbpts/intersection.hpp"

namespace hilb {

/// The creation generator a_{−level}(basis element).
struct Generator {
    int level = 1;
    int basis = 0;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Sorted multiset of generators.
using FockMonomial = std::vector<Generator>;
using FockState = std::map<FockMonomial, BigInt>;

struct Bidegree {
    int t = 0;
    int u = 0;

    friend bool operator==(const Bidegree&, const Bidegree&) = default;
};

class FockSpace {
  public:
    explicit FockSpace(SurfaceModel surface) : surface_(std::move(surface)) {}

    const SurfaceModel& surface() const noexcept { return surface_; }

    static FockState vacuum() { return FockState{{FockMonomial{}, BigInt(1)}}; }

    Bidegree bidegree(const Generator& g) const { return {g.level, 2 * g.level - 2 + surface_.degree(g.basis)}; }

    Bidegree bidegree(const FockMonomial& mono) const {
        Bidegree total;
        for (const Generator& g : mono) {
            const Bidegree b = bidegree(g);
            total.t += b.t;
            total.u += b.u;
        }
        return total;
    }

    FockState create(const FockState& state, int level, int basis) const {
        check_operator(level, basis);
        const Generator gen{level, basis};
        FockState out;
        for (const auto& [mono, coeff] : state) {
            if (coeff == 0)
                continue;
            FockMonomial m = mono;
            m.insert(std::upper_bound(m.begin(), m.end(), gen), gen);
            out[std::move(m)] += coeff;
        }
        return out;
    }

    /// Leibniz rule: each factor a_{−level}(β) in a monomial contributes
    /// c_level ⟨α, β⟩ times the monomial with that factor removed.
    FockState annihilate(const FockState& state, int level, int alpha) const {
        check_operator(level, alpha);
        const BigInt c = nakajima_closed_form(level);
        FockState out;
        for (const auto& [mono, coeff] : state) {
            if (coeff == 0)
                continue;
            for (std::size_t i = 0; i < mono.size(); ++i) {
                if (mono[i].level != level)
                    continue;
                if (i > 0 && mono[i - 1] == mono[i])
                    continue; // multiplicity handled at the first copy
                const std::int64_t pair = surface_.pairing(alpha, mono[i].basis);
                if (pair == 0)
                    continue;
                std::size_t mult = 1;
                while (i + mult < mono.size() && mono[i + mult] == mono[i])
                    ++mult;
                FockMonomial rest = mono;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
                out[std::move(rest)] += coeff * BigInt(mult) * c * BigInt(pair);
            }
        }
        prune(out);
        return out;
    }

    /// Every monomial of t-weight at most tmax, ordered by t-weight then
    /// lexicographically.
    std::vector<FockMonomial> monomials_through(int tmax) const {
        std::vector<Generator> gens;
        for (int m = 1; m <= tmax; ++m)
            for (int b = 0; b < surface_.dimension(); ++b)
                gens.push_back({m, b});
        std::vector<FockMonomial> out;
        FockMonomial current;
        collect(gens, 0, 0, tmax, current, out);
        std::stable_sort(out.begin(), out.end(), [this](const FockMonomial& a, const FockMonomial& b) {
            return bidegree(a).t < bidegree(b).t;
        });
        return out;
    }

    static void prune(FockState& s) {
        for (auto it = s.begin(); it != s.end();)
            it = it->second == 0 ? s.erase(it) : std::next(it);
    }

    std::string to_string(const FockState& s) const {
        if (s.empty())
            return "0";
        std::string out;
        for (const auto& [mono, coeff] : s) {
            if (!out.empty())
                out += " + ";
            out += coeff.str() + "*";
            if (mono.empty())
                out += "|0>";
            for (const Generator& g : mono)
                out += "a_{-" + std::to_string(g.level) + "}(" + surface_.name(g.basis) + ")";
        }
        return out;
    }

  private:
    void check_operator(int level, int basis) const {
        if (level < 1)
            throw invalid_input("operator level must be at least 1");
        if (basis < 0 || basis >= surface_.dimension())
            throw invalid_input("cohomology basis index out of range");
    }

    void collect(const std::vector<Generator>& gens, std::size_t first, int tw, int tmax, FockMonomial& current,
                 std::vector<FockMonomial>& out) const {
        out.push_back(current);
        for (std::size_t g = first; g < gens.size(); ++g) {
            if (tw + gens[g].level > tmax)
                break;
            current.push_back(gens[g]);
            collect(gens, g, tw + gens[g].level, tmax, current, out);
            current.pop_back();
        }
    }

    SurfaceModel surface_;
};

inline FockState operator-(FockState a, const FockState& b) {
    for (const auto& [mono, coeff] : b)
        a[mono] -= coeff;
    FockSpace::prune(a);
    return a;
}

inline FockState scaled(FockState s, const BigInt& k) {
    for (auto& [mono, coeff] : s)
        coeff *= k;
    FockSpace::prune(s);
    return s;
}

struct CommutatorReport {
    int m = 0;
    int k = 0;
    int alpha = 0;
    int beta = 0;
    BigInt expected; // δ_{mk} c_m ⟨α, β⟩
    std::size_t probes = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return failures.empty(); }
};

/// Applies [a_m(α), a_{−k}(β)] to each probe monomial and compares with
/// δ_{mk} c_m ⟨α, β⟩ times the probe.
inline CommutatorReport commutator_check(const FockSpace& space, int m, int k, int alpha, int beta,
                                         const std::vector<FockMonomial>& probes) {
    CommutatorReport report;
    report.m = m;
    report.k = k;
    report.alpha = alpha;
    report.beta = beta;
    report.expected = m == k ? nakajima_closed_form(m) * BigInt(space.surface().pairing(alpha, beta)) : BigInt(0);
    for (const FockMonomial& probe : probes) {
        const FockState state{{probe, BigInt(1)}};
        const FockState lhs = space.annihilate(space.create(state, k, beta), m, alpha) -
                              space.create(space.annihilate(state, m, alpha), k, beta);
        const FockState rhs = scaled(state, report.expected);
        ++report.probes;
        if (lhs != rhs)
            report.failures.push_back("probe " + space.to_string(state) + ": got " + space.to_string(lhs) +
                                      ", expected " + space.to_string(rhs));
    }
    return report;
}

} // namespace hilb
