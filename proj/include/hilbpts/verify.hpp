#pragma once

// The invariant suite behind `hilb verify`. Every check is self-contained
// and returns a verdict with a one-line detail; checks may run on several
// threads, and results come back in registration order.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "hilbpts/equivariant.hpp"
#include "hilbpts/fock.hpp"
#include "hilbpts/goettsche.hpp"
#include "hilbpts/incidence.hpp"
#include "hilbpts/intersection.hpp"
#include "hilbpts/monomial.hpp"
#include "hilbpts/partition.hpp"

namespace hilb::verify {

struct CheckResult {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct Check {
    std::string name;
    std::function<CheckResult()> run;
};

/// p(0..n) from Euler's pentagonal number recurrence.
inline std::vector<BigInt> partition_counts_pentagonal(int n) {
    std::vector<BigInt> p(static_cast<std::size_t>(n) + 1, BigInt(0));
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        BigInt total = 0;
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2;
            if (g1 > m)
                break;
            const int g2 = k * (3 * k + 1) / 2;
            const int sign = (k % 2 == 1) ? 1 : -1;
            total += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                total += sign * p[static_cast<std::size_t>(m - g2)];
        }
        p[static_cast<std::size_t>(m)] = total;
    }
    return p;
}

namespace detail {

inline CheckResult pass(std::string name, std::string detail) { return {std::move(name), true, std::move(detail)}; }
inline CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

inline std::multiset<CharVector> as_multiset(const TangentWeightList& w) { return {w.begin(), w.end()}; }

/// First few generic one-parameter subgroups from a candidate list.
inline std::vector<CharVector> generic_rhos(int n, const std::vector<CharVector>& candidates, bool p2, std::size_t want) {
    std::vector<CharVector> out;
    for (const CharVector& rho : candidates) {
        bool generic = true;
        if (p2) {
            for (const ChartTuple& t : fixed_points_p2(n))
                if (find_wall(t.weights(), rho)) {
                    generic = false;
                    break;
                }
        } else {
            for (const Partition& l : enumerate_partitions(n))
                if (find_wall(tangent_weights(l, kAffineU, kAffineV), rho)) {
                    generic = false;
                    break;
                }
        }
        if (generic)
            out.push_back(rho);
        if (out.size() == want)
            break;
    }
    return out;
}

} // namespace detail

inline std::vector<CharVector> chamber_candidates(int n) {
    const std::int64_t k = n + 1;
    return {{1, k}, {k, 1}, {2, 2 * k + 1}, {2 * k + 1, 3}, {1, 2 * k * k + 1}, {3, 7 * k + 2}, {5, 11 * k + 3}};
}

inline std::vector<Check> invariant_checks(int nmax) {
    const int n_p2 = std::min(nmax, 6);
    const int n_chamber_p2 = std::min(nmax, 8);
    const int t_fock = std::min(nmax, 8);
    const int level_max = std::min(nmax, 5);
    const int t_probe = std::min(nmax, 6);
    const int n_hb = std::min(nmax, 15);
    const int n_nakajima = std::max(nmax, 200);
    const int n_lattice = std::max(nmax, 50);

    std::vector<Check> checks;
    auto add = [&checks](std::string name, std::function<CheckResult(const std::string&)> body) {
        checks.push_back({name, [name, body] { return body(name); }});
    };

    add("partitions.pentagonal_count", [nmax](const std::string& name) {
        const auto oracle = partition_counts_pentagonal(nmax);
        for (int n = 0; n <= nmax; ++n) {
            const auto parts = enumerate_partitions(n);
            std::set<Partition> distinct(parts.begin(), parts.end());
            if (BigInt(parts.size()) != oracle[static_cast<std::size_t>(n)] || distinct.size() != parts.size())
                return detail::fail(name, "p(" + std::to_string(n) + ") mismatch");
        }
        return detail::pass(name, "p(n) matches pentagonal recurrence for n <= " + std::to_string(nmax));
    });

    add("partitions.conjugation_involution", [nmax](const std::string& name) {
        for (int n = 0; n <= nmax; ++n)
            for (const Partition& l : enumerate_partitions(n))
                if (conjugate(conjugate(l)) != l || conjugate(l).size() != n)
                    return detail::fail(name, "fails at " + l.to_string());
        return detail::pass(name, "n <= " + std::to_string(nmax));
    });

    add("partitions.cover_duality", [nmax](const std::string& name) {
        for (int n = 0; n < nmax; ++n)
            for (const Partition& l : enumerate_partitions(n)) {
                const auto up = covers(l);
                if (static_cast<int>(up.size()) != l.distinct_parts() + 1)
                    return detail::fail(name, "cover count at " + l.to_string());
                for (const Partition& mu : up) {
                    const auto down = cocovers(mu);
                    if (std::find(down.begin(), down.end(), l) == down.end() ||
                        static_cast<int>(down.size()) != mu.distinct_parts())
                        return detail::fail(name, "duality at " + l.to_string() + " < " + mu.to_string());
                }
            }
        return detail::pass(name, "n <= " + std::to_string(nmax));
    });

    add("monomial.generator_socle_identity", [nmax](const std::string& name) {
        long long count = 0;
        for (int n = 1; n <= nmax; ++n)
            for (const Partition& l : enumerate_partitions(n)) {
                const int gens = generator_count(l);
                const int soc = socle_count(l);
                const HilbertBurchMatrix hb = hilbert_burch(l);
                const bool ok = gens == soc + 1 && static_cast<int>(staircase(l).generators.size()) == gens &&
                                static_cast<int>(socle(l).size()) == soc && hb.g == (hb.g - 1) + 1 && hb.g == gens;
                if (!ok)
                    return detail::fail(name, "fails at " + l.to_string());
                ++count;
            }
        return detail::pass(name, std::to_string(count) + " partitions, n <= " + std::to_string(nmax));
    });

    add("monomial.hilbert_burch_minors", [n_hb](const std::string& name) {
        for (int n = 1; n <= n_hb; ++n)
            for (const Partition& l : enumerate_partitions(n)) {
                const HilbertBurchMatrix hb = hilbert_burch(l);
                if (!hb.is_bidiagonal())
                    return detail::fail(name, "not bidiagonal at " + l.to_string());
                std::vector<Monomial> minors;
                for (int i = 0; i < hb.g; ++i)
                    minors.push_back(hb.maximal_minor(i).mono);
                std::vector<Monomial> gens = staircase(l).generators;
                std::sort(minors.begin(), minors.end());
                std::sort(gens.begin(), gens.end());
                if (minors != gens)
                    return detail::fail(name, "minors differ at " + l.to_string());
            }
        return detail::pass(name, "n <= " + std::to_string(n_hb));
    });

    add("monomial.conjugation_symmetry", [nmax](const std::string& name) {
        for (int n = 1; n <= nmax; ++n)
            for (const Partition& l : enumerate_partitions(n))
                if (generator_count(l) != generator_count(conjugate(l)) || socle_count(l) != socle_count(conjugate(l)))
                    return detail::fail(name, "fails at " + l.to_string());
        return detail::pass(name, "n <= " + std::to_string(nmax));
    });

    add("incidence.jump_bound", [nmax](const std::string& name) {
        long long pairs = 0;
        for (int n = 1; n <= nmax; ++n) {
            if (max_generator_jump(n) > 1)
                return detail::fail(name, "jump > 1 at n=" + std::to_string(n));
            pairs += static_cast<long long>(nested_pairs(n).size());
        }
        return detail::pass(name, std::to_string(pairs) + " nested pairs, n <= " + std::to_string(nmax));
    });

    add("incidence.euler_triple_count", [nmax](const std::string& name) {
        for (int n = 0; n <= nmax; ++n)
            euler_incidence(n); // throws on mismatch
        return detail::pass(name, "n <= " + std::to_string(nmax));
    });

    add("incidence.fiber_duality", [nmax](const std::string& name) {
        for (int n = 1; n <= nmax; ++n) {
            long long phi_side = 0;
            long long gamma_side = 0;
            for (const Partition& l : enumerate_partitions(n))
                phi_side += phi_fiber_dim(l) + 1;
            for (const Partition& mu : enumerate_partitions(n + 1)) {
                if (gamma_fiber_dim(mu) != strata_index(mu, true) - 2)
                    return detail::fail(name, "gamma fiber at " + mu.to_string());
                gamma_side += gamma_fiber_dim(mu) + 1;
            }
            const auto pairs = static_cast<long long>(nested_pairs(n).size());
            if (phi_side != pairs || gamma_side != pairs)
                return detail::fail(name, "fiber sums differ at n=" + std::to_string(n));
        }
        return detail::pass(name, "n <= " + std::to_string(nmax));
    });

    add("strata.induction_and_blowup_hypotheses", [nmax](const std::string& name) {
        const int top = std::max(nmax, 1);
        for (const StrataBoundTable& t : strata_tables(top)) {
            for (int i = 1; i <= t.width(); ++i)
                if (auto b = t.bound(i); b && *b > t.claimed_bound(i))
                    return detail::fail(name, "bound exceeds 2n+4-2i at n=" + std::to_string(t.n));
            for (int i = 1; i <= t.realized_width; ++i)
                if (!t.bound(i))
                    return detail::fail(name, "realized stratum without bound at n=" + std::to_string(t.n));
            if (!check_codim_hypotheses(t).all_ok())
                return detail::fail(name, "codim hypothesis violated at n=" + std::to_string(t.n));
        }
        return detail::pass(name, "n <= " + std::to_string(top));
    });

    add("equivariant.weight_count_and_symmetry", [nmax](const std::string& name) {
        const CharVector u{1, 0}, v{0, 1};
        for (int n = 0; n <= nmax; ++n)
            for (const Partition& l : enumerate_partitions(n)) {
                const auto w = tangent_weights(l, u, v);
                if (static_cast<int>(w.size()) != 2 * n)
                    return detail::fail(name, "weight count at " + l.to_string());
                if (detail::as_multiset(w) != detail::as_multiset(tangent_weights(conjugate(l), v, u)))
                    return detail::fail(name, "conjugation symmetry at " + l.to_string());
            }
        return detail::pass(name, "n <= " + std::to_string(nmax));
    });

    add("equivariant.affine_closed_form", [nmax](const std::string& name) {
        for (int n = 0; n <= nmax; ++n) {
            PoincarePoly oracle;
            for (const Partition& l : enumerate_partitions(n))
                oracle.add_cell(2 * (n - l.length()));
            if (poincare_affine_default(n).poly != oracle)
                return detail::fail(name, "n=" + std::to_string(n));
        }
        return detail::pass(name, "n <= " + std::to_string(nmax));
    });

    add("equivariant.chamber_independence", [nmax, n_chamber_p2](const std::string& name) {
        for (int n = 1; n <= nmax; ++n) {
            const auto rhos = detail::generic_rhos(n, chamber_candidates(n), false, 3);
            if (rhos.size() < 3)
                return detail::fail(name, "fewer than three generic rho (affine) at n=" + std::to_string(n));
            for (const CharVector& rho : rhos)
                if (poincare_affine(n, rho) != poincare_affine(n, rhos.front()))
                    return detail::fail(name, "affine, n=" + std::to_string(n) + " rho=" + rho.to_string());
        }
        for (int n = 1; n <= n_chamber_p2; ++n) {
            const auto rhos = detail::generic_rhos(n, chamber_candidates(n), true, 3);
            if (rhos.size() < 3)
                return detail::fail(name, "fewer than three generic rho (p2) at n=" + std::to_string(n));
            for (const CharVector& rho : rhos)
                if (poincare_p2(n, rho) != poincare_p2(n, rhos.front()))
                    return detail::fail(name, "p2, n=" + std::to_string(n) + " rho=" + rho.to_string());
        }
        return detail::pass(name, "affine n <= " + std::to_string(nmax) + ", p2 n <= " + std::to_string(n_chamber_p2));
    });

    add("equivariant.euler_counts", [nmax, n_chamber_p2](const std::string& name) {
        const auto p = partition_counts_pentagonal(nmax);
        for (int n = 1; n <= nmax; ++n) {
            if (poincare_affine_default(n).poly.at_one() != p[static_cast<std::size_t>(n)] ||
                poincare_punctual(n).at_one() != p[static_cast<std::size_t>(n)])
                return detail::fail(name, "affine/punctual at n=" + std::to_string(n));
        }
        for (int n = 0; n <= n_chamber_p2; ++n)
            if (poincare_p2_default(n).poly.at_one() != BigInt(fixed_points_p2(n).size()))
                return detail::fail(name, "p2 at n=" + std::to_string(n));
        return detail::pass(name, "n <= " + std::to_string(nmax));
    });

    add("equivariant.punctual_dimension", [nmax](const std::string& name) {
        for (int n = 1; n <= nmax; ++n) {
            const auto dims = punctual_cell_dims(n);
            if (*std::max_element(dims.begin(), dims.end()) != n - 1 ||
                *std::min_element(dims.begin(), dims.end()) != 0 || poincare_punctual(n).top_degree() != 2 * (n - 1))
                return detail::fail(name, "n=" + std::to_string(n));
            std::multiset<int> by_length;
            for (const Partition& l : enumerate_partitions(n))
                by_length.insert(n - l.length());
            if (std::multiset<int>(dims.begin(), dims.end()) != by_length)
                return detail::fail(name, "conjugation multiset at n=" + std::to_string(n));
        }
        return detail::pass(name, "n <= " + std::to_string(nmax));
    });

    add("intersection.nakajima_recurrence", [n_nakajima](const std::string& name) {
        const NakajimaSequence seq = nakajima_recurrence(n_nakajima);
        for (int n = 1; n <= n_nakajima; ++n)
            if (seq.c(n) != nakajima_closed_form(n))
                return detail::fail(name, "c_" + std::to_string(n) + " = " + seq.c(n).str());
        return detail::pass(name, "c_n = (-1)^(n-1) n for n <= " + std::to_string(n_nakajima));
    });

    add("intersection.exceptional_square", [n_lattice](const std::string& name) {
        const std::vector<IntersectionLattice> bases{
            IntersectionLattice::projective_plane(),
            IntersectionLattice({{0, 1}, {1, -3}}, {"F", "C"}),
            IntersectionLattice::empty(),
        };
        for (const auto& base : bases)
            for (int n = 1; n <= n_lattice; ++n)
                if (exceptional_total_square(n, base) != -n)
                    return detail::fail(name, "n=" + std::to_string(n) + " base rank " + std::to_string(base.rank()));
        return detail::pass(name, "E^2 = -n for n <= " + std::to_string(n_lattice) + " on 3 bases");
    });

    add("intersection.pairing_bilinear", [](const std::string& name) {
        std::mt19937_64 rng(20260317);
        std::uniform_int_distribution<int> coord(-9, 9);
        const IntersectionLattice lat = blow_up(IntersectionLattice({{0, 1}, {1, -2}}, {"F", "C"}), 4);
        auto random_class = [&] {
            DivisorClass d = lat.zero();
            for (auto& c : d.coords)
                c = coord(rng);
            return d;
        };
        for (int trial = 0; trial < 500; ++trial) {
            const DivisorClass a = random_class(), b = random_class(), c = random_class();
            const std::int64_t k = coord(rng);
            if (pair(lat, a, b) != pair(lat, b, a) || pair(lat, a + b, c) != pair(lat, a, c) + pair(lat, b, c) ||
                pair(lat, k * a, c) != k * pair(lat, a, c))
                return detail::fail(name, "trial " + std::to_string(trial));
        }
        return detail::pass(name, "500 random triples");
    });

    add("goettsche.two_oracle_p2", [n_p2](const std::string& name) {
        const GradedSeries g = goettsche_series(SurfaceModel::projective_plane(), n_p2);
        for (int n = 0; n <= n_p2; ++n)
            if (g.slice(n) != poincare_p2_default(n).poly)
                return detail::fail(name, "n=" + std::to_string(n));
        return detail::pass(name, "fixed points = product formula, n <= " + std::to_string(n_p2));
    });

    add("goettsche.fock_character", [t_fock](const std::string& name) {
        for (const auto& s : {SurfaceModel::projective_plane(), SurfaceModel::from_betti({1, 0, 22, 0, 1})})
            if (fock_character(s, t_fock) != goettsche_series(s, t_fock))
                return detail::fail(name, "b2=" + std::to_string(s.betti()[2]));
        return detail::pass(name, "P2 and K3-shaped, t-order " + std::to_string(t_fock));
    });

    add("goettsche.euler_specialization", [n_p2](const std::string& name) {
        const SurfaceModel p2 = SurfaceModel::projective_plane();
        const auto euler = goettsche_series(p2, n_p2).at_u_one();
        // Π (1 − t^m)^{−χ}, χ = 3, expanded independently.
        std::vector<BigInt> prod(static_cast<std::size_t>(n_p2) + 1, BigInt(0));
        prod[0] = 1;
        for (int m = 1; m <= n_p2; ++m)
            for (int rep = 0; rep < p2.euler(); ++rep)
                for (int n = m; n <= n_p2; ++n)
                    prod[static_cast<std::size_t>(n)] += prod[static_cast<std::size_t>(n - m)];
        for (int n = 0; n <= n_p2; ++n)
            if (euler[static_cast<std::size_t>(n)] != prod[static_cast<std::size_t>(n)] ||
                euler[static_cast<std::size_t>(n)] != BigInt(fixed_points_p2(n).size()))
                return detail::fail(name, "n=" + std::to_string(n));
        return detail::pass(name, "t-order " + std::to_string(n_p2));
    });

    add("fock.commutators", [level_max, t_probe](const std::string& name) {
        const FockSpace space(SurfaceModel::projective_plane());
        const auto probes = space.monomials_through(t_probe);
        const int dim = space.surface().dimension();
        long long cases = 0;
        for (int m = 1; m <= level_max; ++m)
            for (int k = 1; k <= level_max; ++k)
                for (int a = 0; a < dim; ++a)
                    for (int b = 0; b < dim; ++b) {
                        const CommutatorReport r = commutator_check(space, m, k, a, b, probes);
                        if (!r.ok())
                            return detail::fail(name, r.failures.front());
                        ++cases;
                    }
        return detail::pass(name, std::to_string(cases) + " operator pairs on " + std::to_string(probes.size()) +
                                      " probes");
    });

    return checks;
}

/// HILB_THREADS if set to a positive integer, else the hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("HILB_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

inline std::vector<CheckResult> run_checks(const std::vector<Check>& checks, unsigned threads) {
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < checks.size();) {
            try {
                results[i] = checks[i].run();
            } catch (const std::exception& e) {
                results[i] = {checks[i].name, false, std::string("exception: ") + e.what()};
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(checks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return results;
}

} // namespace hilb::verify
