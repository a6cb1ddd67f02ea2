#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so it can be driven from tests with string streams.

#include <array>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hilbpts/equivariant.hpp"
#include "hilbpts/error.hpp"
#include "hilbpts/goettsche.hpp"
#include "hilbpts/incidence.hpp"
#include "hilbpts/intersection.hpp"
#include "hilbpts/monomial.hpp"
#include "hilbpts/output.hpp"
#include "hilbpts/partition.hpp"
#include "hilbpts/verify.hpp"

namespace hilb::cli {

/// Malformed command line; reported with usage and exit status 2.
class usage_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<std::int64_t> parse_int_list(const std::string& text, std::size_t expected, const char* what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw usage_error(std::string("cannot parse ") + what + ": '" + text + "'");
        }
        if (used != item.size())
            throw usage_error(std::string("cannot parse ") + what + ": '" + text + "'");
        out.push_back(v);
    }
    if (out.size() != expected)
        throw usage_error(std::string(what) + " needs " + std::to_string(expected) + " comma-separated integers");
    return out;
}

inline void require_range(int value, int lo, int hi, const char* flag) {
    if (value < lo || value > hi)
        throw usage_error(std::string(flag) + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

} // namespace detail

struct Options {
    std::string format = "table";
    int n = 0;
    std::string space;
    std::string rho;
    std::string check = "all";
    std::string method = "both";
    int blowup = 0;
    bool square_exceptional = false;
    std::string base = "p2";
    std::string betti;
    int torder = 0;
    bool compare_fixed_points = false;
    bool all = false;
    int nmax = 0;
};

// ---------------------------------------------------------------------------
// Subcommands. Each fills an OutputRecord and returns the exit status.

inline int cmd_partitions(const Options& o, OutputRecord& rec) {
    detail::require_range(o.n, 0, 60, "--n");
    rec.parameters["n"] = std::to_string(o.n);
    const auto parts = enumerate_partitions(o.n);
    rec.scalar("count", static_cast<std::int64_t>(parts.size()));
    rec.columns = {"index", "partition", "length", "distinct_parts", "generators", "socle"};
    std::int64_t idx = 0;
    for (const Partition& p : parts)
        rec.row({idx++, p.to_string(), p.length(), p.distinct_parts(), strata_index(p, !p.empty()),
                 p.empty() ? 0 : socle_count(p)});
    return 0;
}

inline int cmd_betti(const Options& o, OutputRecord& rec) {
    rec.parameters["space"] = o.space;
    rec.parameters["n"] = std::to_string(o.n);
    PoincarePoly poly;
    std::string rho_text = "n/a";
    int retries = 0;
    if (o.space == "punctual") {
        detail::require_range(o.n, 1, 60, "--n");
        if (!o.rho.empty())
            throw usage_error("--rho does not apply to the punctual space");
        poly = poincare_punctual(o.n);
    } else if (o.space == "affine" || o.space == "p2") {
        detail::require_range(o.n, 0, o.space == "affine" ? 40 : 14, "--n");
        if (!o.rho.empty()) {
            const auto r = detail::parse_int_list(o.rho, 2, "--rho");
            const CharVector rho{r[0], r[1]};
            poly = o.space == "affine" ? poincare_affine(o.n, rho) : poincare_p2(o.n, rho);
            rho_text = rho.to_string();
        } else {
            const BettiResult res = o.space == "affine" ? poincare_affine_default(o.n) : poincare_p2_default(o.n);
            poly = res.poly;
            retries = res.retries;
            rho_text = res.rho.to_string() + " (default)";
        }
    } else {
        throw usage_error("--space must be affine, p2 or punctual");
    }
    rec.scalar("rho", rho_text);
    rec.scalar("rho_retries", retries);
    rec.scalar("polynomial", poly.to_string());
    rec.scalar("euler", poly.at_one());
    rec.columns = {"degree", "betti"};
    for (const auto& [deg, c] : poly.coefficients())
        rec.row({deg, c});
    return 0;
}

inline int cmd_incidence(const Options& o, OutputRecord& rec) {
    detail::require_range(o.n, 0, 40, "--n");
    if (o.check != "jumps" && o.check != "euler" && o.check != "fibers" && o.check != "all")
        throw usage_error("--check must be jumps, euler, fibers or all");
    rec.parameters["n"] = std::to_string(o.n);
    rec.parameters["check"] = o.check;
    rec.columns = {"n", "check", "value", "detail", "ok"};
    bool all_ok = true;
    const bool every = o.check == "all";
    for (int n = 0; n <= o.n; ++n) {
        if (every || o.check == "euler") {
            bool ok = true;
            IncidenceEuler e;
            std::string note;
            try {
                e = euler_incidence(n);
                note = "generators=" + std::to_string(e.generator_sum) + " socles=" + std::to_string(e.socle_sum);
            } catch (const invariant_violation& err) {
                ok = false;
                note = err.what();
            }
            all_ok = all_ok && ok;
            rec.row({n, "euler", e.pairs, note, ok});
        }
        if (n == 0)
            continue;
        if (every || o.check == "jumps") {
            const int jump = max_generator_jump(n);
            const bool ok = jump <= 1;
            all_ok = all_ok && ok;
            rec.row({n, "jumps", jump, "pairs=" + std::to_string(nested_pairs(n).size()), ok});
        }
        if (every || o.check == "fibers") {
            std::int64_t phi_side = 0, gamma_side = 0;
            bool ok = true;
            for (const Partition& l : enumerate_partitions(n))
                phi_side += phi_fiber_dim(l) + 1;
            for (const Partition& mu : enumerate_partitions(n + 1)) {
                ok = ok && gamma_fiber_dim(mu) == strata_index(mu, true) - 2;
                gamma_side += gamma_fiber_dim(mu) + 1;
            }
            const auto pairs = static_cast<std::int64_t>(nested_pairs(n).size());
            ok = ok && phi_side == pairs && gamma_side == pairs;
            all_ok = all_ok && ok;
            rec.row({n, "fibers", pairs,
                     "phi_sum=" + std::to_string(phi_side) + " gamma_sum=" + std::to_string(gamma_side), ok});
        }
    }
    rec.scalar("all_ok", all_ok);
    return all_ok ? 0 : 1;
}

inline int cmd_strata(const Options& o, OutputRecord& rec) {
    detail::require_range(o.n, 1, 80, "--n");
    rec.parameters["n"] = std::to_string(o.n);
    rec.columns = {"n", "i", "bound", "claimed", "codim", "required", "margin", "realized", "blowup_a", "blowup_b",
                   "status"};
    bool all_ok = true;
    auto opt = [](const std::optional<int>& v) { return v ? Cell(*v) : Cell("empty"); };
    for (const StrataBoundTable& t : strata_tables(o.n)) {
        const CodimReport report = check_codim_hypotheses(t);
        all_ok = all_ok && report.all_ok();
        for (const CodimEntry& e : report.entries)
            rec.row({t.n, e.i, opt(e.bound), t.claimed_bound(e.i), opt(e.codim), e.required, opt(e.margin), e.realized,
                     e.blowup_a, e.blowup_b, to_string(e.status)});
    }
    rec.scalar("all_ok", all_ok);
    return all_ok ? 0 : 1;
}

inline int cmd_nakajima(const Options& o, OutputRecord& rec) {
    detail::require_range(o.n, 1, 100000, "--n");
    if (o.method != "recurrence" && o.method != "closed" && o.method != "both")
        throw usage_error("--method must be recurrence, closed or both");
    rec.parameters["n"] = std::to_string(o.n);
    rec.parameters["method"] = o.method;
    const bool rec_on = o.method != "closed";
    const bool closed_on = o.method != "recurrence";
    std::optional<NakajimaSequence> seq;
    if (rec_on)
        seq = nakajima_recurrence(o.n);
    rec.columns.push_back("n");
    if (rec_on)
        rec.columns.push_back("recurrence");
    if (closed_on)
        rec.columns.push_back("closed");
    if (rec_on && closed_on)
        rec.columns.push_back("equal");
    bool all_equal = true;
    for (int n = 1; n <= o.n; ++n) {
        std::vector<Cell> row{n};
        if (rec_on)
            row.emplace_back(seq->c(n));
        if (closed_on)
            row.emplace_back(nakajima_closed_form(n));
        if (rec_on && closed_on) {
            const bool eq = seq->c(n) == nakajima_closed_form(n);
            all_equal = all_equal && eq;
            row.emplace_back(eq);
        }
        rec.row(std::move(row));
    }
    if (rec_on && closed_on)
        rec.scalar("all_equal", all_equal);
    return all_equal ? 0 : 1;
}

inline int cmd_lattice(const Options& o, OutputRecord& rec) {
    detail::require_range(o.blowup, 0, 10000, "--blowup");
    IntersectionLattice base;
    if (o.base == "p2")
        base = IntersectionLattice::projective_plane();
    else if (o.base == "rank0")
        base = IntersectionLattice::empty();
    else
        throw usage_error("--base must be p2 or rank0");
    rec.parameters["blowup"] = std::to_string(o.blowup);
    rec.parameters["base"] = o.base;
    if (o.square_exceptional) {
        if (o.blowup < 1)
            throw usage_error("--square-exceptional needs --blowup >= 1");
        rec.parameters["square_exceptional"] = "true";
        rec.scalar("exceptional_square", exceptional_total_square(o.blowup, base));
        return 0;
    }
    const IntersectionLattice lat = blow_up(base, o.blowup);
    rec.scalar("rank", lat.rank());
    rec.columns.push_back("class");
    for (const std::string& l : lat.labels())
        rec.columns.push_back(l);
    for (int i = 0; i < lat.rank(); ++i) {
        std::vector<Cell> row{lat.labels()[static_cast<std::size_t>(i)]};
        for (int j = 0; j < lat.rank(); ++j)
            row.emplace_back(lat.entry(i, j));
        rec.row(std::move(row));
    }
    return 0;
}

inline int cmd_goettsche(const Options& o, OutputRecord& rec) {
    detail::require_range(o.torder, 0, 40, "--torder");
    const auto b = detail::parse_int_list(o.betti, 5, "--betti");
    std::array<int, 5> betti{};
    for (std::size_t i = 0; i < 5; ++i) {
        if (b[i] < 0 || b[i] > 1000)
            throw usage_error("--betti entries must be in [0, 1000]");
        betti[i] = static_cast<int>(b[i]);
    }
    const SurfaceModel surface = SurfaceModel::from_betti(betti);
    const bool is_p2 = betti == std::array<int, 5>{1, 0, 1, 0, 1};
    if (o.compare_fixed_points) {
        if (!is_p2)
            throw usage_error("--compare-fixed-points is available for the P2 model 1,0,1,0,1 only");
        detail::require_range(o.torder, 0, 10, "--torder (with --compare-fixed-points)");
    }
    rec.parameters["betti"] = o.betti;
    rec.parameters["torder"] = std::to_string(o.torder);
    if (o.compare_fixed_points)
        rec.parameters["compare_fixed_points"] = "true";
    const GradedSeries series = goettsche_series(surface, o.torder);
    rec.columns = {"n", "poincare", "euler"};
    if (o.compare_fixed_points)
        rec.columns.insert(rec.columns.end(), {"fixed_points", "equal"});
    bool all_equal = true;
    for (int n = 0; n <= o.torder; ++n) {
        const PoincarePoly slice = series.slice(n);
        std::vector<Cell> row{n, slice.to_string(), slice.at_one()};
        if (o.compare_fixed_points) {
            const PoincarePoly fp = poincare_p2_default(n).poly;
            row.emplace_back(fp.to_string());
            row.emplace_back(fp == slice);
            all_equal = all_equal && fp == slice;
        }
        rec.row(std::move(row));
    }
    if (o.compare_fixed_points)
        rec.scalar("all_equal", all_equal);
    return all_equal ? 0 : 1;
}

inline int cmd_verify(const Options& o, OutputRecord& rec) {
    if (!o.all)
        throw usage_error("verify requires --all");
    detail::require_range(o.nmax, 1, 40, "--nmax");
    rec.parameters["all"] = "true";
    rec.parameters["nmax"] = std::to_string(o.nmax);
    const auto results = verify::run_checks(verify::invariant_checks(o.nmax), verify::thread_budget());
    rec.columns = {"check", "ok", "detail"};
    std::int64_t failed = 0;
    std::string manifest;
    for (const auto& r : results) {
        rec.row({r.name, r.ok, r.detail});
        if (!r.ok) {
            ++failed;
            manifest += (manifest.empty() ? "" : "; ") + r.name;
        }
    }
    rec.scalar("checks", static_cast<std::int64_t>(results.size()));
    rec.scalar("failed", failed);
    if (failed)
        rec.scalar("failure_manifest", manifest);
    return failed ? 1 : 0;
}

// ---------------------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact fixed-point, lattice and Fock-space computations for Hilbert schemes of points", "hilb"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    Options o;
    app.add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();

    auto* partitions = app.add_subcommand("partitions", "List partitions of n with their local invariants");
    partitions->add_option("--n", o.n, "Size")->required();

    auto* betti = app.add_subcommand("betti", "Betti numbers by Bialynicki-Birula cell counting");
    betti->add_option("--space", o.space, "affine | p2 | punctual")->required();
    betti->add_option("--n", o.n, "Number of points")->required();
    betti->add_option("--rho", o.rho, "One-parameter subgroup A,B (default (1, 2n^2+1))");

    auto* incidence = app.add_subcommand("incidence", "Fixed-point checks on the incidence variety");
    incidence->add_option("--n", o.n, "Largest n")->required();
    incidence->add_option("--check", o.check, "jumps | euler | fibers | all")->capture_default_str();

    auto* strata = app.add_subcommand("strata", "Strata dimension bounds and blow-up hypotheses");
    strata->add_option("--n", o.n, "Largest n")->required();

    auto* nakajima = app.add_subcommand("nakajima", "Nakajima constants c_1..c_n");
    nakajima->add_option("--n", o.n, "Largest n")->required();
    nakajima->add_option("--method", o.method, "recurrence | closed | both")->capture_default_str();

    auto* lattice = app.add_subcommand("lattice", "Divisor lattice of a blown-up surface");
    lattice->add_option("--blowup", o.blowup, "Number of points blown up")->required();
    lattice->add_flag("--square-exceptional", o.square_exceptional, "Print the square of the total exceptional class");
    lattice->add_option("--base", o.base, "p2 | rank0")->capture_default_str();

    auto* goettsche = app.add_subcommand("goettsche", "Generating series of Betti numbers");
    goettsche->add_option("--betti", o.betti, "B0,B1,B2,B3,B4")->required();
    goettsche->add_option("--torder", o.torder, "Truncation order in t")->required();
    goettsche->add_flag("--compare-fixed-points", o.compare_fixed_points, "Compare with P2 fixed-point counts");

    auto* verify_cmd = app.add_subcommand("verify", "Run the invariant suite");
    verify_cmd->add_flag("--all", o.all, "Run every check");
    verify_cmd->add_option("--nmax", o.nmax, "Largest size for combinatorial checks")->required();

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << kVersion << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    OutputRecord rec;
    const Format fmt = o.format == "json" ? Format::json : o.format == "csv" ? Format::csv : Format::table;
    CLI::App* sub = app.get_subcommands().front();
    rec.command = sub->get_name();
    int status = 0;
    try {
        if (sub == partitions)
            status = cmd_partitions(o, rec);
        else if (sub == betti)
            status = cmd_betti(o, rec);
        else if (sub == incidence)
            status = cmd_incidence(o, rec);
        else if (sub == strata)
            status = cmd_strata(o, rec);
        else if (sub == nakajima)
            status = cmd_nakajima(o, rec);
        else if (sub == lattice)
            status = cmd_lattice(o, rec);
        else if (sub == goettsche)
            status = cmd_goettsche(o, rec);
        else
            status = cmd_verify(o, rec);
    } catch (const usage_error& e) {
        err << "error: " << e.what() << "\n\n" << sub->help();
        return 2;
    } catch (const invalid_input& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const invariant_violation& e) {
        err << "invariant violated: " << e.what() << '\n';
        return 1;
    }
    write(out, rec, fmt);
    if (status == 1 && rec.command == "verify")
        err << "verify: failures in " << rec.scalars.back().second.repr << '\n';
    return status;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args, out, err);
}

} // namespace hilb::cli
