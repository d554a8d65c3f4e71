#pragma once

/**
 * @file cli.hpp
 * @brief The `cyclofact` command-line front end.
 *
 * `run` parses argv, executes one subcommand and writes a single document
 * to `out`. Exit status: 0 success, 1 domain or usage error (error JSON on
 * `err`), 2 budget exhaustion.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyclofact/csv.hpp"
#include "cyclofact/json.hpp"
#include "cyclofact/poly_io.hpp"

namespace cyclofact::cli {

enum class Subcommand {
    minimal_pair,
    member,
    factorize,
    lengths,
    elasticity_scan,
    construct_elasticity,
    omega_interval,
    antiprime,
};

enum class OutputFormat { json, csv };

struct Budgets {
    std::size_t oracle_cap = kDefaultOracleCap;
    std::size_t scan_cap = 200;
};

struct RunConfig {
    Subcommand subcommand = Subcommand::minimal_pair;
    std::optional<Rat> q;
    Budgets budgets;
    OutputFormat output = OutputFormat::json;
    std::optional<std::string> out_path;
    unsigned threads = 1;
};

/// A domain error attributable to one command-line flag.
class flag_error : public domain_error {
public:
    flag_error(std::string flag, const std::string& what) : domain_error(what), flag_(std::move(flag)) {}
    [[nodiscard]] const std::string& flag() const { return flag_; }

private:
    std::string flag_;
};

namespace detail {

inline Rat parse_flag_rat(const std::string& text, const std::string& flag) {
    try {
        return Rat::parse(text);
    } catch (const domain_error&) {
        throw flag_error(flag, "malformed rational for " + flag + ": '" + text + "'");
    }
}

/// Factorization commands: q > 1 non-integer, or an integer q ≥ 1 (UFM).
inline RationalBase factor_base(const Rat& q) {
    if (q < Rat(1))
        throw flag_error("--q", "regime mismatch for --q: factorization commands need q >= 1, got " + q.to_string());
    return RationalBase(q);
}

inline RationalBase strict_base(const Rat& q) {
    if (q <= Rat(1) || q.is_integer())
        throw flag_error("--q", "regime mismatch for --q: need a non-integer q > 1, got " + q.to_string());
    return RationalBase(q);
}

inline std::size_t env_oracle_cap() {
    if (const char* v = std::getenv("CYCLOFACT_ORACLE_CAP")) {
        try {
            std::size_t used = 0;
            const unsigned long long cap = std::stoull(v, &used);
            if (used == std::string(v).size() && cap > 0) return static_cast<std::size_t>(cap);
        } catch (const std::exception&) {
        }
        throw flag_error("CYCLOFACT_ORACLE_CAP", std::string("CYCLOFACT_ORACLE_CAP must be a positive integer, got '") +
                                                     v + "'");
    }
    return kDefaultOracleCap;
}

inline LengthReport length_report(const RationalBase& base, const Rat& value, bool enumerate, std::size_t cap) {
    if (value.sign() <= 0) throw flag_error("--value", "--value must be positive, got " + value.to_string());
    auto witness = is_member(base, value, cap);
    if (!witness)
        throw flag_error("--value", value.to_string() + " is not an element of N0[" + base.q().to_string() + "]");
    LengthReport r;
    r.q = base.q();
    r.value = value;
    r.stats = length_stats_of(base, *witness, enumerate, cap);
    r.min_factorization = up_normal_form(base, *witness);
    r.max_factorization = down_normal_form(base, *witness);
    if (enumerate) r.factorizations = enumerate_factorizations(base, value, cap);
    return r;
}

inline void emit_error(std::ostream& err, const std::string& kind, const std::string& message,
                       const std::optional<std::string>& flag = std::nullopt) {
    json j{{"error", kind}, {"message", message}};
    if (flag) j["flag"] = *flag;
    err << j.dump() << '\n';
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Factorization invariants of N0[q] and interval Puiseux monoids", "cyclofact"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string q_text, value_text, rational_text, poly_text, target_text, bound_text, atom_text, format_text = "csv";
    std::size_t oracle_cap = 0, max_shifts = ConstructionOptions{}.max_shifts,
                search_limit = ConstructionOptions{}.search_limit, scan_budget = 1'000'000, k = 0;
    std::string big_k_text;
    bool enumerate = false, with_chain = false;

    app.add_option("--oracle-cap", oracle_cap, "Enumeration budget (frontier states)")->check(CLI::PositiveNumber);

    auto* mp = app.add_subcommand("minimal-pair", "Minimal pair of a monic polynomial or a positive rational");
    mp->add_option("polynomial", poly_text, "Monic polynomial, e.g. \"X^2 - 3X + 1\"");
    mp->add_option("--rational", rational_text, "Positive rational q (minimal pair of X - q)");

    auto* member = app.add_subcommand("member", "Decide x in N0[q] with a witness factorization");
    member->add_option("--q", q_text)->required();
    member->add_option("--value", value_text)->required();

    auto* fact = app.add_subcommand("factorize", "Min/max-length factorizations (optionally all)");
    fact->add_option("--q", q_text)->required();
    fact->add_option("--value", value_text)->required();
    fact->add_flag("--enumerate", enumerate, "Enumerate the full factorization set");

    auto* lengths = app.add_subcommand("lengths", "Length statistics and elasticity of an element");
    lengths->add_option("--q", q_text)->required();
    lengths->add_option("--value", value_text)->required();
    lengths->add_flag("--enumerate", enumerate, "Include the full length set");

    auto* scan = app.add_subcommand("elasticity-scan", "Tabulate rho(x) for every element up to a bound");
    scan->add_option("--q", q_text)->required();
    scan->add_option("--bound", bound_text)->required();
    scan->add_option("--out", cfg.out_path, "CSV output file (stdout when absent)");
    scan->add_option("--budget", scan_budget, "Maximum number of elements")->check(CLI::PositiveNumber);
    scan->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
    scan->add_option("--format", format_text)->check(CLI::IsMember({"csv", "json"}));

    auto* construct = app.add_subcommand("construct-elasticity", "Element of N0[q] with elasticity exactly s/t");
    construct->add_option("--q", q_text)->required();
    construct->add_option("--target", target_text)->required();
    construct->add_option("--scan-cap", cfg.budgets.scan_cap)->check(CLI::PositiveNumber);
    construct->add_option("--max-shifts", max_shifts)->check(CLI::PositiveNumber);
    construct->add_option("--search-limit", search_limit)->check(CLI::PositiveNumber);

    auto* omega = app.add_subcommand("omega-interval", "omega(a) in the interval monoid <[1,q]>");
    omega->add_option("--q", q_text)->required();
    omega->add_option("--atom", atom_text)->required();

    auto* anti = app.add_subcommand("antiprime", "Certificate that omega(q^k) > K in N0[q], 0 < q < 1");
    anti->add_option("--q", q_text)->required();
    anti->add_option("--k", k)->required();
    anti->add_option("--K", big_k_text)->required();
    anti->add_flag("--chain", with_chain, "Include the full witness chain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        detail::emit_error(err, "usage", e.what());
        return 1;
    }

    try {
        cfg.budgets.oracle_cap = oracle_cap ? oracle_cap : detail::env_oracle_cap();
        if (!q_text.empty()) cfg.q = detail::parse_flag_rat(q_text, "--q");
        const std::size_t cap = cfg.budgets.oracle_cap;
        json doc;

        if (mp->parsed()) {
            cfg.subcommand = Subcommand::minimal_pair;
            if (poly_text.empty() == rational_text.empty())
                throw flag_error("--rational", "minimal-pair takes exactly one of a polynomial or --rational");
            MinimalPair pair;
            if (!rational_text.empty()) {
                pair = minimal_pair_of_rational(detail::parse_flag_rat(rational_text, "--rational"));
            } else {
                RatPoly f;
                try {
                    f = parse_polynomial(poly_text);
                } catch (const domain_error& e) {
                    throw flag_error("polynomial", e.what());
                }
                pair = minimal_pair(f);
            }
            doc = pair;
        } else if (member->parsed()) {
            cfg.subcommand = Subcommand::member;
            const RationalBase base = detail::factor_base(*cfg.q);
            const Rat x = detail::parse_flag_rat(value_text, "--value");
            if (x.sign() < 0) throw flag_error("--value", "--value must be nonnegative");
            const auto w = is_member(base, x, cap);
            doc = json{{"q", base.q()}, {"value", x}, {"member", w.has_value()}};
            doc["witness"] = w ? json(*w) : json(nullptr);
        } else if (fact->parsed() || lengths->parsed()) {
            cfg.subcommand = fact->parsed() ? Subcommand::factorize : Subcommand::lengths;
            const RationalBase base = detail::factor_base(*cfg.q);
            const Rat x = detail::parse_flag_rat(value_text, "--value");
            LengthReport r = detail::length_report(base, x, enumerate, cap);
            if (cfg.subcommand == Subcommand::lengths) r.factorizations.reset();
            doc = r;
        } else if (scan->parsed()) {
            cfg.subcommand = Subcommand::elasticity_scan;
            cfg.output = format_text == "json" ? OutputFormat::json : OutputFormat::csv;
            const RationalBase base = detail::strict_base(*cfg.q);
            const Rat bound = detail::parse_flag_rat(bound_text, "--bound");
            const ScanTable table = elasticity_scan(base, bound, scan_budget, cfg.threads);
            if (cfg.output == OutputFormat::csv) {
                if (cfg.out_path) {
                    std::ofstream f(*cfg.out_path);
                    if (!f) throw flag_error("--out", "cannot open --out file '" + *cfg.out_path + "'");
                    write_scan_csv(f, table);
                    doc = json{{"q", base.q()},      {"bound", bound}, {"rows", table.rows.size()},
                               {"complete", table.complete}, {"out", *cfg.out_path}};
                } else {
                    write_scan_csv(out, table);
                    return table.complete ? 0 : 2;
                }
            } else {
                json rows = json::array();
                for (const auto& r : table.rows)
                    rows.push_back(json{{"value", r.value},
                                        {"min_length", integer_to_json(r.min_len)},
                                        {"max_length", integer_to_json(r.max_len)},
                                        {"elasticity", r.elasticity}});
                doc = json{{"q", base.q()}, {"bound", bound}, {"complete", table.complete}, {"rows", rows}};
            }
            out << doc.dump() << '\n';
            return table.complete ? 0 : 2;
        } else if (construct->parsed()) {
            cfg.subcommand = Subcommand::construct_elasticity;
            const RationalBase base = detail::strict_base(*cfg.q);
            const Rat target_value = detail::parse_flag_rat(target_text, "--target");
            if (target_value < Rat(1)) throw flag_error("--target", "--target must be >= 1");
            ConstructionOptions opt;
            opt.scan_cap = cfg.budgets.scan_cap;
            opt.max_shifts = max_shifts;
            opt.search_limit = search_limit;
            doc = construct_elasticity(base, ElasticityTarget(target_value), opt);
        } else if (omega->parsed()) {
            cfg.subcommand = Subcommand::omega_interval;
            if (!(Rat(1) < *cfg.q && *cfg.q < Rat(2)))
                throw flag_error("--q", "regime mismatch for --q: omega-interval needs 1 < q < 2, got " +
                                            cfg.q->to_string());
            const IntervalMonoid m(*cfg.q);
            const Rat a = detail::parse_flag_rat(atom_text, "--atom");
            if (a < Rat(1) || *cfg.q < a) throw flag_error("--atom", "--atom must lie in [1, q]");
            doc = omega_interval_atom(m, a);
            doc["q"] = m.q();
            doc["atom"] = a;
        } else if (anti->parsed()) {
            cfg.subcommand = Subcommand::antiprime;
            if (!(Rat(0) < *cfg.q && *cfg.q < Rat(1)))
                throw flag_error("--q", "regime mismatch for --q: antiprime needs 0 < q < 1, got " + cfg.q->to_string());
            const Rat big_k = detail::parse_flag_rat(big_k_text, "--K");
            if (!big_k.is_integer() || big_k < Rat(1)) throw flag_error("--K", "--K must be a positive integer");
            const OmegaWitness w = omega_lower_bound(*cfg.q, k, big_k.num());
            doc = w;
            doc["checks"] = check_witness(w);
            if (with_chain) doc["chain"] = antiprime_witness_chain(*cfg.q, k, w.depth - k);
        }
        out << doc.dump() << '\n';
        return 0;
    } catch (const flag_error& e) {
        detail::emit_error(err, "domain_error", e.what(), e.flag());
        return 1;
    } catch (const domain_error& e) {
        detail::emit_error(err, "domain_error", e.what());
        return 1;
    } catch (const budget_exhausted& e) {
        detail::emit_error(err, "budget_exhausted", e.what());
        return 2;
    }
}

}  // namespace cyclofact::cli
