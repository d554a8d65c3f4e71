#pragma once

// JSON forms of the library's value and result types.
//
// Rationals are strings ("3/2", "9"). Integers are JSON numbers when they fit
// in int64 and decimal strings otherwise. Polynomials are arrays of
// [degree, coefficient] pairs sorted by degree.

#include <nlohmann/json.hpp>

#include "cyclofact/elasticity.hpp"
#include "cyclofact/minimal_pair.hpp"
#include "cyclofact/omega.hpp"
#include "cyclofact/semiring.hpp"

namespace cyclofact {

using json = nlohmann::json;

inline json integer_to_json(const Integer& n) {
    if (n.fits_slong_p()) return json(static_cast<std::int64_t>(n.get_si()));
    return json(n.get_str());
}

inline Integer integer_from_json(const json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
    if (j.is_number_integer()) return Integer(j.get<long>());
    throw domain_error("expected an integer in JSON, got " + j.dump());
}

inline void to_json(json& j, const Rat& r) { j = r.to_string(); }
inline void from_json(const json& j, Rat& r) { r = Rat::parse(j.get<std::string>()); }

template <class Ring>
void to_json(json& j, const SparsePoly<Ring>& f) {
    j = json::array();
    for (const auto& [d, c] : f.terms()) {
        if constexpr (std::is_same_v<typename Ring::coeff_type, Rat>) {
            j.push_back(json::array({d, c.to_string()}));
        } else {
            j.push_back(json::array({d, integer_to_json(c)}));
        }
    }
}

template <class Ring>
void from_json(const json& j, SparsePoly<Ring>& f) {
    f = SparsePoly<Ring>{};
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2) throw domain_error("polynomial term must be [degree, coefficient]");
        const auto d = term[0].get<std::size_t>();
        if constexpr (std::is_same_v<typename Ring::coeff_type, Rat>) {
            f.add_term(d, term[1].is_string() ? Rat::parse(term[1].get<std::string>()) : Rat(integer_from_json(term[1])));
        } else {
            f.add_term(d, integer_from_json(term[1]));
        }
    }
}

inline json integers_to_json(const std::vector<Integer>& v) {
    json a = json::array();
    for (const auto& n : v) a.push_back(integer_to_json(n));
    return a;
}

inline std::vector<Integer> integers_from_json(const json& j) {
    std::vector<Integer> v;
    for (const auto& e : j) v.push_back(integer_from_json(e));
    return v;
}

// --- minimal pair ---------------------------------------------------------

inline void to_json(json& j, const MinimalPair& mp) {
    j = json{{"ell", integer_to_json(mp.ell)}, {"p", mp.p}, {"q0", mp.q0}};
}
inline void from_json(const json& j, MinimalPair& mp) {
    mp.ell = integer_from_json(j.at("ell"));
    j.at("p").get_to(mp.p);
    j.at("q0").get_to(mp.q0);
}

// --- lengths --------------------------------------------------------------

/// Output of `factorize` / `lengths`.
struct LengthReport {
    Rat q;
    Rat value;
    LengthStats stats;
    Factorization min_factorization;
    Factorization max_factorization;
    std::optional<std::vector<Factorization>> factorizations;

    friend bool operator==(const LengthReport&, const LengthReport&) = default;
};

inline void to_json(json& j, const LengthReport& r) {
    j = json{{"q", r.q},
             {"value", r.value},
             {"min_length", integer_to_json(r.stats.min_len)},
             {"max_length", integer_to_json(r.stats.max_len)},
             {"elasticity", r.stats.elasticity}};
    if (r.stats.length_set) j["length_set"] = integers_to_json(*r.stats.length_set);
    j["min_factorization"] = r.min_factorization;
    j["max_factorization"] = r.max_factorization;
    if (r.factorizations) j["factorizations"] = *r.factorizations;
}

inline void from_json(const json& j, LengthReport& r) {
    j.at("q").get_to(r.q);
    j.at("value").get_to(r.value);
    r.stats.min_len = integer_from_json(j.at("min_length"));
    r.stats.max_len = integer_from_json(j.at("max_length"));
    j.at("elasticity").get_to(r.stats.elasticity);
    r.stats.length_set.reset();
    if (j.contains("length_set")) r.stats.length_set = integers_from_json(j.at("length_set"));
    j.at("min_factorization").get_to(r.min_factorization);
    j.at("max_factorization").get_to(r.max_factorization);
    r.factorizations.reset();
    if (j.contains("factorizations")) r.factorizations = j.at("factorizations").get<std::vector<Factorization>>();
}

// --- elasticity -----------------------------------------------------------

inline void to_json(json& j, const PowerScanRow& r) {
    j = json{{"k", r.k},
             {"min_length", integer_to_json(r.min_len)},
             {"max_length", integer_to_json(r.max_len)},
             {"top_degree", r.top_degree},
             {"residue", r.residue}};
}
inline void from_json(const json& j, PowerScanRow& r) {
    j.at("k").get_to(r.k);
    r.min_len = integer_from_json(j.at("min_length"));
    r.max_len = integer_from_json(j.at("max_length"));
    j.at("top_degree").get_to(r.top_degree);
    j.at("residue").get_to(r.residue);
}

inline void to_json(json& j, const ConstructionLog& log) {
    j = json{{"route", log.route},
             {"threshold_N", log.threshold},
             {"scan", log.scan},
             {"chosen_indices", log.chosen_indices},
             {"base_element", log.base_element},
             {"base_presentation", log.base_presentation},
             {"base_min_length", integer_to_json(log.base_min_len)},
             {"base_max_length", integer_to_json(log.base_max_len)},
             {"shift_count", integer_to_json(log.shift_count)},
             {"forced_exponents", log.forced_exponents}};
    j["residue"] = log.residue ? json(*log.residue) : json(nullptr);
    j["power_route_shifts"] = log.power_route_shifts ? integer_to_json(*log.power_route_shifts) : json(nullptr);
}
inline void from_json(const json& j, ConstructionLog& log) {
    j.at("route").get_to(log.route);
    j.at("threshold_N").get_to(log.threshold);
    j.at("scan").get_to(log.scan);
    j.at("chosen_indices").get_to(log.chosen_indices);
    j.at("base_element").get_to(log.base_element);
    j.at("base_presentation").get_to(log.base_presentation);
    log.base_min_len = integer_from_json(j.at("base_min_length"));
    log.base_max_len = integer_from_json(j.at("base_max_length"));
    log.shift_count = integer_from_json(j.at("shift_count"));
    j.at("forced_exponents").get_to(log.forced_exponents);
    log.residue.reset();
    if (!j.at("residue").is_null()) log.residue = j.at("residue").get<std::size_t>();
    log.power_route_shifts.reset();
    if (!j.at("power_route_shifts").is_null()) log.power_route_shifts = integer_from_json(j.at("power_route_shifts"));
}

inline void to_json(json& j, const ElasticityCertificate& c) {
    j = json{{"q", c.q},
             {"target", c.target},
             {"element", c.element},
             {"presentation", c.presentation},
             {"min_length", integer_to_json(c.min_len)},
             {"max_length", integer_to_json(c.max_len)},
             {"achieved", c.achieved},
             {"log", c.log}};
}
inline void from_json(const json& j, ElasticityCertificate& c) {
    j.at("q").get_to(c.q);
    j.at("target").get_to(c.target);
    j.at("element").get_to(c.element);
    j.at("presentation").get_to(c.presentation);
    c.min_len = integer_from_json(j.at("min_length"));
    c.max_len = integer_from_json(j.at("max_length"));
    j.at("achieved").get_to(c.achieved);
    j.at("log").get_to(c.log);
}

inline void to_json(json& j, const FormulaResult& r) {
    j = json{{"status", to_string(r.status)}, {"atom_exponents", r.atom_exponents}, {"reason", r.reason}};
    j["elasticity"] = r.elasticity ? json(*r.elasticity) : json(nullptr);
    j["first_decomposable"] = r.first_decomposable ? json(*r.first_decomposable) : json(nullptr);
}

// --- omega ----------------------------------------------------------------

inline void to_json(json& j, const DivisibilityCertificate& c) {
    j = json{{"dividend", c.dividend}, {"divisor", c.divisor}, {"quotient", c.quotient_presentation}};
}
inline void from_json(const json& j, DivisibilityCertificate& c) {
    j.at("dividend").get_to(c.dividend);
    j.at("divisor").get_to(c.divisor);
    j.at("quotient").get_to(c.quotient_presentation);
}

inline void to_json(json& j, const OmegaIntervalResult& r) {
    j = json{{"conductor", integer_to_json(r.conductor)},
             {"n", integer_to_json(r.n)},
             {"omega", integer_to_json(r.omega)},
             {"interval", {{"lower", r.lower}, {"upper", r.upper}}},
             {"witness_b", r.witness},
             {"checks", {{"not_divides", r.not_divides_check}, {"divides", r.divides_check}}}};
}
inline void from_json(const json& j, OmegaIntervalResult& r) {
    r.conductor = integer_from_json(j.at("conductor"));
    r.n = integer_from_json(j.at("n"));
    r.omega = integer_from_json(j.at("omega"));
    j.at("interval").at("lower").get_to(r.lower);
    j.at("interval").at("upper").get_to(r.upper);
    j.at("witness_b").get_to(r.witness);
    j.at("checks").at("not_divides").get_to(r.not_divides_check);
    j.at("checks").at("divides").get_to(r.divides_check);
}

inline void to_json(json& j, const WitnessChecks& c) {
    j = json{{"value_match", c.value_match},
             {"support_at_least_N", c.support_at_least_depth},
             {"bound", c.bound},
             {"certificate", c.certificate}};
}

inline void to_json(json& j, const OmegaWitness& w) {
    j = json{{"q", w.q},
             {"k", w.atom_power},
             {"K", integer_to_json(w.bound)},
             {"N", w.depth},
             {"x", w.x},
             {"presentation", w.x_presentation},
             {"certificate", w.certificate}};
}
inline void from_json(const json& j, OmegaWitness& w) {
    j.at("q").get_to(w.q);
    j.at("k").get_to(w.atom_power);
    w.bound = integer_from_json(j.at("K"));
    j.at("N").get_to(w.depth);
    j.at("x").get_to(w.x);
    j.at("presentation").get_to(w.x_presentation);
    j.at("certificate").get_to(w.certificate);
}

inline void to_json(json& j, const ChainLink& l) {
    j = json{{"beta", l.beta}, {"presentation", l.presentation}, {"certificate", l.from_atom}};
    j["step"] = l.step ? json(*l.step) : json(nullptr);
}

}  // namespace cyclofact
