#pragma once

/**
 * @file elasticity.hpp
 * @brief Elasticity constructions for ℕ₀[α].
 *
 *  - `elasticity_lower_bound_sequence`: powers of the minimal-pair element
 *    β₁ = p(α) = q₀(α), whose two obvious factorizations bound ρ(βₙ) below.
 *  - `elasticity_formula`: ρ(ℕ₀[α]) = max{p(1)/q₀(1), q₀(1)/p(1)} when ℕ₀[α]
 *    has exactly deg+1 atoms; the hypothesis is checked, never assumed.
 *  - `forced_atom_shift`: adds an atom qⁿ large enough to occur in every
 *    factorization, mapping (min, max) lengths to (min+1, max+1).
 *  - `construct_elasticity`: an element with elasticity exactly s/t.
 *  - `elasticity_scan`: ρ(x) for every element up to a bound.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cyclofact/minimal_pair.hpp"
#include "cyclofact/semiring.hpp"

namespace cyclofact {

struct ElasticityTarget {
    Integer s;
    Integer t;

    ElasticityTarget(const Integer& s_, const Integer& t_) : s(s_), t(t_) {
        if (t < 1 || s < t) throw domain_error("elasticity target needs s >= t >= 1");
        if (gcd(s, t) != 1) throw domain_error("elasticity target s/t must be in lowest terms");
    }
    explicit ElasticityTarget(const Rat& r) : ElasticityTarget(r.num(), r.den()) {}

    [[nodiscard]] Rat value() const { return Rat(s, t); }
};

// ---------------------------------------------------------------------------
// Lower-bound sequence

struct LowerBoundTerm {
    unsigned n = 0;
    NatPoly short_factorization;  ///< (shorter minimal-pair side)ⁿ
    NatPoly long_factorization;   ///< (longer minimal-pair side)ⁿ
    std::optional<Rat> element;   ///< βₙ, when α is a known rational
    Rat bound;                    ///< (long(1)/short(1))ⁿ
    std::optional<Rat> exact_elasticity;
};

/// βₙ = β₁ⁿ with β₁ = p(α) = q₀(α). Exact ρ(βₙ) is computed when α is a
/// non-integer rational > 1.
inline LowerBoundTerm elasticity_lower_bound_sequence(const MinimalPair& mp, const std::optional<Rat>& alpha,
                                                      unsigned n) {
    if (n == 0) throw domain_error("lower-bound sequence index must be positive");
    const Integer p1 = mp.p.value_at_one();
    const Integer q1 = mp.q0.value_at_one();
    if (p1 == q1) throw domain_error("1 is a root; minimal pair degenerate");
    if (alpha && alpha->is_integer())
        throw domain_error("integer alpha gives the unique factorization monoid N0; no lower-bound sequence");

    const bool p_short = p1 < q1;
    LowerBoundTerm term;
    term.n = n;
    term.short_factorization = (p_short ? mp.p : mp.q0).pow(n);
    term.long_factorization = (p_short ? mp.q0 : mp.p).pow(n);
    term.bound = Rat(p_short ? q1 : p1, p_short ? p1 : q1).pow(n);
    if (alpha) {
        term.element = eval(term.short_factorization, *alpha);
        if (*alpha > Rat(1)) {
            const RationalBase base(*alpha);
            term.exact_elasticity = length_stats_of(base, term.short_factorization, false).elasticity;
        }
    }
    return term;
}

// ---------------------------------------------------------------------------
// Elasticity formula for |𝒜| = deg + 1

enum class FormulaStatus { value, inapplicable, inconclusive };

inline const char* to_string(FormulaStatus s) {
    switch (s) {
        case FormulaStatus::value: return "value";
        case FormulaStatus::inapplicable: return "inapplicable";
        case FormulaStatus::inconclusive: return "inconclusive";
    }
    return "?";
}

/// An isolating interval (lower, upper) for the designated positive root.
struct RootInterval {
    Rat lower;
    Rat upper;
};

struct FormulaResult {
    FormulaStatus status = FormulaStatus::inconclusive;
    std::optional<Rat> elasticity;
    std::vector<std::size_t> atom_exponents;  ///< exponents k with αᵏ confirmed an atom
    std::optional<std::size_t> first_decomposable;
    std::string reason;
};

namespace detail {

using Coords = std::vector<Rat>;

/// Coordinates of αᵏ in the power basis 1, α, …, α^{d−1}.
inline Coords power_coords(const RatPoly& minpoly, std::size_t k) {
    const std::size_t d = minpoly.degree();
    Coords v(d);
    const RatPoly r = remainder(RatPoly::monomial(k, Rat(1)), minpoly);
    for (const auto& [deg, c] : r.terms()) v[deg] = c;
    return v;
}

enum class Decomposition { atom, decomposable, undecided };

/// Whether αᵏ (α > 1) is an ℕ₀-combination of lower powers with at least
/// two terms. Only powers j ≥ d are free; the coefficients on 1…α^{d−1} are
/// then forced by the basis coordinates. Each free coefficient cⱼ is bounded
/// by ⌊upper^{k−j}⌋ since cⱼαʲ ≤ αᵏ.
inline Decomposition decompose_power(const RatPoly& minpoly, const Rat& upper, std::size_t k,
                                     std::size_t combination_budget) {
    const std::size_t d = minpoly.degree();
    const Coords target = power_coords(minpoly, k);
    std::vector<Coords> free_vecs;
    std::vector<Integer> bounds;
    Integer combos(1);
    for (std::size_t j = d; j < k; ++j) {
        free_vecs.push_back(power_coords(minpoly, j));
        bounds.push_back(upper.pow(k - j).floor());
        combos *= bounds.back() + 1;
        if (combos > combination_budget) return Decomposition::undecided;
    }
    std::vector<Integer> c(free_vecs.size(), Integer(0));
    while (true) {
        Coords rest = target;
        Integer length(0);
        for (std::size_t f = 0; f < c.size(); ++f) {
            length += c[f];
            if (c[f] == 0) continue;
            for (std::size_t i = 0; i < d; ++i) rest[i] -= Rat(c[f]) * free_vecs[f][i];
        }
        bool ok = true;
        for (const Rat& r : rest) {
            if (r.sign() < 0 || !r.is_integer()) {
                ok = false;
                break;
            }
            length += r.num();
        }
        if (ok && length >= 2) return Decomposition::decomposable;

        std::size_t f = 0;
        for (; f < c.size(); ++f) {
            if (c[f] < bounds[f]) {
                ++c[f];
                break;
            }
            c[f] = 0;
        }
        if (f == c.size()) return Decomposition::atom;
    }
}

inline int sign_at(const RatPoly& f, const Rat& x) { return eval(f, x).sign(); }

}  // namespace detail

inline FormulaResult elasticity_formula(const RatPoly& minpoly, RootInterval root, std::size_t atom_budget,
                                        std::size_t combination_budget = 1'000'000) {
    if (minpoly.is_zero() || !(minpoly.leading_coeff() == Rat(1)))
        throw domain_error("elasticity formula needs a monic minimal polynomial");
    const std::size_t d = minpoly.degree();
    if (d < 2) throw domain_error("elasticity formula needs degree >= 2 (rational alpha is handled exactly)");
    if (root.lower.sign() < 0 || !(root.lower < root.upper)) throw domain_error("root interval must satisfy 0 <= lower < upper");
    int s_lo = detail::sign_at(minpoly, root.lower);
    const int s_hi = detail::sign_at(minpoly, root.upper);
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi)
        throw domain_error("root interval does not isolate a root (no sign change at irrational root)");
    if (detail::sign_at(minpoly, Rat(1)) == 0) throw domain_error("1 is a root; polynomial is not irreducible");

    // Bisect: exclude 1 and tighten the upper bound used for coefficient caps.
    const Rat tight(Integer(1), Integer(1) << 40);
    while ((root.lower < Rat(1) && Rat(1) < root.upper) || tight < root.upper - root.lower) {
        const Rat mid = (root.lower + root.upper) / Rat(2);
        const int s_mid = detail::sign_at(minpoly, mid);
        if (s_mid == 0) throw domain_error("rational root " + mid.to_string() + " inside interval");
        if (s_mid == s_lo) {
            root.lower = mid;
        } else {
            root.upper = mid;
        }
    }

    FormulaResult res;
    if (root.upper <= Rat(1)) {
        res.status = FormulaStatus::inapplicable;
        res.reason = "alpha < 1: 0 is a limit point, so the monoid is not finitely generated and rho = infinity";
        return res;
    }
    for (std::size_t k = 0; k < d; ++k) res.atom_exponents.push_back(k);

    bool hypothesis_refuted = false;
    for (std::size_t k = d; k <= atom_budget; ++k) {
        const auto dec = detail::decompose_power(minpoly, root.upper, k, combination_budget);
        if (dec == detail::Decomposition::undecided) {
            if (hypothesis_refuted) break;
            res.status = FormulaStatus::inconclusive;
            res.reason = "coefficient search for alpha^" + std::to_string(k) + " exceeded the combination budget";
            return res;
        }
        if (dec == detail::Decomposition::decomposable) {
            res.first_decomposable = k;
            break;
        }
        res.atom_exponents.push_back(k);
        if (k == d + 1) hypothesis_refuted = true;
    }

    const std::size_t atoms = res.atom_exponents.size();
    if (res.first_decomposable == d) {
        res.status = FormulaStatus::inapplicable;
        res.reason = "unique factorization monoid: " + std::to_string(atoms) + " atoms = degree, rho = 1";
    } else if (res.first_decomposable == d + 1) {
        const MinimalPair mp = minimal_pair(minpoly);
        const Integer p1 = mp.p.value_at_one();
        const Integer q1 = mp.q0.value_at_one();
        res.status = FormulaStatus::value;
        res.elasticity = std::max(Rat(p1, q1), Rat(q1, p1));
        res.reason = "atoms are 1, alpha, ..., alpha^deg";
    } else if (res.first_decomposable) {
        res.status = FormulaStatus::inapplicable;
        res.reason = "finitely generated with " + std::to_string(atoms) + " atoms, not degree + 1";
    } else if (hypothesis_refuted) {
        res.status = FormulaStatus::inapplicable;
        res.reason = "alpha^" + std::to_string(d) + " ... alpha^" + std::to_string(res.atom_exponents.back()) +
                     " are all atoms: evidence of a non-finitely-generated monoid (rho = infinity)";
    } else {
        res.status = FormulaStatus::inconclusive;
        res.reason = "atom budget too small to decide alpha^" + std::to_string(d + 1);
    }
    return res;
}

// ---------------------------------------------------------------------------
// Forced-atom shift

struct ShiftResult {
    Rat element;
    NatPoly presentation;
    std::vector<std::size_t> forced_exponents;
};

/// Each shift adds qⁿ with the smallest n exceeding the presentation degree
/// such that qⁿ⁺¹ > qⁿ + β. Then qⁿ occurs in every factorization of β + qⁿ.
inline ShiftResult forced_atom_shift(const RationalBase& base, const Rat& beta, const NatPoly& presentation,
                                     std::size_t shifts) {
    if (base.is_integral()) throw domain_error("forced-atom shift needs a non-integer q > 1");
    if (presentation.is_zero() || beta.is_zero()) throw domain_error("forced-atom shift needs a nonzero element");
    if (!(eval(presentation, base.q()) == beta)) throw domain_error("presentation does not evaluate to beta");

    ShiftResult out{beta, presentation, {}};
    out.forced_exponents.reserve(shifts);
    const Rat q_minus_one = base.q() - Rat(1);
    std::size_t n = presentation.degree() + 1;
    Rat power = base.q().pow(n);
    for (std::size_t i = 0; i < shifts; ++i) {
        // qⁿ⁺¹ > qⁿ + β  ⟺  qⁿ(q − 1) > β
        while (!(out.element < power * q_minus_one)) {
            ++n;
            power *= base.q();
        }
        out.element += power;
        out.presentation.add_term(n, Integer(1));
        out.forced_exponents.push_back(n);
        ++n;
        power *= base.q();
    }
    return out;
}

// ---------------------------------------------------------------------------
// Full-elasticity construction

struct PowerScanRow {
    std::size_t k = 0;
    Integer min_len;          ///< ℓ_k = min 𝖫(aᵏ)
    Integer max_len;          ///< L_k = aᵏ
    std::size_t top_degree = 0;  ///< m_k, top degree of the min-length factorization
    std::size_t residue = 0;  ///< (t·L_k − s·ℓ_k) mod (s − t)
};

struct ConstructionLog {
    std::string route;  ///< trivial | single-power | power-window | integer-search
    std::size_t threshold = 0;  ///< N with q^N > s/t
    std::vector<PowerScanRow> scan;
    std::optional<std::size_t> residue;
    std::vector<std::size_t> chosen_indices;
    std::optional<Integer> power_route_shifts;  ///< c demanded by the power route
    Rat base_element;
    NatPoly base_presentation;
    Integer base_min_len;
    Integer base_max_len;
    Integer shift_count;
    std::vector<std::size_t> forced_exponents;
};

struct ElasticityCertificate {
    Rat q;
    Rat target;
    Rat element;
    NatPoly presentation;
    Integer min_len;
    Integer max_len;
    Rat achieved;
    ConstructionLog log;
};

struct ConstructionOptions {
    std::size_t scan_cap = 200;       ///< powers aᵏ scanned, k ∈ [N, N + scan_cap)
    std::size_t max_shifts = 4096;    ///< largest c applied literally
    std::size_t search_limit = 1u << 17;  ///< integer base elements tried by the fallback
};

namespace detail {

inline Integer min_length_of_integer(const RationalBase& base, const Integer& n) {
    return up_normal_form(base, NatPoly::constant(n)).value_at_one();
}

inline std::string residue_table(const std::vector<PowerScanRow>& rows) {
    std::ostringstream os;
    os << "residue table (k:r_k):";
    for (const auto& r : rows) os << ' ' << r.k << ':' << r.residue;
    return os.str();
}

}  // namespace detail

/// An element of ℕ₀[q] whose elasticity is exactly s/t, with the steps that
/// produced it.
///
/// Any β with s − t | t·L − s·ℓ (ℓ, L its min and max lengths, tL ≥ sℓ)
/// yields one: c = (tL − sℓ)/(s − t) forced-atom shifts give (L+c)/(ℓ+c) =
/// s/t. The base β is sought among sums of powers aᵏ, k ≥ N: a single aᵏ
/// with residue 0, or s − t powers sharing a residue whose min-length
/// factorizations occupy disjoint degree windows (so their min lengths add).
/// When that β needs more than `max_shifts` shifts, the integer n ≤
/// `search_limit` needing the fewest shifts is used instead.
inline ElasticityCertificate construct_elasticity(const RationalBase& base, const ElasticityTarget& target,
                                                  const ConstructionOptions& opt = {}) {
    if (base.is_integral() || base.b() < 2)
        throw domain_error("full-elasticity construction needs q = a/b with a > b >= 2");
    const Integer& s = target.s;
    const Integer& t = target.t;
    const Rat goal = target.value();

    ElasticityCertificate cert;
    cert.q = base.q();
    cert.target = goal;
    ConstructionLog& log = cert.log;

    if (s == t) {
        log.route = "trivial";
        log.base_element = Rat(1);
        log.base_presentation = NatPoly::constant(Integer(1));
        log.base_min_len = 1;
        log.base_max_len = 1;
        log.shift_count = 0;
        cert.element = Rat(1);
        cert.presentation = log.base_presentation;
        cert.min_len = 1;
        cert.max_len = 1;
        cert.achieved = Rat(1);
        return cert;
    }

    const Integer gap = s - t;
    const Integer& a = base.a();

    log.threshold = 1;
    for (Rat p = base.q(); p <= goal; p *= base.q()) ++log.threshold;

    // Min-length factorization of aᵏ, maintained incrementally: aᵏ⁺¹ = a·aᵏ.
    NatPoly min_fact = NatPoly::constant(Integer(1));
    Integer power_of_a(1);
    const std::size_t last_k = log.threshold + opt.scan_cap;
    std::map<std::size_t, std::vector<std::size_t>> buckets;  // residue -> chosen rows
    std::optional<std::size_t> done_residue;
    for (std::size_t k = 1; k < last_k && !done_residue; ++k) {
        min_fact = up_normal_form(base, min_fact.scaled(a));
        power_of_a *= a;
        if (k < log.threshold) continue;

        PowerScanRow row;
        row.k = k;
        row.min_len = min_fact.value_at_one();
        row.max_len = power_of_a;
        row.top_degree = min_fact.degree();
        row.residue = mod(t * row.max_len - s * row.min_len, gap).get_ui();
        log.scan.push_back(row);
        const std::size_t idx = log.scan.size() - 1;

        if (row.residue == 0) {
            buckets[0] = {idx};
            done_residue = 0;
            break;
        }
        auto& bucket = buckets[row.residue];
        if (bucket.empty() || row.k > log.scan[bucket.back()].top_degree) bucket.push_back(idx);
        if (Integer(bucket.size()) == gap) done_residue = row.residue;
    }
    if (!done_residue)
        throw budget_exhausted("scan cap " + std::to_string(opt.scan_cap) + " exhausted before " + gap.get_str() +
                               " window-compatible powers shared a residue; " + detail::residue_table(log.scan));

    log.residue = *done_residue;
    Integer ell(0), big_l(0);
    for (std::size_t idx : buckets[*done_residue]) {
        log.chosen_indices.push_back(log.scan[idx].k);
        ell += log.scan[idx].min_len;
        big_l += log.scan[idx].max_len;
    }
    const Integer c_power = (t * big_l - s * ell) / gap;
    log.power_route_shifts = c_power;

    if (c_power <= opt.max_shifts) {
        log.route = log.chosen_indices.size() == 1 ? "single-power" : "power-window";
        log.base_element = Rat(big_l);
        log.base_presentation = NatPoly::constant(big_l);
        log.base_min_len = ell;
        log.base_max_len = big_l;
        log.shift_count = c_power;
    } else {
        // Integer n: L(n) = n (n copies of the atom 1), ℓ(n) from the up normal form.
        std::optional<Integer> best_c;
        Integer best_n, best_ell;
        for (std::size_t n = 1; n <= opt.search_limit; ++n) {
            const Integer nn(static_cast<unsigned long>(n));
            const Integer l = detail::min_length_of_integer(base, nn);
            const Integer v = t * nn - s * l;
            if (v < 0 || mod(v, gap) != 0) continue;
            const Integer c = v / gap;
            if (!best_c || c < *best_c) {
                best_c = c;
                best_n = nn;
                best_ell = l;
                if (c == 0) break;
            }
        }
        if (!best_c || *best_c > opt.max_shifts)
            throw budget_exhausted("power route needs " + c_power.get_str() + " shifts and no integer base up to " +
                                   std::to_string(opt.search_limit) + " needs at most " +
                                   std::to_string(opt.max_shifts));
        log.route = "integer-search";
        log.base_element = Rat(best_n);
        log.base_presentation = NatPoly::constant(best_n);
        log.base_min_len = best_ell;
        log.base_max_len = best_n;
        log.shift_count = *best_c;
    }

    const ShiftResult shifted =
        forced_atom_shift(base, log.base_element, log.base_presentation, to_ulong(log.shift_count, "shift count"));
    log.forced_exponents = shifted.forced_exponents;
    cert.element = shifted.element;
    cert.presentation = shifted.presentation;
    cert.min_len = log.base_min_len + log.shift_count;
    cert.max_len = log.base_max_len + log.shift_count;
    cert.achieved = Rat(cert.max_len, cert.min_len);
    if (!(cert.achieved == goal))
        throw std::logic_error("construction reached " + cert.achieved.to_string() + " instead of " + goal.to_string());
    return cert;
}

// ---------------------------------------------------------------------------
// Elasticity scan

struct ScanRow {
    Rat value;
    Integer min_len;
    Integer max_len;
    Rat elasticity;
};

struct ScanTable {
    std::vector<ScanRow> rows;  ///< sorted by value
    bool complete = true;
};

/// ρ(x) for every nonzero x ∈ ℕ₀[q] with x ≤ value_bound. Stops generating
/// once more than `budget` elements exist and flags the table partial.
inline ScanTable elasticity_scan(const RationalBase& base, const Rat& value_bound, std::size_t budget,
                                 unsigned threads = 1) {
    if (base.is_integral() || base.b() < 2) throw domain_error("elasticity scan needs q = a/b with a > b >= 2");
    if (budget == 0) throw domain_error("scan budget must be positive");
    ScanTable table;
    std::map<Rat, NatPoly> elems{{Rat(0), NatPoly{}}};
    if (value_bound >= Rat(1)) {
        const std::size_t top = max_exponent(base, value_bound);
        Rat atom(1);
        for (std::size_t i = 0; i <= top && table.complete; ++i, atom *= base.q()) {
            std::vector<std::pair<Rat, NatPoly>> current(elems.begin(), elems.end());
            for (const auto& [v, p] : current) {
                Integer m(1);
                for (Rat x = v + atom; x <= value_bound; x += atom, ++m) {
                    if (elems.contains(x)) continue;
                    if (elems.size() > budget) {
                        table.complete = false;
                        break;
                    }
                    elems.emplace(x, p + NatPoly::monomial(i, m));
                }
                if (!table.complete) break;
            }
        }
    }
    elems.erase(Rat(0));

    std::vector<std::pair<Rat, NatPoly>> items(elems.begin(), elems.end());
    table.rows.resize(items.size());
    const auto work = [&](std::size_t begin, std::size_t stride) {
        for (std::size_t i = begin; i < items.size(); i += stride) {
            const LengthStats st = length_stats_of(base, items[i].second, false);
            table.rows[i] = ScanRow{items[i].first, st.min_len, st.max_len, st.elasticity};
        }
    };
    threads = std::max(1u, threads);
    if (threads == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w, threads);
    }
    return table;
}

}  // namespace cyclofact
