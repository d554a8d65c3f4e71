#pragma once

/**
 * @file omega.hpp
 * @brief Omega-primality: interval Puiseux monoids and anti-prime witnesses.
 *
 * For M_q = ⟨[1, q] ∩ ℚ⟩ with 1 < q < 2 the conductor is c = ⌈1/(q−1)⌉ and
 * every atom a has ω(a) = c + ⌈a⌉. The lower bound is certified by an atom b
 * with a ∤ (c+n−1)·b but a | (c+n)·b.
 *
 * For ℕ₀[q] with 0 < q < 1, divisibility is never searched for (atoms
 * accumulate at 0). Instead qᵏ | βₙ is carried as a certificate built along
 * the chain βₙ₊₁ = m·q^{k+n}·q₀(q) + β′ₙ₊₁, whose presentation moves the
 * level-(k+n) mass up one level through the minimal pair (bX, a).
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "cyclofact/minimal_pair.hpp"
#include "cyclofact/polynomial.hpp"

namespace cyclofact {

// ---------------------------------------------------------------------------
// Interval monoids M_q

class IntervalMonoid {
public:
    explicit IntervalMonoid(const Rat& q) : q_(q) {
        if (!(Rat(1) < q && q < Rat(2)))
            throw domain_error("interval monoid needs 1 < q < 2, got " + q.to_string());
        conductor_ = (Rat(1) / (q - Rat(1))).ceil();
        // kq < k+1 for k < c, and cq >= c+1
        for (Integer k(1); k < conductor_; ++k)
            if (!(Rat(k) * q < Rat(k + 1))) throw std::logic_error("conductor inequality kq < k+1 failed");
        if (Rat(conductor_) * q < Rat(conductor_ + 1)) throw std::logic_error("conductor inequality cq >= c+1 failed");
    }

    [[nodiscard]] const Rat& q() const { return q_; }
    [[nodiscard]] const Integer& conductor() const { return conductor_; }

    /// x ∈ M_q: 0, or k ≤ x ≤ kq for some k < c, or x ≥ c.
    [[nodiscard]] bool contains(const Rat& x) const {
        if (x.is_zero()) return true;
        if (x.sign() < 0) return false;
        if (x >= Rat(conductor_)) return true;
        const Integer k = x.floor();
        return k >= 1 && x <= Rat(k) * q_;
    }

    /// a | y in M_q.
    [[nodiscard]] bool divides(const Rat& a, const Rat& y) const { return y >= a && contains(y - a); }

private:
    Rat q_;
    Integer conductor_;
};

inline Integer conductor(const Rat& q) { return IntervalMonoid(q).conductor(); }

inline bool interval_membership(const IntervalMonoid& m, const Rat& x) { return m.contains(x); }

/// Simplest rational (least denominator, then least numerator) between lo
/// and hi; each end is open unless flagged inclusive. Stern–Brocot descent
/// through continued fractions. Requires 0 ≤ lo ≤ hi.
inline Rat simplest_between(const Rat& lo, bool lo_inclusive, const Rat& hi, bool hi_inclusive) {
    if (lo.sign() < 0 || hi < lo || (lo == hi && !(lo_inclusive && hi_inclusive)))
        throw domain_error("empty interval for simplest rational");
    const Integer whole = lo.floor();
    const Integer first_int = lo.is_integer() && lo_inclusive ? whole : Integer(whole + 1);
    if (Rat(first_int) < hi || (hi_inclusive && Rat(first_int) == hi)) return Rat(first_int);

    // No integer inside: x = whole + 1/y with y between 1/(hi − whole) and
    // 1/(lo − whole), endpoints swapped.
    const Rat y_lo = Rat(1) / (hi - Rat(whole));
    if (lo.is_integer()) {
        Integer y = y_lo.ceil();
        if (!hi_inclusive && Rat(y) == y_lo) y += 1;
        return Rat(whole) + Rat(Integer(1), y);
    }
    const Rat y_hi = Rat(1) / (lo - Rat(whole));
    return Rat(whole) + Rat(1) / simplest_between(y_lo, hi_inclusive, y_hi, lo_inclusive);
}

struct OmegaIntervalResult {
    Integer conductor;
    Integer n;      ///< ⌈a⌉
    Integer omega;  ///< c + n
    Rat lower;      ///< ((c−1)q + a)/(c+n−1)
    Rat upper;      ///< (c + a)/(c+n−1)
    Rat witness;    ///< atom b strictly between lower and upper
    bool not_divides_check = false;  ///< a ∤ (c+n−1)·b
    bool divides_check = false;      ///< a | (c+n)·b
};

inline OmegaIntervalResult omega_interval_atom(const IntervalMonoid& m, const Rat& a) {
    const Rat& q = m.q();
    if (a < Rat(1) || q < a)
        throw domain_error("atom must lie in [1, q] = [1, " + q.to_string() + "], got " + a.to_string());
    OmegaIntervalResult r;
    r.conductor = m.conductor();
    r.n = a.ceil();
    r.omega = r.conductor + r.n;
    const Rat c(r.conductor);
    const Rat span(r.conductor + r.n - 1);
    r.lower = ((c - Rat(1)) * q + a) / span;
    r.upper = (c + a) / span;

    // b must be an atom: (lower, upper) ∩ [1, q].
    const bool lo_is_one = r.lower < Rat(1);
    const bool hi_is_q = q < r.upper;
    r.witness = simplest_between(lo_is_one ? Rat(1) : r.lower, lo_is_one, hi_is_q ? q : r.upper, hi_is_q);

    r.not_divides_check = !m.divides(a, span * r.witness);
    r.divides_check = m.divides(a, (span + Rat(1)) * r.witness);
    return r;
}

// ---------------------------------------------------------------------------
// Anti-prime witnesses in ℕ₀[q], 0 < q < 1

/// dividend − divisor = quotient_presentation(q), all multiplicities ≥ 0.
struct DivisibilityCertificate {
    Rat dividend;
    Rat divisor;
    NatPoly quotient_presentation;

    friend bool operator==(const DivisibilityCertificate&, const DivisibilityCertificate&) = default;
};

struct ChainLink {
    Rat beta;
    NatPoly presentation;                   ///< supported on exponents ≥ k + i
    DivisibilityCertificate from_atom;      ///< qᵏ | βᵢ
    std::optional<DivisibilityCertificate> step;  ///< βᵢ₋₁ | βᵢ (absent for i = 0)
};

namespace detail {

inline MinimalPair checked_small_base(const Rat& q) {
    if (!(Rat(0) < q && q < Rat(1))) throw domain_error("anti-prime chain needs 0 < q < 1, got " + q.to_string());
    if (q.num() == 1) throw domain_error("monoid not atomic; hypothesis violated (q = 1/b)");
    return minimal_pair_of_rational(q);
}

}  // namespace detail

/// β₀ = qᵏ, …, βₙ with βᵢ ∈ ⟨qʲ : j ≥ k+i⟩ and qᵏ | βᵢ certified.
inline std::vector<ChainLink> antiprime_witness_chain(const Rat& q, std::size_t k, std::size_t n) {
    const MinimalPair mp = detail::checked_small_base(q);
    // q₀ is the constant a and p = bX: m·q^{j}·q₀(q) = m·q^{j}·p(q) is
    // presented as m·b·X^{j+1}, and the step quotient m·q^{j}·(q₀(q) − 1) as
    // m·(a − 1)·X^{j}.
    const Integer q0_minus_one = mp.q0.coeff(0) - 1;
    const NatPoly& p = mp.p;

    std::vector<ChainLink> chain;
    chain.reserve(n + 1);
    const Rat atom = q.pow(k);
    chain.push_back({atom, NatPoly::monomial(k, Integer(1)), {atom, atom, NatPoly{}}, std::nullopt});
    for (std::size_t i = 0; i < n; ++i) {
        const ChainLink& cur = chain.back();
        const std::size_t level = k + i;
        const Integer m = cur.presentation.coeff(level);

        NatPoly rest;  // β′ᵢ₊₁: everything above the current level
        for (const auto& [d, c] : cur.presentation.terms())
            if (d > level) rest.add_term(d, c);
        NatPoly next = rest + (p * NatPoly::monomial(level, m));
        NatPoly step_quotient = NatPoly::monomial(level, m * q0_minus_one);

        ChainLink link;
        link.presentation = std::move(next);
        link.beta = eval(link.presentation, q);
        link.step = DivisibilityCertificate{link.beta, cur.beta, step_quotient};
        link.from_atom = DivisibilityCertificate{link.beta, atom, cur.from_atom.quotient_presentation + step_quotient};
        chain.push_back(std::move(link));
    }
    return chain;
}

struct OmegaWitness {
    Rat q;
    std::size_t atom_power = 0;  ///< k
    Integer bound;               ///< K
    std::size_t depth = 0;       ///< N
    Rat x;
    NatPoly x_presentation;
    DivisibilityCertificate certificate;  ///< qᵏ | x
};

/// Proves ω(qᵏ) > K: x ∈ M_N with qᵏ | x, where K·q^N < qᵏ, so no sub-sum of
/// at most K atoms of x reaches qᵏ.
inline OmegaWitness omega_lower_bound(const Rat& q, std::size_t k, const Integer& big_k) {
    detail::checked_small_base(q);
    if (big_k < 1) throw domain_error("K must be positive");
    const Rat target = q.pow(k);
    std::size_t depth = 1;
    Rat power = q;
    while (!(Rat(big_k) * power < target)) {
        ++depth;
        power *= q;
    }
    const auto chain = antiprime_witness_chain(q, k, depth - k);
    const ChainLink& last = chain.back();
    return OmegaWitness{q, k, big_k, depth, last.beta, last.presentation, last.from_atom};
}

struct WitnessChecks {
    bool value_match = false;            ///< x_presentation(q) = x
    bool support_at_least_depth = false; ///< every exponent ≥ N
    bool bound = false;                  ///< K·q^N < qᵏ
    bool certificate = false;            ///< quotient(q) = x − qᵏ, multiplicities ≥ 0

    [[nodiscard]] bool all() const { return value_match && support_at_least_depth && bound && certificate; }
};

/// Re-checks a witness from scratch; passing all four is a proof of ω(qᵏ) > K.
inline WitnessChecks check_witness(const OmegaWitness& w) {
    WitnessChecks c;
    c.value_match = !w.x_presentation.is_zero() && eval(w.x_presentation, w.q) == w.x;
    c.support_at_least_depth = !w.x_presentation.is_zero() && order(w.x_presentation) >= w.depth;
    const Rat atom = w.q.pow(w.atom_power);
    c.bound = Rat(w.bound) * w.q.pow(w.depth) < atom;
    bool nonneg = true;
    for (const auto& [d, m] : w.certificate.quotient_presentation.terms()) nonneg = nonneg && m > 0;
    c.certificate = nonneg && w.certificate.divisor == atom && w.certificate.dividend == w.x &&
                    eval(w.certificate.quotient_presentation, w.q) == w.x - atom;
    return c;
}

}  // namespace cyclofact
