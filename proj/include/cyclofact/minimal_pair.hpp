#pragma once

#include "cyclofact/polynomial.hpp"

namespace cyclofact {

/// ell·f = p − q0 with p, q0 ∈ ℕ₀[X] sharing no degree, ell the least
/// positive integer clearing the denominators of the monic f.
struct MinimalPair {
    Integer ell;
    NatPoly p;
    NatPoly q0;

    friend bool operator==(const MinimalPair&, const MinimalPair&) = default;
};

inline MinimalPair minimal_pair(const RatPoly& f) {
    if (f.is_zero()) throw domain_error("minimal pair of the zero polynomial is undefined");
    if (!(f.leading_coeff() == Rat(1))) throw domain_error("minimal pair defined for monic polynomials");

    MinimalPair mp{Integer(1), {}, {}};
    for (const auto& [d, c] : f.terms()) mp.ell = lcm(mp.ell, c.den());
    for (const auto& [d, c] : f.terms()) {
        const Integer scaled = c.num() * (mp.ell / c.den());
        if (scaled > 0) {
            mp.p.add_term(d, scaled);
        } else {
            mp.q0.add_term(d, Integer(-scaled));
        }
    }
    return mp;
}

/// Minimal pair of X − q: (d(q), d(q)·X, n(q)).
inline MinimalPair minimal_pair_of_rational(const Rat& q) {
    if (q.sign() <= 0) throw domain_error("minimal pair of a rational requires q > 0, got " + q.to_string());
    RatPoly f{{1, Rat(1)}, {0, -q}};
    return minimal_pair(f);
}

}  // namespace cyclofact
