#pragma once

/**
 * @file semiring.hpp
 * @brief The additive monoid ℕ₀[q] for a rational q = a/b ≥ 1.
 *
 * For non-integer q > 1 the atoms are exactly the powers qⁿ, so a
 * factorization is a `NatPoly` whose coefficient at degree i counts the atom
 * qⁱ. Two value-preserving moves act on factorizations:
 *
 *   up   : a·qʲ      →  b·qʲ⁺¹    (length drops by a−b)
 *   down : b·qʲ⁺¹    →  a·qʲ      (length grows by a−b)
 *
 * Exhausting up moves leaves every coefficient below a, which is the unique
 * minimum-length factorization. Exhausting down moves leaves every
 * coefficient above degree 0 below b; that form is unique as well (compare
 * top coefficients mod b), so it is the maximum-length factorization.
 *
 * Integer q gives ℕ₀[q] = ℕ₀, a unique factorization monoid: every
 * operation short-circuits to the single factorization x·1.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclofact/polynomial.hpp"

namespace cyclofact {

/// Default frontier budget of the exhaustive enumeration oracle.
inline constexpr std::size_t kDefaultOracleCap = 1'000'000;

using Factorization = NatPoly;

class RationalBase {
public:
    explicit RationalBase(const Rat& q) : q_(q) {
        if (q < Rat(1))
            throw domain_error("factorization in N0[q] needs q >= 1 (q > 1 non-integer, or integer), got " +
                               q.to_string());
    }
    RationalBase(const Integer& a, const Integer& b) : RationalBase(Rat(a, b)) {}

    [[nodiscard]] const Rat& q() const { return q_; }
    [[nodiscard]] const Integer& a() const { return q_.num(); }
    [[nodiscard]] const Integer& b() const { return q_.den(); }
    /// q ∈ ℕ: the monoid is ℕ₀ itself.
    [[nodiscard]] bool is_integral() const { return q_.is_integer(); }

private:
    Rat q_;
};

struct LengthStats {
    Integer min_len;
    Integer max_len;
    Rat elasticity;
    std::optional<std::vector<Integer>> length_set;

    friend bool operator==(const LengthStats&, const LengthStats&) = default;
};

/// Largest e with qᵉ ≤ x (x ≥ 1, q > 1).
inline std::size_t max_exponent(const RationalBase& base, const Rat& x) {
    if (x < Rat(1)) throw domain_error("max_exponent needs x >= 1");
    if (base.q() == Rat(1)) throw domain_error("max_exponent is unbounded for q = 1");
    std::size_t e = 0;
    for (Rat p = base.q(); p <= x; p *= base.q()) ++e;
    return e;
}

namespace detail {

/// Admissible constant coefficients n₀ for a presentation of y: those with
/// (y − n₀)/q still having a b-smooth denominator, i.e. one class mod a.
inline std::optional<Integer> constant_residue(const RationalBase& base, const Rat& y) {
    if (!is_smooth_over(y.den(), base.b())) return std::nullopt;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), Integer(y.den()).get_mpz_t(), base.a().get_mpz_t());
    return mod(y.num() * inv, base.a());
}

/// Exhaustive search over ℕ₀[q] for non-integer q > 1.
///
/// States are values y normalised so that the current level's atom is 1;
/// choosing n₀ copies of 1 leaves (y − n₀)/q for the levels above.
class FactorizationSearch {
public:
    FactorizationSearch(const RationalBase& base, std::size_t cap) : base_(base), cap_(cap) {}

    bool reachable(const Rat& y) {
        if (y.is_zero()) return true;
        if (y < Rat(1)) return false;
        if (auto it = memo_.find(y); it != memo_.end()) return it->second;
        charge();
        bool ok = false;
        if (auto r = constant_residue(base_, y)) {
            const Integer top = y.floor();
            for (Integer n0 = *r; n0 <= top && !ok; n0 += base_.a()) ok = reachable(next(y, n0));
        }
        memo_.emplace(y, ok);
        return ok;
    }

    std::optional<Factorization> witness(Rat y) {
        if (!reachable(y)) return std::nullopt;
        Factorization z;
        for (std::size_t level = 0; !y.is_zero(); ++level) {
            const Integer top = y.floor();
            for (Integer n0 = *constant_residue(base_, y); n0 <= top; n0 += base_.a()) {
                Rat rest = next(y, n0);
                if (reachable(rest)) {
                    z.add_term(level, n0);
                    y = rest;
                    break;
                }
            }
        }
        return z;
    }

    std::vector<Factorization> enumerate(const Rat& x) {
        std::vector<Factorization> out;
        std::vector<Integer> digits;
        if (reachable(x)) walk(x, digits, out);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    Rat next(const Rat& y, const Integer& n0) const { return (y - Rat(n0)) / base_.q(); }

    void charge() {
        if (++visited_ > cap_)
            throw budget_exhausted("oracle budget exhausted (" + std::to_string(cap_) + " frontier states)");
    }

    void walk(const Rat& y, std::vector<Integer>& digits, std::vector<Factorization>& out) {
        charge();
        if (y.is_zero()) {
            Factorization z;
            for (std::size_t i = 0; i < digits.size(); ++i) z.add_term(i, digits[i]);
            out.push_back(std::move(z));
            return;
        }
        const Integer top = y.floor();
        for (Integer n0 = *constant_residue(base_, y); n0 <= top; n0 += base_.a()) {
            Rat rest = next(y, n0);
            if (!reachable(rest)) continue;
            digits.push_back(n0);
            walk(rest, digits, out);
            digits.pop_back();
        }
    }

    const RationalBase& base_;
    std::size_t cap_;
    std::size_t visited_ = 0;
    std::map<Rat, bool> memo_;
};

inline Factorization as_constant(const Rat& value) {
    return Factorization::constant(value.num());
}

}  // namespace detail

/// A factorization witnessing x ∈ ℕ₀[q], or nothing.
inline std::optional<Factorization> is_member(const RationalBase& base, const Rat& x,
                                              std::size_t cap = kDefaultOracleCap) {
    if (x.sign() < 0) throw domain_error("membership needs x >= 0, got " + x.to_string());
    if (base.is_integral()) {
        if (!x.is_integer()) return std::nullopt;
        return detail::as_constant(x);
    }
    detail::FactorizationSearch search(base, cap);
    return search.witness(x);
}

/// Witness for y − x ∈ ℕ₀[q] (x divides y in the monoid), or nothing.
inline std::optional<Factorization> divides(const RationalBase& base, const Rat& x, const Rat& y,
                                            std::size_t cap = kDefaultOracleCap) {
    if (y < x) return std::nullopt;
    return is_member(base, y - x, cap);
}

/// Applies a·qʲ → b·qʲ⁺¹ by increasing j until all coefficients are < a.
inline Factorization up_normal_form(const RationalBase& base, const Factorization& z) {
    if (base.is_integral()) return detail::as_constant(eval(z, base.q()));
    std::map<std::size_t, Integer> t(z.terms().begin(), z.terms().end());
    const Integer& a = base.a();
    const Integer& b = base.b();
    for (auto it = t.begin(); it != t.end();) {
        if (it->second >= a) {
            const Integer moves = it->second / a;
            it->second -= moves * a;
            t[it->first + 1] += moves * b;
        }
        it = it->second == 0 ? t.erase(it) : std::next(it);
    }
    Factorization out;
    for (const auto& [d, c] : t) out.add_term(d, c);
    return out;
}

/// Applies b·qʲ⁺¹ → a·qʲ by decreasing j until all coefficients above
/// degree 0 are < b.
inline Factorization down_normal_form(const RationalBase& base, const Factorization& z) {
    if (base.is_integral()) return detail::as_constant(eval(z, base.q()));
    if (z.is_zero()) return z;
    std::map<std::size_t, Integer> t(z.terms().begin(), z.terms().end());
    const Integer& a = base.a();
    const Integer& b = base.b();
    std::size_t d = t.rbegin()->first;
    while (d >= 1) {
        if (auto it = t.find(d); it != t.end() && it->second >= b) {
            const Integer moves = it->second / b;
            it->second -= moves * b;
            t[d - 1] += moves * a;
            if (it->second == 0) t.erase(it);
        }
        auto below = t.lower_bound(d);
        if (below == t.begin()) break;
        d = std::prev(below)->first;
    }
    Factorization out;
    for (const auto& [deg, c] : t) out.add_term(deg, c);
    return out;
}

/// The complete set 𝖹(x), sorted. Empty when x ∉ ℕ₀[q].
inline std::vector<Factorization> enumerate_factorizations(const RationalBase& base, const Rat& x,
                                                           std::size_t cap = kDefaultOracleCap) {
    if (x.sign() < 0) throw domain_error("enumeration needs x >= 0");
    if (base.is_integral()) {
        if (!x.is_integer()) return {};
        return {detail::as_constant(x)};
    }
    detail::FactorizationSearch search(base, cap);
    return search.enumerate(x);
}

/// Length statistics of the element presented by `z` (no membership search).
inline LengthStats length_stats_of(const RationalBase& base, const Factorization& z, bool want_full_set,
                                   std::size_t cap = kDefaultOracleCap) {
    if (z.is_zero()) throw domain_error("length statistics need a nonzero element");
    LengthStats st;
    st.min_len = up_normal_form(base, z).value_at_one();
    st.max_len = down_normal_form(base, z).value_at_one();
    st.elasticity = Rat(st.max_len, st.min_len);
    if (want_full_set) {
        std::vector<Integer> lengths;
        for (const auto& f : enumerate_factorizations(base, eval(z, base.q()), cap))
            lengths.push_back(f.value_at_one());
        std::sort(lengths.begin(), lengths.end());
        lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());
        st.length_set = std::move(lengths);
    }
    return st;
}

inline LengthStats length_stats(const RationalBase& base, const Rat& x, bool want_full_set,
                                std::size_t cap = kDefaultOracleCap) {
    if (x.is_zero()) throw domain_error("length statistics need a nonzero element");
    auto w = is_member(base, x, cap);
    if (!w) throw domain_error(x.to_string() + " is not an element of N0[" + base.q().to_string() + "]");
    return length_stats_of(base, *w, want_full_set, cap);
}

}  // namespace cyclofact
