#pragma once

/**
 * @file polynomial.hpp
 * @brief Sparse univariate polynomials over ℕ₀, ℤ and ℚ.
 *
 * A polynomial is a map from degree to a nonzero coefficient. Elements of
 * ℕ₀[q] and their factorizations are both stored as `NatPoly`: the
 * coefficient at degree i is the multiplicity of the atom qⁱ. Exponents can
 * get large while the number of terms stays small, hence the sparse map.
 *
 * The zero polynomial is the empty map; `support`, `order`, `degree` and
 * `sign_variations` reject it.
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <utility>
#include <vector>

#include "cyclofact/rational.hpp"

namespace cyclofact {

/// Coefficient rings. `Natural` only admits positive stored coefficients.
struct Natural {
    using coeff_type = Integer;
    static constexpr bool is_signed = false;
    static constexpr const char* name = "NatPoly";
};
struct Whole {
    using coeff_type = Integer;
    static constexpr bool is_signed = true;
    static constexpr const char* name = "IntPoly";
};
struct Rational {
    using coeff_type = Rat;
    static constexpr bool is_signed = true;
    static constexpr const char* name = "RatPoly";
};

template <class Ring>
class SparsePoly {
public:
    using ring_type = Ring;
    using coeff_type = typename Ring::coeff_type;
    using degree_type = std::size_t;
    using term_map = std::map<degree_type, coeff_type>;

    SparsePoly() = default;

    SparsePoly(std::initializer_list<std::pair<degree_type, coeff_type>> terms) {
        for (const auto& [d, c] : terms) add_term(d, c);
    }

    static SparsePoly monomial(degree_type d, const coeff_type& c) {
        SparsePoly p;
        p.add_term(d, c);
        return p;
    }
    static SparsePoly constant(const coeff_type& c) { return monomial(0, c); }

    /// Converts between rings; throws when a coefficient does not fit.
    template <class Other>
    static SparsePoly from(const SparsePoly<Other>& other) {
        SparsePoly p;
        for (const auto& [d, c] : other.terms()) {
            if constexpr (std::is_same_v<coeff_type, Integer> &&
                          std::is_same_v<typename Other::coeff_type, Rat>) {
                if (!c.is_integer())
                    throw domain_error(std::string("non-integer coefficient for ") + Ring::name);
                p.add_term(d, c.num());
            } else {
                p.add_term(d, coeff_type(c));
            }
        }
        return p;
    }

    /// Adds `c·X^d`; zero results are erased.
    SparsePoly& add_term(degree_type d, const coeff_type& c) {
        if (c == 0) return *this;
        auto [it, inserted] = terms_.try_emplace(d, c);
        if (!inserted) it->second += c;
        if (it->second == 0) {
            terms_.erase(it);
        } else if constexpr (!Ring::is_signed) {
            if (it->second < 0) {
                if (inserted) {
                    terms_.erase(it);
                } else {
                    it->second -= c;
                }
                throw domain_error("negative coefficient in NatPoly");
            }
        }
        return *this;
    }

    [[nodiscard]] const term_map& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t term_count() const { return terms_.size(); }

    [[nodiscard]] coeff_type coeff(degree_type d) const {
        auto it = terms_.find(d);
        return it == terms_.end() ? coeff_type(0) : it->second;
    }

    [[nodiscard]] degree_type degree() const {
        require_nonzero("degree");
        return terms_.rbegin()->first;
    }
    [[nodiscard]] const coeff_type& leading_coeff() const {
        require_nonzero("leading coefficient");
        return terms_.rbegin()->second;
    }

    /// f(1): the sum of coefficients. For a factorization this is its length.
    [[nodiscard]] coeff_type value_at_one() const {
        coeff_type s(0);
        for (const auto& [d, c] : terms_) s += c;
        return s;
    }

    /// Multiplies by X^k.
    [[nodiscard]] SparsePoly shifted(degree_type k) const {
        SparsePoly r;
        for (const auto& [d, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), d + k, c);
        return r;
    }

    [[nodiscard]] SparsePoly scaled(const coeff_type& s) const {
        SparsePoly r;
        if (s == 0) return r;
        for (const auto& [d, c] : terms_) r.add_term(d, c * s);
        return r;
    }

    [[nodiscard]] SparsePoly pow(unsigned n) const {
        SparsePoly r = constant(coeff_type(1));
        SparsePoly b = *this;
        while (n) {
            if (n & 1u) r = r * b;
            n >>= 1u;
            if (n) b = b * b;
        }
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& o) {
        for (const auto& [d, c] : o.terms_) add_term(d, c);
        return *this;
    }
    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }

    SparsePoly& operator-=(const SparsePoly& o)
        requires Ring::is_signed
    {
        for (const auto& [d, c] : o.terms_) add_term(d, -c);
        return *this;
    }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b)
        requires Ring::is_signed
    {
        return a -= b;
    }
    friend SparsePoly operator-(const SparsePoly& a)
        requires Ring::is_signed
    {
        return a.scaled(coeff_type(-1));
    }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        SparsePoly r;
        for (const auto& [da, ca] : a.terms_)
            for (const auto& [db, cb] : b.terms_) r.add_term(da + db, ca * cb);
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        auto ib = b.terms_.begin();
        for (const auto& [d, c] : a.terms_) {
            if (d != ib->first || !(c == ib->second)) return false;
            ++ib;
        }
        return true;
    }

    /// Lexicographic by (degree, coefficient) pairs; gives sets a stable order.
    friend bool operator<(const SparsePoly& a, const SparsePoly& b) {
        auto ia = a.terms_.begin();
        auto ib = b.terms_.begin();
        for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (!(ia->second == ib->second)) return ia->second < ib->second;
        }
        return ia == a.terms_.end() && ib != b.terms_.end();
    }

private:
    void require_nonzero(const char* what) const {
        if (terms_.empty()) throw domain_error(std::string(what) + " of the zero polynomial is undefined");
    }

    term_map terms_;
};

using NatPoly = SparsePoly<Natural>;
using IntPoly = SparsePoly<Whole>;
using RatPoly = SparsePoly<Rational>;

/// Exact f(x).
template <class Ring>
Rat eval(const SparsePoly<Ring>& f, const Rat& x) {
    Rat sum;
    Rat power(1);
    std::size_t at = 0;
    for (const auto& [d, c] : f.terms()) {
        if (d > at) {
            power *= x.pow(d - at);
            at = d;
        }
        sum += power * Rat(c);
    }
    return sum;
}

template <class Ring>
std::vector<std::size_t> support(const SparsePoly<Ring>& f) {
    if (f.is_zero()) throw domain_error("undefined support: zero polynomial");
    std::vector<std::size_t> s;
    s.reserve(f.term_count());
    for (const auto& [d, c] : f.terms()) s.push_back(d);
    return s;
}

/// Minimum of the support; the largest d with X^d | f.
template <class Ring>
std::size_t order(const SparsePoly<Ring>& f) {
    if (f.is_zero()) throw domain_error("undefined order: zero polynomial");
    return f.terms().begin()->first;
}

/// Sign changes in the coefficient sequence by increasing degree.
template <class Ring>
    requires Ring::is_signed
std::size_t sign_variations(const SparsePoly<Ring>& f) {
    if (f.is_zero()) throw domain_error("sign variations of the zero polynomial are undefined");
    std::size_t changes = 0;
    int last = 0;
    for (const auto& [d, c] : f.terms()) {
        const int s = c < 0 ? -1 : 1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

/// Remainder of `f` modulo the monic polynomial `m`.
inline RatPoly remainder(RatPoly f, const RatPoly& m) {
    if (m.is_zero() || !(m.leading_coeff() == Rat(1)))
        throw domain_error("remainder requires a monic divisor");
    const std::size_t n = m.degree();
    while (!f.is_zero() && f.degree() >= n) {
        const std::size_t d = f.degree();
        const Rat lc = f.leading_coeff();
        for (const auto& [dm, cm] : m.terms()) f.add_term(dm + d - n, -(lc * cm));
    }
    return f;
}

inline IntPoly to_int(const NatPoly& f) { return IntPoly::from(f); }
inline RatPoly to_rat(const IntPoly& f) { return RatPoly::from(f); }
inline RatPoly to_rat(const NatPoly& f) { return RatPoly::from(f); }

}  // namespace cyclofact
