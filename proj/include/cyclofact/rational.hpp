#pragma once

/**
 * @file rational.hpp
 * @brief Exact rationals over arbitrary-precision integers.
 *
 * `Rat` is always in lowest terms with a positive denominator; zero is 0/1.
 * Storage is a GMP `mpq_class` kept canonical after every operation, so
 * `num()` and `den()` can be read directly without re-reducing.
 */

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "cyclofact/errors.hpp"

namespace cyclofact {

using Integer = mpz_class;

class Rat {
public:
    Rat() = default;
    Rat(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    Rat(int n) : v_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rat(const Integer& n) : v_(n) {}  // NOLINT(google-explicit-constructor)

    Rat(const Integer& num, const Integer& den) {
        if (den == 0) throw domain_error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    /// Parses "n" or "n/d" (optional leading sign, no spaces inside).
    static Rat parse(std::string_view text) {
        std::string s(text);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
        std::size_t start = 0;
        while (start < s.size() && (s[start] == ' ' || s[start] == '\t')) ++start;
        s = s.substr(start);
        const auto slash = s.find('/');
        const auto digits_ok = [](std::string_view d, bool allow_sign) {
            if (allow_sign && !d.empty() && (d.front() == '-' || d.front() == '+')) d.remove_prefix(1);
            if (d.empty()) return false;
            for (char c : d)
                if (c < '0' || c > '9') return false;
            return true;
        };
        const std::string num_part = s.substr(0, slash);
        const std::string den_part = slash == std::string::npos ? "1" : s.substr(slash + 1);
        if (!digits_ok(num_part, true) || !digits_ok(den_part, false))
            throw domain_error("malformed rational '" + std::string(text) + "'");
        const std::string n = num_part.front() == '+' ? num_part.substr(1) : num_part;
        return Rat(Integer(n), Integer(den_part));
    }

    [[nodiscard]] const Integer& num() const { return v_.get_num(); }
    [[nodiscard]] const Integer& den() const { return v_.get_den(); }
    [[nodiscard]] int sign() const { return sgn(v_); }
    [[nodiscard]] bool is_zero() const { return sign() == 0; }
    [[nodiscard]] bool is_integer() const { return den() == 1; }

    [[nodiscard]] Integer floor() const {
        Integer r;
        mpz_fdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return r;
    }
    [[nodiscard]] Integer ceil() const {
        Integer r;
        mpz_cdiv_q(r.get_mpz_t(), num().get_mpz_t(), den().get_mpz_t());
        return r;
    }

    [[nodiscard]] Rat pow(unsigned long e) const {
        Rat r;
        mpz_pow_ui(r.v_.get_num_mpz_t(), num().get_mpz_t(), e);
        mpz_pow_ui(r.v_.get_den_mpz_t(), den().get_mpz_t(), e);
        return r;  // gcd(num^e, den^e) = 1 already
    }

    [[nodiscard]] std::string to_string() const {
        if (is_integer()) return num().get_str();
        return num().get_str() + "/" + den().get_str();
    }

    [[nodiscard]] double to_double() const { return v_.get_d(); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw domain_error("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) {
        Rat r;
        r.v_ = -a.v_;
        return r;
    }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.to_string(); }

private:
    mpq_class v_;
};

inline std::strong_ordering compare(const Integer& a, const Integer& b) {
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// Nonnegative remainder of `a` modulo positive `m`.
inline Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

/// True when every prime factor of `n` divides `base` (n > 0).
inline bool is_smooth_over(Integer n, const Integer& base) {
    if (n == 1) return true;
    for (Integer g = gcd(n, base); g > 1; g = gcd(n, base)) {
        while (mod(n, g) == 0) n /= g;
    }
    return n == 1;
}

/// Converts to `unsigned long`, throwing when out of range.
inline unsigned long to_ulong(const Integer& n, const char* what = "value") {
    if (n < 0 || !n.fits_ulong_p())
        throw domain_error(std::string(what) + " out of range: " + n.get_str());
    return n.get_ui();
}

}  // namespace cyclofact
