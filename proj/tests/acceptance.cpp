// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cyclofact/cyclofact.hpp"
#include "cyclofact/poly_io.hpp"
#include "oracle.hpp"

using namespace cyclofact;

namespace {

struct Check {
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
};

int g_failed = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<void(Check&)>& body) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (time_limit_s > 0 && secs > time_limit_s) {
        std::ostringstream os;
        os << "runtime " << secs << " s exceeds " << time_limit_s << " s";
        c.failures.push_back(os.str());
    }
    const bool ok = c.failures.empty();
    if (!ok) ++g_failed;
    std::printf("%s criterion %d: %s (%.3f s)\n", ok ? "PASS" : "FAIL", id, title, secs);
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) std::printf("    %s\n", c.failures[i].c_str());
    std::fflush(stdout);
}

std::string str(const Rat& r) { return r.to_string(); }

const std::vector<Rat> kCoreBases{Rat::parse("3/2"), Rat::parse("5/3"), Rat::parse("5/2"), Rat::parse("7/4")};

}  // namespace

int main() {
    criterion(1, "minimal pairs", 1.0, [](Check& c) {
        c.expect(minimal_pair(parse_polynomial("X - 3/2")) == MinimalPair{Integer(2), NatPoly{{1, 2}}, NatPoly{{0, 3}}},
                 "minimal_pair(X - 3/2)");
        c.expect(minimal_pair(parse_polynomial("X^2 - 3X + 1")) ==
                     MinimalPair{Integer(1), NatPoly{{2, 1}, {0, 1}}, NatPoly{{1, 3}}},
                 "minimal_pair(X^2 - 3X + 1)");
        std::mt19937_64 rng(1001);
        std::uniform_int_distribution<std::size_t> deg(1, 7);
        for (int i = 0; i < 50; ++i) {
            const std::size_t d = deg(rng);
            RatPoly f = RatPoly::monomial(d, Rat(1));
            for (std::size_t j = 0; j < d; ++j) f.add_term(j, oracle::random_rat(rng, 50, 30));
            const MinimalPair mp = minimal_pair(f);
            c.expect(to_rat(to_int(mp.p) - to_int(mp.q0)) == f.scaled(Rat(mp.ell)), "reconstruction of " + to_string(f));
            for (const auto& [e, m] : mp.p.terms()) c.expect(mp.q0.coeff(e) == 0, "overlapping support in " + to_string(f));
            Integer den(1);
            for (const auto& [e, m] : f.terms()) den = lcm(den, m.den());
            c.expect(mp.ell == den, "ell not minimal for " + to_string(f));
        }
    });

    criterion(2, "oracle equivalence on a^k", 60.0, [](Check& c) {
        for (const Rat& q : kCoreBases) {
            const RationalBase base(q);
            Integer ak(1), bk(1);
            for (unsigned k = 1; k <= 3; ++k) {
                ak *= base.a();
                bk *= base.b();
                const std::string tag = "q=" + str(q) + " k=" + std::to_string(k);
                const auto all = enumerate_factorizations(base, Rat(ak), kDefaultOracleCap);
                c.expect(!all.empty(), tag + ": no factorizations");
                if (all.empty()) continue;
                Integer lo = all.front().value_at_one(), hi = lo;
                for (const auto& z : all) {
                    lo = std::min(lo, z.value_at_one());
                    hi = std::max(hi, z.value_at_one());
                }
                const auto st = length_stats_of(base, NatPoly::constant(ak), false);
                c.expect(st.min_len == lo, tag + ": min length " + st.min_len.get_str() + " vs oracle " + lo.get_str());
                c.expect(st.max_len == hi, tag + ": max length " + st.max_len.get_str() + " vs oracle " + hi.get_str());
                c.expect(st.min_len <= bk, tag + ": min length exceeds b^k");
                c.expect(st.max_len == ak, tag + ": max length differs from a^k");
            }
        }
    });

    criterion(3, "length sets of 9 and 3 under q = 3/2", 0, [](Check& c) {
        const RationalBase base(Rat::parse("3/2"));
        const auto nine = length_stats(base, Rat(9), true);
        c.expect(nine.length_set == std::vector<Integer>{3, 4, 5, 6, 7, 8, 9}, "L(9)");
        c.expect(nine.elasticity == Rat(3), "rho(9)");
        const auto three = length_stats(base, Rat(3), true);
        c.expect(three.length_set == std::vector<Integer>{2, 3}, "L(3)");
        c.expect(three.elasticity == Rat::parse("3/2"), "rho(3)");
    });

    criterion(4, "lower-bound sequence for q = 3/2", 0, [](Check& c) {
        const Rat q = Rat::parse("3/2");
        const MinimalPair mp = minimal_pair_of_rational(q);
        for (unsigned n = 1; n <= 3; ++n) {
            const auto term = elasticity_lower_bound_sequence(mp, q, n);
            c.expect(term.element == Rat(3).pow(n), "element of index " + std::to_string(n));
            c.expect(term.bound == q.pow(n), "bound of index " + std::to_string(n));
            c.expect(term.exact_elasticity && *term.exact_elasticity >= term.bound, "rho below bound");
            if (term.exact_elasticity)
                std::printf("    n=%u: rho(%s) = %s, bound %s (%s)\n", n, str(*term.element).c_str(),
                            str(*term.exact_elasticity).c_str(), str(term.bound).c_str(),
                            *term.exact_elasticity == term.bound ? "equal" : "excess");
        }
    });

    criterion(5, "forced-atom shift of 3 under q = 3/2", 0, [](Check& c) {
        const RationalBase base(Rat::parse("3/2"));
        const auto r = forced_atom_shift(base, Rat(3), NatPoly::constant(Integer(3)), 1);
        c.expect(r.forced_exponents == std::vector<std::size_t>{5}, "forced exponent");
        c.expect(r.element == Rat::parse("339/32"), "element " + str(r.element));
        std::set<NatPoly> expected;
        for (const auto& z : enumerate_factorizations(base, Rat(3))) expected.insert(z + NatPoly::monomial(5, Integer(1)));
        const auto got = enumerate_factorizations(base, r.element);
        c.expect(std::set<NatPoly>(got.begin(), got.end()) == expected, "Z(beta') differs from Z(3) + q^5");
        const auto st = length_stats(base, r.element, true);
        c.expect(st.length_set == std::vector<Integer>{3, 4}, "L(beta')");
        c.expect(st.elasticity == Rat::parse("4/3"), "rho(beta')");
    });

    criterion(6, "full elasticity grid", 300.0, [](Check& c) {
        int certificates = 0, rederived = 0;
        for (const char* qs : {"3/2", "5/3", "5/2"}) {
            const RationalBase base(Rat::parse(qs));
            for (long s = 2; s <= 9; ++s) {
                for (long t = 1; t < s; ++t) {
                    if (std::gcd(s, t) != 1) continue;
                    const ElasticityTarget target{Integer(s), Integer(t)};
                    const std::string tag = std::string(qs) + " " + std::to_string(s) + "/" + std::to_string(t);
                    const auto cert = construct_elasticity(base, target);
                    ++certificates;
                    c.expect(Rat(cert.max_len, cert.min_len) == target.value(), tag + ": tracked ratio");
                    c.expect(cert.achieved == target.value(), tag + ": achieved");
                    if (base.q() == Rat::parse("3/2") && cert.element <= Rat(10000)) {
                        ++rederived;
                        c.expect(eval(cert.presentation, base.q()) == cert.element, tag + ": presentation value");
                        const auto st = length_stats_of(base, cert.presentation, false);
                        c.expect(st.min_len == cert.min_len && st.max_len == cert.max_len, tag + ": re-derived lengths");
                    }
                }
            }
        }
        std::printf("    %d certificates, %d re-derived by normal forms\n", certificates, rederived);
    });

    criterion(7, "interval-monoid omega", 0, [](Check& c) {
        c.expect(conductor(Rat::parse("3/2")) == 2, "conductor(3/2)");
        c.expect(conductor(Rat::parse("4/3")) == 3, "conductor(4/3)");
        c.expect(conductor(Rat::parse("7/5")) == 3, "conductor(7/5)");
        const IntervalMonoid m(Rat::parse("3/2"));
        for (const char* as : {"1", "5/4", "3/2"}) {
            const Rat a = Rat::parse(as);
            const auto r = omega_interval_atom(m, a);
            c.expect(r.omega == m.conductor() + a.ceil(), std::string("omega(") + as + ")");
            const Rat span(r.conductor + r.n - 1);
            c.expect(!interval_membership(m, span * r.witness - a), std::string("a divides (c+n-1)b for a=") + as);
            c.expect(interval_membership(m, (span + Rat(1)) * r.witness - a), std::string("a does not divide (c+n)b for a=") + as);
            c.expect(r.not_divides_check && r.divides_check, std::string("reported checks for a=") + as);
            std::printf("    a=%s: omega=%s, b=%s\n", as, r.omega.get_str().c_str(), str(r.witness).c_str());
        }
    });

    criterion(8, "anti-prime witnesses for q = 2/3", 1.0, [](Check& c) {
        const Rat q = Rat::parse("2/3");
        for (std::size_t k = 0; k <= 1; ++k) {
            for (long big_k = 1; big_k <= 10; ++big_k) {
                const auto w = omega_lower_bound(q, k, Integer(big_k));
                const auto ch = check_witness(w);
                const std::string tag = "k=" + std::to_string(k) + " K=" + std::to_string(big_k);
                c.expect(ch.value_match, tag + ": value match");
                c.expect(ch.support_at_least_depth, tag + ": support");
                c.expect(ch.bound, tag + ": K q^N < q^k");
                c.expect(ch.certificate, tag + ": certificate");
            }
        }
        const auto chain = antiprime_witness_chain(q, 0, 10);
        for (std::size_t i = 0; i < chain.size(); ++i)
            c.expect(chain[i].beta == Rat(Integer(1) << static_cast<unsigned>(i)), "chain value " + std::to_string(i));
    });

    criterion(9, "move, congruence and normal-form properties", 0, [](Check& c) {
        std::mt19937_64 rng(9009);
        std::uniform_int_distribution<std::size_t> pick_base(0, kCoreBases.size() - 1);
        std::size_t violations = 0;
        for (int trial = 0; trial < 100000; ++trial) {
            const RationalBase base(kCoreBases[pick_base(rng)]);
            NatPoly z = oracle::random_poly<Natural>(rng, 4, 6, 30);
            const Rat x = eval(z, base.q());
            for (int step = 0; step < 8; ++step) {
                std::vector<std::pair<std::size_t, bool>> options;
                for (const auto& [d, m] : z.terms()) {
                    if (m >= base.a()) options.emplace_back(d, true);
                    if (d >= 1 && m >= base.b()) options.emplace_back(d, false);
                }
                if (options.empty()) break;
                const auto [d, up] = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
                if (up) {
                    z.add_term(d, Integer(-base.a()));
                    z.add_term(d + 1, base.b());
                } else {
                    z.add_term(d, Integer(-base.b()));
                    z.add_term(d - 1, base.a());
                }
            }
            if (eval(z, base.q()) != x) ++violations;
        }
        c.expect(violations == 0, std::to_string(violations) + " value violations in random move sequences");

        std::size_t checked = 0;
        for (const Rat& q : kCoreBases) {
            const RationalBase base(q);
            const Integer step = base.a() - base.b();
            Integer ak(1);
            for (unsigned k = 1; k <= 3; ++k) {
                ak *= base.a();
                const auto all = enumerate_factorizations(base, Rat(ak));
                const NatPoly up = up_normal_form(base, all.front());
                const NatPoly down = down_normal_form(base, all.front());
                const Integer l0 = all.front().value_at_one();
                for (const auto& z : all) {
                    ++checked;
                    const std::string tag = "q=" + str(q) + " k=" + std::to_string(k) + " z=" + to_string(z);
                    c.expect(mod(z.value_at_one() - l0, step) == 0, tag + ": length congruence");
                    const NatPoly u = up_normal_form(base, z);
                    const NatPoly d = down_normal_form(base, z);
                    c.expect(u == up && d == down, tag + ": confluence");
                    c.expect(up_normal_form(base, u) == u && down_normal_form(base, d) == d, tag + ": idempotence");
                }
            }
        }
        std::printf("    %zu enumerated factorizations checked\n", checked);
    });

    std::printf("%s: %d criteria failed\n", g_failed == 0 ? "ACCEPTED" : "REJECTED", g_failed);
    return g_failed == 0 ? 0 : 1;
}
