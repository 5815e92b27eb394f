#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "dmf/apoly.hpp"

using namespace dmf;

namespace {

APoly mk(const SmallField* F, std::vector<uint32_t> c) { return APoly(F, std::move(c)); }

// all monic polynomials of exact degree d
std::vector<APoly> monics_of_degree(const SmallField* F, int d) {
    std::vector<APoly> out;
    uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= F->q();
    for (uint64_t idx = 0; idx < count; ++idx) {
        std::vector<uint32_t> c(d + 1, 0);
        uint64_t t = idx;
        for (int i = 0; i < d; ++i) {
            c[i] = static_cast<uint32_t>(t % F->q());
            t /= F->q();
        }
        c[d] = 1;
        out.push_back(APoly(F, std::move(c)));
    }
    return out;
}

// independent factorization oracle: trial division by monic polynomials in
// increasing degree
Factorization factor_by_trial_division(APoly f) {
    Factorization r;
    r.unit = f.lead();
    f = f.monic();
    const SmallField* F = f.field();
    for (int d = 1; !f.is_constant() && d <= f.deg() / 2; ++d) {
        for (const auto& p : monics_of_degree(F, d)) {
            uint32_t mult = 0;
            while (!f.is_constant() && (f % p).is_zero()) {
                f = f / p;
                ++mult;
            }
            if (mult) r.factors.emplace_back(p, mult);
        }
    }
    if (!f.is_constant()) r.factors.emplace_back(f, 1);
    std::sort(r.factors.begin(), r.factors.end(),
              [](const auto& a, const auto& b) { return APoly::cmp(a.first, b.first) < 0; });
    return r;
}

}  // namespace

TEST_CASE("divmod and gcd basics") {
    const SmallField* F2 = SmallField::get(2, 1);
    APoly a = mk(F2, {0, 1, 1});  // T^2+T
    APoly b = mk(F2, {1, 1});     // T+1
    auto [q, r] = APoly::divmod(a, b);
    CHECK(r.is_zero());
    CHECK(q == mk(F2, {0, 1}));
    CHECK(APoly::gcd(a, b) == b);
    CHECK(APoly::gcd(a, APoly::zero(F2)) == a.monic());
}

TEST_CASE("factor: stated examples") {
    const SmallField* F2 = SmallField::get(2, 1);
    const SmallField* F3 = SmallField::get(3, 1);

    // T^2+T over F_2 -> unit 1, [(T,1),(T+1,1)]
    Factorization f1 = factor(mk(F2, {0, 1, 1}));
    CHECK(f1.unit == 1);
    REQUIRE(f1.factors.size() == 2);
    CHECK(f1.factors[0].first == mk(F2, {0, 1}));
    CHECK(f1.factors[0].second == 1);
    CHECK(f1.factors[1].first == mk(F2, {1, 1}));
    CHECK(f1.factors[1].second == 1);

    // T^2+T+1 over F_2 is irreducible (oracle: trial division by degree-1 monics)
    Factorization f2 = factor(mk(F2, {1, 1, 1}));
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first == mk(F2, {1, 1, 1}));
    CHECK(f2.factors[0].second == 1);

    // 2T^2 over F_3 -> unit 2, [(T,2)]
    Factorization f3 = factor(mk(F3, {0, 0, 2}));
    CHECK(f3.unit == 2);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first == mk(F3, {0, 1}));
    CHECK(f3.factors[0].second == 2);

    CHECK_THROWS_AS(factor(APoly::zero(F2)), domain_error);
}

TEST_CASE("factor round-trip against trial division, deg <= 6, q in {2,3}") {
    for (uint32_t p : {2u, 3u}) {
        const SmallField* F = SmallField::get(p, 1);
        uint64_t q = F->q();
        // enumerate all nonzero polynomials of degree <= 6 when q = 2, and a
        // deterministic stride when q = 3 to keep the loop quick
        uint64_t total = 1;
        for (int i = 0; i < 7; ++i) total *= q;
        uint64_t step = (p == 2) ? 1 : 7;
        for (uint64_t idx = 1; idx < total; idx += step) {
            std::vector<uint32_t> c;
            uint64_t t = idx;
            while (t) {
                c.push_back(static_cast<uint32_t>(t % q));
                t /= q;
            }
            APoly f(F, std::move(c));
            Factorization got = factor(f);
            CHECK(got.expand(F) == f);
            // distinct monic factors, canonical order
            for (size_t i = 0; i < got.factors.size(); ++i) {
                CHECK(got.factors[i].first.is_monic());
                if (i) CHECK(APoly::cmp(got.factors[i - 1].first, got.factors[i].first) < 0);
            }
            Factorization want = factor_by_trial_division(f);
            REQUIRE(got.factors.size() == want.factors.size());
            for (size_t i = 0; i < got.factors.size(); ++i) {
                CHECK(got.factors[i].first == want.factors[i].first);
                CHECK(got.factors[i].second == want.factors[i].second);
            }
        }
    }
}

TEST_CASE("inseparable towers factor correctly") {
    const SmallField* F2 = SmallField::get(2, 1);
    // (T^2+T+1)^4 = h(T^2) with h itself inseparable
    APoly p = mk(F2, {1, 1, 1});
    Factorization f = factor(p.pow(4));
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].first == p);
    CHECK(f.factors[0].second == 4);
    // T^8 over F_2
    Factorization g = factor(APoly::T_pow(F2, 8));
    REQUIRE(g.factors.size() == 1);
    CHECK(g.factors[0].second == 8);
}

TEST_CASE("mobius values and summation") {
    const SmallField* F2 = SmallField::get(2, 1);
    const SmallField* F3 = SmallField::get(3, 1);
    CHECK(mobius(mk(F2, {0, 1})) == -1);
    CHECK(mobius(APoly::T_pow(F2, 2)) == 0);
    CHECK(mobius(APoly::constant(F3, 2)) == 1);
    CHECK(mobius(mk(F2, {0, 1, 1})) == 1);  // two distinct primes
    CHECK_THROWS_AS(mobius(APoly::zero(F2)), domain_error);

    // sum over monic divisors b of a: mu(b) = [a is a unit], deg a <= 5
    for (uint32_t p : {2u, 3u}) {
        const SmallField* F = SmallField::get(p, 1);
        uint64_t total = 1;
        for (int i = 0; i < 6; ++i) total *= F->q();
        uint64_t step = (p == 2) ? 1 : 11;
        for (uint64_t idx = 1; idx < total; idx += step) {
            std::vector<uint32_t> c;
            uint64_t t = idx;
            while (t) {
                c.push_back(static_cast<uint32_t>(t % F->q()));
                t /= F->q();
            }
            APoly a(F, std::move(c));
            int sum = 0;
            for (const auto& b : monic_divisors(a)) sum += mobius(b);
            CHECK(sum == (a.is_constant() ? 1 : 0));
        }
    }
}

TEST_CASE("monic divisors: stated examples") {
    const SmallField* F2 = SmallField::get(2, 1);
    auto d1 = monic_divisors(APoly::T_pow(F2, 2));
    REQUIRE(d1.size() == 3);
    CHECK(d1[0] == APoly::constant(F2, 1));
    CHECK(d1[1] == mk(F2, {0, 1}));
    CHECK(d1[2] == APoly::T_pow(F2, 2));

    auto d2 = monic_divisors(mk(F2, {0, 1, 1}));
    REQUIRE(d2.size() == 4);
    CHECK(d2[1] == mk(F2, {0, 1}));
    CHECK(d2[2] == mk(F2, {1, 1}));
    CHECK(d2[3] == mk(F2, {0, 1, 1}));

    auto d3 = monic_divisors(APoly::constant(F2, 1));
    CHECK(d3.size() == 1);
}

TEST_CASE("primitive monic representatives: counts") {
    const SmallField* F2 = SmallField::get(2, 1);
    const SmallField* F3 = SmallField::get(3, 1);
    APoly T2 = APoly::T(F2), T3 = APoly::T(F3);

    CHECK(primitive_monic_reps(T3, 2).size() == 4);
    CHECK(primitive_monic_reps(T2, 3).size() == 7);
    CHECK(primitive_monic_reps(APoly::T_pow(F2, 2), 2).size() == 12);
    CHECK_THROWS_AS(primitive_monic_reps(APoly::constant(F2, 1), 2), domain_error);
}

TEST_CASE("every primitive vector is F*-equivalent to exactly one representative") {
    const SmallField* F3 = SmallField::get(3, 1);
    APoly N = APoly(F3, {0, 1, 1});  // T^2+T, squarefree with two primes
    uint32_t r = 2;
    auto S = primitive_monic_reps(N, r);
    auto residues = residues_mod(N);
    auto primes = std::vector<APoly>{APoly(F3, {0, 1}), APoly(F3, {1, 1})};
    size_t prim_count = 0;
    for (const auto& a : residues) {
        for (const auto& b : residues) {
            std::vector<APoly> v{a, b};
            bool primitive = true;
            for (const auto& p : primes) {
                if ((a % p).is_zero() && (b % p).is_zero()) primitive = false;
            }
            if (!primitive) continue;
            ++prim_count;
            // count scalings landing in S
            size_t hits = 0;
            for (uint32_t c = 1; c < F3->q(); ++c) {
                std::vector<APoly> w{a.scaled(c) % N, b.scaled(c) % N};
                for (const auto& s : S)
                    if (cmp_vec(w, s) == 0) ++hits;
            }
            CHECK(hits == 1);
        }
    }
    CHECK(prim_count == S.size() * (F3->q() - 1));
}
