#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmf/series.hpp"

using namespace dmf;

namespace {
SeriesDomain& dom_q2_e2() {
    static SeriesDomain d(FqConfig{2, 1, 1}, 2, 96);
    return d;
}
SeriesDomain& dom_q3_e2() {
    static SeriesDomain d(FqConfig{3, 1, 1}, 2, 96);
    return d;
}
SeriesDomain& dom_q2m2() {
    static SeriesDomain d(FqConfig{2, 1, 2}, 2, 96);
    return d;
}

struct Rng {
    uint64_t s;
    uint64_t next() {
        uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

SeriesElem random_elem(const SeriesDomain* d, Rng& rng, long lead_lo = -6, int len = 10) {
    long lead = lead_lo + static_cast<long>(rng.next() % 8);
    std::vector<SmallField::Elem> c(len);
    for (auto& x : c) x = static_cast<SmallField::Elem>(rng.next() % d->Fqm()->q());
    c[0] = 1 + static_cast<SmallField::Elem>(rng.next() % (d->Fqm()->q() - 1));
    return SeriesElem(d, lead, kExactPrec, std::move(c));
}
}  // namespace

TEST_CASE("embedding and valuation normalization") {
    auto& d = dom_q2_e2();
    APoly T = APoly::T(d.Fq());
    SeriesElem t = SeriesElem::embed(&d, T);
    REQUIRE(t.valuation().has_value());
    CHECK(*t.valuation() == Rat(-1));  // v(T) = -1
    CHECK(*SeriesElem::one(&d).valuation() == Rat(0));
    CHECK(*SeriesElem::u_pow(&d, 1).valuation() == Rat(1, 2));  // uniformizer with e = 2
    // |T| = q: q^(-v) = q
    CHECK(t.valuation()->num == -1);
}

TEST_CASE("exact inverse of monomials: T * T^{-1} = 1 exactly") {
    auto& d = dom_q2_e2();
    SeriesElem t = SeriesElem::embed(&d, APoly::T(d.Fq()));
    SeriesElem ti = t.inverse();
    CHECK(ti.exact());
    SeriesElem prod = t * ti;
    CHECK(prod == SeriesElem::one(&d));
}

TEST_CASE("x * x^{-1} = 1 + O(u^cap) for non-monomials") {
    auto& d = dom_q2_e2();
    SeriesElem x(&d, -2, kExactPrec, {1, 0, 1, 1});
    SeriesElem p = x * x.inverse();
    CHECK(p.nonzero());
    CHECK(p.lead() == 0);
    CHECK(p.coeffs().size() == 1);
    CHECK(!p.exact());
    SeriesElem diff = p - SeriesElem::one(&d);
    CHECK(zero_to(diff, p.prec()));
}

TEST_CASE("characteristic-2 cancellation: (u+u^2) + (u-u^2) = 0") {
    auto& d = dom_q2_e2();
    SeriesElem a(&d, 1, kExactPrec, {1, 1});
    SeriesElem b(&d, 1, kExactPrec, {1, 1});  // u - u^2 = u + u^2 in char 2
    SeriesElem s = a + b;
    CHECK(s.exact_zero());
}

TEST_CASE("precision propagation rules") {
    auto& d = dom_q3_e2();
    SeriesElem x(&d, -1, 10, {1, 2});
    SeriesElem y(&d, 2, 7, {2});
    SeriesElem s = x + y;
    CHECK(s.prec() == 7);
    SeriesElem m = x * y;
    // min(lead_x + prec_y, lead_y + prec_x) = min(-1+7, 2+10) = 6
    CHECK(m.prec() == 6);
    CHECK(m.lead() == 1);
    SeriesElem q = x / y;
    CHECK(q.lead() == -3);
    // relative precisions 11 and 5 -> quotient relative 5
    CHECK(q.prec() == -3 + 5);
}

TEST_CASE("division by zero-to-precision raises precision error") {
    auto& d = dom_q2_e2();
    SeriesElem z = SeriesElem::zero(&d, 12);
    SeriesElem x = SeriesElem::one(&d);
    CHECK_THROWS_AS(x / z, precision_error);
    CHECK_THROWS_AS(x / SeriesElem::zero(&d), domain_error);
}

TEST_CASE("ultrametric inequalities on random pairs") {
    for (auto* d : {&dom_q2_e2(), &dom_q3_e2(), &dom_q2m2()}) {
        Rng rng{42};
        for (int it = 0; it < 200; ++it) {
            SeriesElem x = random_elem(d, rng);
            SeriesElem y = random_elem(d, rng);
            auto vx = *x.valuation(), vy = *y.valuation();
            SeriesElem s = x + y;
            if (s.nonzero()) {
                Rat vs = *s.valuation();
                CHECK(vs >= std::min(vx, vy));
                if (vx != vy) CHECK(vs == std::min(vx, vy));
            }
            SeriesElem m = x * y;
            CHECK(*m.valuation() == vx + vy);
        }
    }
}

TEST_CASE("frobenius power semantics") {
    auto& d = dom_q2_e2();
    SeriesElem t = SeriesElem::embed(&d, APoly::T(d.Fq()));
    SeriesElem t2 = t.frobenius_pow(1);
    CHECK(t2 == SeriesElem::embed(&d, APoly::T_pow(d.Fq(), 2)));

    Rng rng{7};
    for (int it = 0; it < 50; ++it) {
        SeriesElem a = random_elem(&d, rng, -3, 6);
        SeriesElem b = random_elem(&d, rng, -3, 6);
        // additive over F_q in characteristic p
        SeriesElem lhs = (a + b).frobenius_pow(1);
        SeriesElem rhs = a.frobenius_pow(1) + b.frobenius_pow(1);
        long P = std::min(lhs.prec(), rhs.prec());
        CHECK(approx_equal(lhs.truncated(P), rhs.truncated(P), std::min(P, 64L)));
        // agreement with a multiplication chain, i <= 2
        SeriesElem f2 = a.frobenius_pow(2);
        SeriesElem chain = a * a;  // q = 2
        chain = chain * chain;
        long P2 = std::min(f2.prec(), chain.prec());
        CHECK(approx_equal(f2.truncated(P2), chain.truncated(P2), std::min(P2, 64L)));
    }
}

TEST_CASE("approx_equal threshold semantics") {
    auto& d = dom_q2_e2();
    SeriesElem u3 = SeriesElem::u_pow(&d, 3);
    SeriesElem z = SeriesElem::zero(&d);
    CHECK(approx_equal(u3, z, 3));
    CHECK(!approx_equal(u3, z, 4));
    CHECK(approx_equal(u3, u3, 64));
    SeriesElem zz = SeriesElem::zero(&d, 5);
    CHECK_THROWS_AS(approx_equal(u3, zz, 8), precision_error);
}

TEST_CASE("coefficient-field coordinates over F_q (m = 2)") {
    auto& d = dom_q2m2();
    const SmallField* F4 = d.Fqm();
    for (uint32_t z = 0; z < F4->q(); ++z) {
        auto c = d.fq_coords(z);
        CHECK(d.from_fq_coords(c) == z);
    }
}

TEST_CASE("K_infty coordinate decomposition recombines") {
    auto& d = dom_q2m2();
    Rng rng{99};
    const SeriesDomain* kd = d.kinfty();
    CHECK(kd->e() == 1);
    CHECK(kd->m() == 1);
    for (int it = 0; it < 40; ++it) {
        SeriesElem x = random_elem(&d, rng, -5, 9);
        auto rows = kinfty_coords(x);
        REQUIRE(rows.size() == d.e() * d.m());
        // recombine: sum over rows of g^t u^j row(1/T), evaluated in the big domain
        SeriesElem acc = SeriesElem::zero(&d);
        for (uint32_t j = 0; j < d.e(); ++j) {
            for (uint32_t t = 0; t < d.m(); ++t) {
                const SeriesElem& row = rows[j * d.m() + t];
                // map row coefficients back: (1/T)^k -> u^{e k}
                SeriesElem part = SeriesElem::zero(&d);
                for (size_t i = 0; i < row.coeffs().size(); ++i) {
                    if (!row.coeffs()[i]) continue;
                    long k = row.lead() + static_cast<long>(i);
                    SmallField::Elem cf = d.embed_base(row.coeffs()[i]);
                    SmallField::Elem gt = d.Fqm()->pow(d.Fqm()->gen(), t);
                    SeriesElem term = SeriesElem::u_pow(&d, d.e() * k + j).scaled(d.Fqm()->mul(cf, gt));
                    part = part + term;
                }
                acc = acc + part;
            }
        }
        CHECK(approx_equal(acc, x, 40));
    }
}

TEST_CASE("precision soundness: higher-precision run truncates to the lower one") {
    // same pipeline at two caps; the lower-precision result is a truncation
    FqConfig cfg{2, 1, 1};
    SeriesDomain d1(cfg, 2, 48), d2(cfg, 2, 96);
    for (auto* dd : {&d1, &d2}) {
        (void)dd;
    }
    auto pipeline = [](const SeriesDomain* d) {
        SeriesElem x(d, -2, kExactPrec, {1, 1, 0, 1});
        SeriesElem y = x.inverse();
        SeriesElem z = y * y + x;
        return z / (x + SeriesElem::one(d));
    };
    SeriesElem lo = pipeline(&d1), hi = pipeline(&d2);
    SeriesElem hi_cut = hi.truncated(lo.prec());
    CHECK(hi_cut.lead() == lo.lead());
    CHECK(hi_cut.prec() == lo.prec());
    CHECK(hi_cut.coeffs() == lo.coeffs());
}
