#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dmf/conway_data.hpp"
#include "dmf/smallfield.hpp"

using namespace dmf;

TEST_CASE("prime field arithmetic") {
    const SmallField* F3 = SmallField::get(3, 1);
    CHECK(F3->q() == 3);
    CHECK(F3->add(1, 2) == 0);
    CHECK(F3->mul(2, 2) == 1);
    CHECK(F3->inv(2) == 2);
    CHECK(F3->neg(1) == 2);
    CHECK(F3->pow(2, 2) == 1);
    CHECK(F3->pow(2, -1) == 2);
}

TEST_CASE("F4 arithmetic and subfield embedding") {
    const SmallField* F2 = SmallField::get(2, 1);
    const SmallField* F4 = SmallField::get(2, 2);
    CHECK(F4->q() == 4);
    // x^2 = x + 1 under the shipped modulus
    CHECK(F4->mul(2, 2) == 3);
    CHECK(F4->mul(2, 3) == 1);  // x * (x+1) = x^2 + x = 1
    auto emb = F4->embedding_from(*F2);
    CHECK(emb[0] == 0);
    CHECK(emb[1] == 1);
    const SmallField* F16 = SmallField::get(2, 4);
    auto emb4 = F16->embedding_from(*F4);
    // embedded elements satisfy z^4 = z
    for (uint32_t a = 0; a < 4; ++a) CHECK(F16->pow(emb4[a], 4) == emb4[a]);
    // embedding is a field homomorphism
    for (uint32_t a = 0; a < 4; ++a)
        for (uint32_t b = 0; b < 4; ++b) {
            CHECK(F16->mul(emb4[a], emb4[b]) == emb4[F4->mul(a, b)]);
            CHECK(F16->add(emb4[a], emb4[b]) == emb4[F4->add(a, b)]);
        }
}

TEST_CASE("field axioms on F9 and F8 by enumeration") {
    for (auto [p, n] : {std::pair<uint32_t, uint32_t>{3, 2}, {2, 3}}) {
        const SmallField* F = SmallField::get(p, n);
        uint32_t q = F->q();
        for (uint32_t a = 0; a < q; ++a) {
            for (uint32_t b = 0; b < q; ++b) {
                CHECK(F->add(a, b) == F->add(b, a));
                CHECK(F->mul(a, b) == F->mul(b, a));
                for (uint32_t c = 0; c < q && a < 4 && b < 4; ++c) {
                    CHECK(F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c)));
                }
            }
            if (a != 0) CHECK(F->mul(a, F->inv(a)) == 1);
            CHECK(F->add(a, F->neg(a)) == 0);
        }
    }
}

TEST_CASE("frobenius is the p-power map") {
    const SmallField* F9 = SmallField::get(3, 2);
    for (uint32_t a = 0; a < 9; ++a) {
        CHECK(F9->frob(a) == F9->mul(F9->mul(a, a), a));
        // additive
        for (uint32_t b = 0; b < 9; ++b) CHECK(F9->frob(F9->add(a, b)) == F9->add(F9->frob(a), F9->frob(b)));
    }
}

TEST_CASE("shipped moduli are primitive and norm-compatible") {
    // verify a sample of table entries: the generator has full order and the
    // power map lands on the subfield generator
    for (auto [p, n] : {std::pair<uint32_t, uint32_t>{2, 4}, {2, 6}, {3, 4}, {5, 2}, {7, 2}}) {
        const SmallField* F = SmallField::get(p, n);
        uint32_t q = F->q();
        // full order: g^k != 1 for proper divisors of q-1 (construction already
        // checks distinctness; recheck the subgroup orders)
        for (uint32_t d = 1; d < q - 1; ++d) {
            if ((q - 1) % d == 0) CHECK(F->from_dlog(d) != 1);
        }
        for (uint32_t r = 2; r < n; ++r) {
            if (n % r != 0) continue;
            const SmallField* S = SmallField::get(p, n / r);
            uint64_t stride = (static_cast<uint64_t>(q) - 1) / (S->q() - 1);
            // norm compatibility: g^stride equals the subfield Conway generator
            // under the embedding
            auto emb = F->embedding_from(*S);
            CHECK(F->from_dlog(stride) == emb[S->gen()]);
        }
    }
}
