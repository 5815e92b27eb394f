#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace dmf {

// F_{p^n} with the modulus taken from the fixed Conway table, so element
// encodings are reproducible across runs and implementations.
//
// Elements are encoded as integers in [0, p^n): the base-p digits are the
// coefficients (low to high) of the residue polynomial.  Multiplication
// goes through discrete-log tables, which keeps every op a few lookups.
// Instances are immutable after construction; see SmallField::get.
class SmallField {
public:
    using Elem = uint32_t;

    // Shared, lazily-built instance per (p, n).  Pointers remain valid for
    // the lifetime of the process.
    static const SmallField* get(uint32_t p, uint32_t n);

    uint32_t p() const { return p_; }
    uint32_t n() const { return n_; }
    uint32_t q() const { return q_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    // the Conway generator x of the multiplicative group
    Elem gen() const { return gen_; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const {
        if (a == 0) throw domain_error("inverse of zero field element");
        return exp_[(q_ - 1) - log_[a]];
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    // a^e for any integer e (negative allowed for nonzero a)
    Elem pow(Elem a, long long e) const;
    // Frobenius a -> a^(p^i)
    Elem frob(Elem a, uint32_t i = 1) const { return pow(a, ipow_p(i)); }

    // integer encoding of a scalar c in the prime field, c in [0, p)
    Elem from_int(uint32_t c) const { return c % p_; }

    // multiplicative order table index (log base gen); a != 0
    uint32_t dlog(Elem a) const {
        if (a == 0) throw domain_error("dlog of zero");
        return log_[a];
    }
    Elem from_dlog(uint64_t k) const { return exp_[k % (q_ - 1)]; }

    // Embedding of a subfield F_{p^d} (d | n) along compatible Conway
    // generators: g_sub -> g^( (p^n-1)/(p^d-1) ).
    std::vector<Elem> embedding_from(const SmallField& sub) const;

    // base-p digits of the encoding, low to high, length n
    std::vector<uint32_t> digits(Elem a) const;
    Elem from_digits(const std::vector<uint32_t>& d) const;

    // modulus coefficients (low to high, length n+1), as data
    const std::vector<uint32_t>& modulus() const { return modulus_; }

private:
    SmallField(uint32_t p, uint32_t n);

    uint64_t ipow_p(uint32_t i) const;

    uint32_t p_ = 0, n_ = 0, q_ = 0;
    Elem gen_ = 0;
    std::vector<uint32_t> modulus_;
    std::vector<Elem> exp_;    // size 2(q-1): g^i, wraparound-free lookups
    std::vector<uint32_t> log_;  // size q; log_[0] unused
};

}  // namespace dmf
