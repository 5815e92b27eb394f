#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "smallfield.hpp"

namespace dmf {

// q = p^s base field, with an extension degree m for the series coefficient
// field F_{q^m}.  Validated on construction.
struct FqConfig {
    uint32_t p = 2;
    uint32_t s = 1;
    uint32_t m = 1;

    uint32_t q() const;
    const SmallField* base_field() const;       // F_q
    const SmallField* coeff_field() const;      // F_{q^m}
    void validate() const;
};

// Element of A = F_q[T].  Coefficients low to high, canonical form has no
// trailing zeros; the zero polynomial has an empty coefficient vector and
// degree() < 0 (the -infinity sentinel is any negative value).
class APoly {
public:
    APoly() : field_(nullptr) {}
    explicit APoly(const SmallField* field) : field_(field) {}
    APoly(const SmallField* field, std::vector<uint32_t> coeffs);

    static APoly zero(const SmallField* f) { return APoly(f); }
    static APoly constant(const SmallField* f, uint32_t c);
    static APoly T(const SmallField* f) { return APoly(f, {0, 1}); }
    // T^k
    static APoly T_pow(const SmallField* f, size_t k);

    const SmallField* field() const { return field_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    long deg() const { return static_cast<long>(c_.size()) - 1; }
    uint32_t lead() const;
    uint32_t coeff(size_t i) const { return i < c_.size() ? c_[i] : 0; }
    bool is_monic() const { return !c_.empty() && lead() == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_unit() const { return c_.size() == 1; }

    APoly monic() const;  // divide by leading coefficient

    friend APoly operator+(const APoly& a, const APoly& b);
    friend APoly operator-(const APoly& a, const APoly& b);
    friend APoly operator*(const APoly& a, const APoly& b);
    APoly operator-() const;
    APoly scaled(uint32_t c) const;

    friend bool operator==(const APoly& a, const APoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const APoly& a, const APoly& b) { return !(a == b); }

    // canonical order: degree first, then coefficient vectors from degree 0
    // upward in the fixed integer encoding of F_q
    static int cmp(const APoly& a, const APoly& b);
    friend bool operator<(const APoly& a, const APoly& b) { return cmp(a, b) < 0; }

    // quotient and remainder; b != 0
    static std::pair<APoly, APoly> divmod(const APoly& a, const APoly& b);
    friend APoly operator%(const APoly& a, const APoly& b) { return divmod(a, b).second; }
    friend APoly operator/(const APoly& a, const APoly& b) { return divmod(a, b).first; }

    // monic gcd; gcd(0,0) = 0
    static APoly gcd(APoly a, APoly b);
    APoly pow(uint64_t e) const;
    // derivative d/dT
    APoly derivative() const;
    // inverse modulo mod, when gcd(*this, mod) = 1
    std::optional<APoly> inverse_mod(const APoly& mod) const;

    std::string str(const std::string& var = "T") const;

private:
    void trim();
    const SmallField* field_;
    std::vector<uint32_t> c_;
};

// unit * prod factors[i].first ^ factors[i].second, factors monic
// irreducible, pairwise distinct, sorted canonically.
struct Factorization {
    uint32_t unit = 1;
    std::vector<std::pair<APoly, uint32_t>> factors;

    APoly expand(const SmallField* f) const;
};

// Canonical factorization by distinct-degree then equal-degree splitting.
// The equal-degree step draws from a fixed-seed generator, so output is
// reproducible; factors are sorted by (degree, coefficient order).
Factorization factor(const APoly& f);

// Moebius function of A; +-1 on squarefree, 0 otherwise, 1 on units.
int mobius(const APoly& a);

// All monic divisors including 1 and the monic associate, sorted.
std::vector<APoly> monic_divisors(const APoly& a);

// Congruence datum u = numerators / N in (N^{-1}A/A)^r.
// Numerators reduced mod N; u = 0 is representable but most consumers
// require membership in T(N) = (N^{-1}A/A)^r \ {0}.
struct CongClass {
    APoly level;                  // monic N, deg >= 1
    std::vector<APoly> numerators;  // length r, each reduced mod N

    size_t rank() const { return numerators.size(); }
    bool is_zero() const;
    void validate() const;
    // scan left to right; the class is monic if the first nonzero numerator is
    bool is_monic_vector() const;
    CongClass scaled(uint32_t c) const;  // c * u, c in F_q
    friend bool operator==(const CongClass& a, const CongClass& b) {
        return a.level == b.level && a.numerators == b.numerators;
    }
};

// Primitive residue vectors in (A/N)^r: no prime divisor of N divides every
// coordinate.  Returns one monic representative per F_q^*-orbit, sorted by
// the coordinatewise canonical order.  Cardinality is the cusp number.
std::vector<std::vector<APoly>> primitive_monic_reps(const APoly& N, uint32_t r,
                                                     uint64_t enumeration_cap = 10000000);

// All residues mod N in canonical enumeration order (q^deg N of them).
std::vector<APoly> residues_mod(const APoly& N);

// canonical order on residue vectors
int cmp_vec(const std::vector<APoly>& a, const std::vector<APoly>& b);

}  // namespace dmf
