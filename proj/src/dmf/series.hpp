#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "apoly.hpp"
#include "rational.hpp"
#include "smallfield.hpp"

namespace dmf {

class SeriesElem;

// Knowledge bound sentinel for exactly-known elements.
inline constexpr long kExactPrec = 1L << 48;

inline long prec_add(long a, long b) { return (a >= kExactPrec || b >= kExactPrec) ? kExactPrec : a + b; }

// One field tower per run: series in the uniformizer u with u^e = 1/T and
// coefficients in F_{q^m}.  Valuation is normalized by v(T) = -1, so
// v(u) = 1/e and the value group of nonzero elements is (1/e)Z.
//
// rel_cap bounds the number of coefficients any arithmetic result keeps
// beyond its leading exponent; precision bookkeeping stays honest under the
// cap because prec is lowered whenever digits are dropped.
class SeriesDomain {
public:
    SeriesDomain(FqConfig cfg, uint32_t e, long rel_cap);

    const FqConfig& config() const { return cfg_; }
    uint32_t e() const { return e_; }
    uint32_t m() const { return cfg_.m; }
    uint32_t q() const { return cfg_.q(); }
    long rel_cap() const { return rel_cap_; }
    const SmallField* Fq() const { return fq_; }
    const SmallField* Fqm() const { return fqm_; }

    SmallField::Elem embed_base(SmallField::Elem c) const { return embed_[c]; }
    // coordinates of an F_{q^m} element over the F_q-basis {1, g, ..., g^(m-1)}
    std::vector<SmallField::Elem> fq_coords(SmallField::Elem z) const;
    SmallField::Elem from_fq_coords(const std::vector<SmallField::Elem>& c) const;

    // The residue-degree-1, unramified domain F_q((1/T)) used for
    // coordinate computations; equals this when e = m = 1.
    const SeriesDomain* kinfty() const;

    bool same(const SeriesDomain& o) const {
        return cfg_.p == o.cfg_.p && cfg_.s == o.cfg_.s && cfg_.m == o.cfg_.m && e_ == o.e_;
    }

private:
    FqConfig cfg_;
    uint32_t e_;
    long rel_cap_;
    const SmallField* fq_;
    const SmallField* fqm_;
    std::vector<SmallField::Elem> embed_;
    // F_p-linear change of coordinates between the digit basis of F_{q^m}
    // and the F_q-basis {g^t}; both directions, row-major (s*m) x (s*m)
    std::vector<uint32_t> basis_mat_, basis_inv_;
    std::unique_ptr<SeriesDomain> kinf_;

    void build_coord_matrices();
};

// Truncated Laurent series: the coefficients on [lead, lead+len) are stored,
// those on [lead+len, prec) are exactly zero, and nothing is known from prec
// on.  Canonical form: a.front() != 0; a zero-to-precision element has an
// empty array and lead == prec.
class SeriesElem {
public:
    SeriesElem() : dom_(nullptr), lead_(0), prec_(0) {}
    SeriesElem(const SeriesDomain* dom, long lead, long prec, std::vector<SmallField::Elem> coeffs);

    static SeriesElem zero(const SeriesDomain* dom, long prec = kExactPrec);
    static SeriesElem one(const SeriesDomain* dom);
    static SeriesElem scalar(const SeriesDomain* dom, SmallField::Elem c_qm);
    // u^k, exact
    static SeriesElem u_pow(const SeriesDomain* dom, long k);
    // image of a polynomial in T = u^(-e); exact
    static SeriesElem embed(const SeriesDomain* dom, const APoly& a);

    const SeriesDomain* domain() const { return dom_; }
    long lead() const { return lead_; }
    long prec() const { return prec_; }
    bool exact() const { return prec_ >= kExactPrec; }
    const std::vector<SmallField::Elem>& coeffs() const { return a_; }
    SmallField::Elem coeff_at(long k) const;

    // certified nonzero at current knowledge
    bool nonzero() const { return !a_.empty(); }
    // exactly the zero element
    bool exact_zero() const { return a_.empty() && exact(); }

    // v(x) = lead/e when a nonzero coefficient is known; nullopt for an
    // element indistinguishable from zero (floor: >= prec/e)
    std::optional<Rat> valuation() const;
    Rat valuation_floor() const;

    friend SeriesElem operator+(const SeriesElem& x, const SeriesElem& y);
    friend SeriesElem operator-(const SeriesElem& x, const SeriesElem& y);
    friend SeriesElem operator*(const SeriesElem& x, const SeriesElem& y);
    friend SeriesElem operator/(const SeriesElem& x, const SeriesElem& y);
    SeriesElem operator-() const;

    SeriesElem inverse() const;
    SeriesElem scaled(SmallField::Elem c_qm) const;
    SeriesElem shifted(long k) const;  // * u^k
    SeriesElem pow(uint64_t n) const;
    // x^(q^i) by coefficient Frobenius and exponent scaling
    SeriesElem frobenius_pow(uint32_t i) const;
    SeriesElem truncated(long P) const;
    // lower the knowledge bound to at most P (no-op if already lower)
    SeriesElem with_prec_at_most(long P) const { return truncated(P); }

    friend bool operator==(const SeriesElem& x, const SeriesElem& y) {
        return x.lead_ == y.lead_ && x.prec_ == y.prec_ && x.a_ == y.a_;
    }

    std::string str() const;

private:
    void canonicalize();
    const SeriesDomain* dom_;
    long lead_;
    long prec_;
    std::vector<SmallField::Elem> a_;
};

// true iff v(x-y) >= P/e; requires both knowledge bounds >= P
bool approx_equal(const SeriesElem& x, const SeriesElem& y, long P);
// true iff v(x) >= P/e (i.e. no known nonzero digit below u^P); requires prec >= P
bool zero_to(const SeriesElem& x, long P);

enum class SeriesOp { add, sub, mul, div };
SeriesElem series_arith(const SeriesElem& x, const SeriesElem& y, SeriesOp op);

// K_infty-coordinate decomposition: x = sum over rows (j,t) of
// g^t u^j * row(T^{-1}), row index j*m + t, each row a series over
// dom->kinfty().  Exactness and knowledge bounds carry over per row.
std::vector<SeriesElem> kinfty_coords(const SeriesElem& x);

}  // namespace dmf
