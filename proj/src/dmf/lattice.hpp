#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "apoly.hpp"
#include "rational.hpp"
#include "series.hpp"

namespace dmf {

// Ordered tuple of K_infty-linearly independent elements spanning the
// A-lattice sum A*omega_i.  Stored un-normalized; projective normalization
// (last coordinate 1) is applied by the operations that require it.
struct LatticeFrame {
    std::vector<SeriesElem> omegas;

    size_t rank() const { return omegas.size(); }
    const SeriesDomain* domain() const { return omegas.empty() ? nullptr : omegas.front().domain(); }
    LatticeFrame scaled(const SeriesElem& c) const;
    // divide by the last coordinate
    LatticeFrame normalized() const;
    bool last_is_one() const;
};

// r x r matrix over A with determinant in F_q^*.
struct GammaMatrix {
    std::vector<std::vector<APoly>> a;  // a[row][col]

    size_t rank() const { return a.size(); }
    static GammaMatrix identity(const SmallField* F, size_t r);
    APoly det() const;
    bool is_unimodular() const;
    GammaMatrix mul(const GammaMatrix& other) const;
    // largest monic N with gamma == identity mod N, or zero polynomial when
    // gamma == identity exactly
    APoly congruence_level() const;
};

// Reduced basis with its change-of-basis bookkeeping:
//   basis.omegas[j] = sum_i U[i][j] * frame.omegas[i],  det U in F_q^*adic
//   frame.omegas[i] = sum_j Uinv[j][i] * basis.omegas[j]
// minima_logq[j] = log_q |basis_j|, weakly increasing.
struct SMBCertificate {
    LatticeFrame basis;
    std::vector<std::vector<APoly>> U;
    std::vector<std::vector<APoly>> Uinv;
    std::vector<Rat> minima_logq;

    // largest v(basis_j) = -minima_logq.front()
    Rat vmax() const { return -minima_logq.front(); }
    Rat vmin() const { return -minima_logq.back(); }
    // congruence numerators rewritten over the reduced basis
    std::vector<APoly> transform_numerators(const APoly& level, const std::vector<APoly>& numerators) const;
};

// True iff no nontrivial K_infty-combination of the frame vanishes to the
// working precision.  Indeterminate cases raise precision_error.
bool check_independent(const LatticeFrame& frame);

// Successive-minimum basis by degree-weighted column reduction of the
// K_infty-coordinate matrix, pivoting on leading valuations, then sorting.
// All column operations stay in GL(r, A).
SMBCertificate smb_reduce(const LatticeFrame& frame);

// True iff the reversed tuple (omega_r, ..., omega_1) is an SMB of the
// lattice of the frame; the frame must have last coordinate 1.
bool in_fundamental_domain(const LatticeFrame& frame);

// Left action on column vectors with renormalization to last coordinate 1;
// also returns the bottom-row pairing sum_i gamma[r-1][i] * omega_i.
struct GammaActResult {
    LatticeFrame frame;
    SeriesElem aut;
};
GammaActResult gamma_act(const GammaMatrix& gamma, const LatticeFrame& frame);

// Every nonzero lattice point sum a_i omega_i with deg a_i <= D, each exactly
// once.  The callback receives the coefficient vector and the point.
void enumerate_points(const LatticeFrame& frame, long D,
                      const std::function<void(const std::vector<APoly>&, const SeriesElem&)>& fn,
                      uint64_t cap = 50000000);
uint64_t point_count(uint32_t q, size_t r, long D);

}  // namespace dmf
