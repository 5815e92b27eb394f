#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "lattice.hpp"
#include "series.hpp"

namespace dmf {

// Exponential e_W(z) = z prod_{0 != w in W} (1 - z/w) of the F_q-span W of a
// generator sequence, built stage by stage:
//   e_{W + F_q g} = y - y^q / xi^(q-1)  composed with  y = e_W,  xi = e_W(g).
// Level L refers to the span of the first L generators.  The xi values are
// prefix-stable; coefficient vectors are cached per requested level.
//
// Everything here is about finite spans.  Infinite-lattice tails are bounded
// by the callers, which know the geometry.
class FiniteExpTower {
public:
    FiniteExpTower(const SeriesDomain* dom, std::function<SeriesElem(size_t)> generator);

    const SeriesDomain* domain() const { return dom_; }
    void ensure(size_t level);
    // e_{W_level}(z)
    SeriesElem eval(const SeriesElem& z, size_t level);
    // coefficients alpha_0..alpha_level of e_{W_level} (alpha_0 = 1)
    const std::vector<SeriesElem>& alphas(size_t level);
    const SeriesElem& xi(size_t s) const { return xi_.at(s); }

private:
    const SeriesDomain* dom_;
    std::function<SeriesElem(size_t)> gen_;
    std::vector<SeriesElem> xi_;        // xi_[s] = e_{W_s}(g_s)
    std::vector<SeriesElem> xi_inv_;    // xi_[s]^(1-q)
    std::map<size_t, std::vector<SeriesElem>> alpha_cache_;
};

// Coefficients of the Goss polynomials G_1..G_kmax of an exponential with the
// given coefficient list: G_1 = X, G_k = X * sum_{q^i < k} alpha_i G_{k-q^i}.
// Entry [k][m] is the X^m coefficient of G_k (index 0 unused for k >= 1).
std::vector<std::vector<SeriesElem>> goss_coefficients(const SeriesDomain* dom,
                                                       const std::vector<SeriesElem>& alphas, long kmax);

// sum over w in W_level of (z0 + w)^(-k); z0 not in W_level
SeriesElem coset_power_sum(FiniteExpTower& tower, size_t level, const SeriesElem& z0, long k);

// sum over nonzero w in W_level of w^(-k), via the constant-term identity
// sum_m g_{k,m} [z^m] (z/e_W(z))^m
SeriesElem zero_power_sum(FiniteExpTower& tower, size_t level, long k);

// Smallest degree bound n such that every omitted point (some coefficient of
// degree >= n) satisfies  e*k*(n - vmax) >= P + margin  in u-digit terms.
long tail_degree_bound(long k, long P, Rat vmax, long e, long margin = 1);

// Generator sequence for the standard filtration of a reduced lattice basis:
// layer j contributes T^j * basis_i, smallest basis vectors first.
std::function<SeriesElem(size_t)> lattice_generators(const SMBCertificate& cert);

// Generator sequence N*T^s for segment sums over the polynomial ring image.
std::function<SeriesElem(size_t)> segment_generators(const SeriesDomain* dom, const APoly& N);

}  // namespace dmf
