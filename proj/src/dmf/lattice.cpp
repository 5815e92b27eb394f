#include "lattice.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace dmf {

LatticeFrame LatticeFrame::scaled(const SeriesElem& c) const {
    LatticeFrame r;
    r.omegas.reserve(omegas.size());
    for (const auto& w : omegas) r.omegas.push_back(w * c);
    return r;
}

LatticeFrame LatticeFrame::normalized() const {
    if (omegas.empty()) throw domain_error("empty frame");
    const SeriesElem& last = omegas.back();
    if (!last.nonzero()) throw precision_error("cannot normalize: last coordinate indistinguishable from zero");
    return scaled(last.inverse());
}

bool LatticeFrame::last_is_one() const {
    if (omegas.empty()) return false;
    const SeriesElem& last = omegas.back();
    if (!last.nonzero()) return false;
    SeriesElem d = last - SeriesElem::one(last.domain());
    return d.coeffs().empty();
}

GammaMatrix GammaMatrix::identity(const SmallField* F, size_t r) {
    GammaMatrix g;
    g.a.assign(r, std::vector<APoly>(r, APoly::zero(F)));
    for (size_t i = 0; i < r; ++i) g.a[i][i] = APoly::constant(F, 1);
    return g;
}

APoly GammaMatrix::det() const {
    size_t r = a.size();
    if (r == 0) throw domain_error("empty matrix");
    const SmallField* F = a[0][0].field();
    if (r == 1) return a[0][0];
    if (r > 8) throw resource_error("determinant expansion capped at rank 8");
    APoly acc = APoly::zero(F);
    for (size_t j = 0; j < r; ++j) {
        if (a[0][j].is_zero()) continue;
        GammaMatrix minor;
        minor.a.assign(r - 1, std::vector<APoly>(r - 1, APoly::zero(F)));
        for (size_t i = 1; i < r; ++i) {
            size_t cc = 0;
            for (size_t k = 0; k < r; ++k) {
                if (k == j) continue;
                minor.a[i - 1][cc++] = a[i][k];
            }
        }
        APoly term = a[0][j] * minor.det();
        if (j % 2 == 1) term = -term;
        acc = acc + term;
    }
    return acc;
}

bool GammaMatrix::is_unimodular() const {
    APoly d = det();
    return !d.is_zero() && d.is_constant();
}

GammaMatrix GammaMatrix::mul(const GammaMatrix& o) const {
    size_t r = a.size();
    const SmallField* F = a[0][0].field();
    GammaMatrix out;
    out.a.assign(r, std::vector<APoly>(r, APoly::zero(F)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            APoly acc = APoly::zero(F);
            for (size_t k = 0; k < r; ++k) acc = acc + a[i][k] * o.a[k][j];
            out.a[i][j] = acc;
        }
    return out;
}

APoly GammaMatrix::congruence_level() const {
    size_t r = a.size();
    const SmallField* F = a[0][0].field();
    APoly g = APoly::zero(F);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            APoly d = a[i][j];
            if (i == j) d = d - APoly::constant(F, 1);
            g = APoly::gcd(g, d);
        }
    return g;
}

std::vector<APoly> SMBCertificate::transform_numerators(const APoly& level, const std::vector<APoly>& nums) const {
    size_t r = basis.rank();
    if (nums.size() != r) throw domain_error("congruence rank does not match frame rank");
    std::vector<APoly> out(r, APoly::zero(level.field()));
    for (size_t j = 0; j < r; ++j) {
        APoly acc = APoly::zero(level.field());
        for (size_t i = 0; i < r; ++i) acc = acc + Uinv[j][i] * nums[i];
        out[j] = acc % level;
    }
    return out;
}

namespace {

struct ColState {
    bool has_pivot = false;
    long w = 0;        // max size exponent over rows, in 1/e units
    size_t pivot = 0;  // last row attaining w
    long floor = 0;    // certification floor from knowledge bounds
};

// Weighted column reduction working state.  Row (j,t) of the coordinate
// matrix carries weight q^(-j/e); entry f on that row has size exponent
// s = -e*v_T(f) - j, an integer.
struct Reducer {
    const SeriesDomain* dom;
    const SmallField* Fq;
    size_t r, rows;
    long e;
    std::vector<SeriesElem> omega;
    std::vector<std::vector<SeriesElem>> coord;  // coord[i][row], series over K_infty
    std::vector<std::vector<APoly>> U, Uinv;
    std::vector<ColState> st;

    explicit Reducer(const LatticeFrame& frame) {
        dom = frame.domain();
        if (!dom) throw domain_error("empty frame");
        Fq = dom->Fq();
        r = frame.rank();
        e = dom->e();
        rows = static_cast<size_t>(dom->e()) * dom->m();
        omega = frame.omegas;
        for (const auto& w : omega)
            if (!w.domain()->same(*dom)) throw domain_error("mixed series domains in frame");
        coord.resize(r);
        for (size_t i = 0; i < r; ++i) coord[i] = kinfty_coords(omega[i]);
        U.assign(r, std::vector<APoly>(r, APoly::zero(Fq)));
        Uinv.assign(r, std::vector<APoly>(r, APoly::zero(Fq)));
        for (size_t i = 0; i < r; ++i) U[i][i] = Uinv[i][i] = APoly::constant(Fq, 1);
        st.resize(r);
        for (size_t i = 0; i < r; ++i) refresh(i);
    }

    void refresh(size_t i) {
        ColState s;
        long best = std::numeric_limits<long>::min();
        long floor = std::numeric_limits<long>::min() / 4;
        bool any = false;
        for (size_t row = 0; row < rows; ++row) {
            const SeriesElem& f = coord[i][row];
            long j = static_cast<long>(row) / dom->m();
            if (!f.exact()) floor = std::max(floor, -e * f.prec() - j);
            if (!f.nonzero()) continue;
            any = true;
            long sv = -e * f.lead() - j;
            if (sv >= best) {
                best = sv;
                s.pivot = row;
            }
        }
        s.has_pivot = any;
        s.w = best;
        s.floor = floor;
        if (any && best <= floor)
            throw precision_error("column norm not certified above the knowledge floor (pivot row " +
                                  std::to_string(s.pivot) + ")");
        st[i] = s;
    }

    bool column_exact_zero(size_t i) const {
        for (size_t row = 0; row < rows; ++row)
            if (!coord[i][row].exact_zero()) return false;
        return true;
    }

    // col_i += c * T^delta * col_k
    void colop(size_t i, size_t k, SmallField::Elem c, long delta) {
        APoly shift = APoly::T_pow(Fq, static_cast<size_t>(delta)).scaled(c);
        SeriesElem shift_big = SeriesElem::embed(dom, shift);
        omega[i] = omega[i] + shift_big * omega[k];
        for (size_t row = 0; row < rows; ++row)
            coord[i][row] = coord[i][row] + coord[k][row].shifted(-delta).scaled(c);
        for (size_t row = 0; row < r; ++row) U[row][i] = U[row][i] + shift * U[row][k];
        for (size_t col = 0; col < r; ++col) Uinv[k][col] = Uinv[k][col] - shift * Uinv[i][col];
    }

    void scale(size_t i, SmallField::Elem c) {
        omega[i] = omega[i].scaled(dom->embed_base(c));
        for (size_t row = 0; row < rows; ++row) coord[i][row] = coord[i][row].scaled(c);
        for (size_t row = 0; row < r; ++row) U[row][i] = U[row][i].scaled(c);
        SmallField::Elem ci = Fq->inv(c);
        for (size_t col = 0; col < r; ++col) Uinv[i][col] = Uinv[i][col].scaled(ci);
    }

    void run() {
        size_t guard = 0;
        while (true) {
            if (++guard > 2000000) throw resource_error("reduction iteration cap exceeded");
            size_t fi = r, fk = r;
            for (size_t i = 0; i < r && fi == r; ++i) {
                if (!st[i].has_pivot) {
                    if (column_exact_zero(i)) throw domain_error("frame is not K_infty-linearly independent");
                    throw precision_error("column indistinguishable from zero at its precision");
                }
                for (size_t k = 0; k < i; ++k) {
                    if (st[k].pivot != st[i].pivot) continue;
                    if (st[i].w >= st[k].w) {
                        fi = i;
                        fk = k;
                    } else {
                        fi = k;
                        fk = i;
                    }
                    break;
                }
            }
            if (fi == r) return;
            size_t row = st[fi].pivot;
            long delta = (st[fi].w - st[fk].w) / e;
            SmallField::Elem c = Fq->neg(Fq->div(coord[fi][row].coeffs().front(), coord[fk][row].coeffs().front()));
            colop(fi, fk, c, delta);
            refresh(fi);
        }
    }
};

}  // namespace

bool check_independent(const LatticeFrame& frame) {
    try {
        Reducer red(frame);
        red.run();
        return true;
    } catch (const domain_error&) {
        return false;
    }
}

SMBCertificate smb_reduce(const LatticeFrame& frame) {
    Reducer red(frame);
    red.run();
    size_t r = frame.rank();
    for (size_t i = 0; i < r; ++i) {
        SmallField::Elem lc = red.coord[i][red.st[i].pivot].coeffs().front();
        if (lc != 1) red.scale(i, red.Fq->inv(lc));
    }
    // basis stored in frame order (norms weakly decreasing, so the reversed
    // tuple is the SMB); minima reported weakly increasing
    std::vector<size_t> order(r);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t x, size_t y) {
        if (red.st[x].w != red.st[y].w) return red.st[x].w > red.st[y].w;
        std::vector<APoly> cx, cy;
        for (size_t row = 0; row < r; ++row) {
            cx.push_back(red.U[row][x]);
            cy.push_back(red.U[row][y]);
        }
        return cmp_vec(cx, cy) < 0;
    });
    SMBCertificate cert;
    cert.basis.omegas.resize(r);
    cert.U.assign(r, std::vector<APoly>(r, APoly::zero(red.Fq)));
    cert.Uinv.assign(r, std::vector<APoly>(r, APoly::zero(red.Fq)));
    cert.minima_logq.resize(r);
    for (size_t jnew = 0; jnew < r; ++jnew) {
        size_t jold = order[jnew];
        cert.basis.omegas[jnew] = red.omega[jold];
        cert.minima_logq[r - 1 - jnew] = Rat(red.st[jold].w, red.e);
        for (size_t i = 0; i < r; ++i) cert.U[i][jnew] = red.U[i][jold];
        for (size_t i = 0; i < r; ++i) cert.Uinv[jnew][i] = red.Uinv[jold][i];
    }
    return cert;
}

bool in_fundamental_domain(const LatticeFrame& frame) {
    if (!frame.last_is_one()) throw domain_error("frame must be normalized with last coordinate 1");
    const SeriesDomain* dom = frame.domain();
    size_t r = frame.rank();
    std::vector<SeriesElem> rev(frame.omegas.rbegin(), frame.omegas.rend());
    std::vector<std::vector<SeriesElem>> coord(r);
    for (size_t i = 0; i < r; ++i) coord[i] = kinfty_coords(rev[i]);
    size_t rows = static_cast<size_t>(dom->e()) * dom->m();
    long e = dom->e();
    std::vector<long> w(r, std::numeric_limits<long>::min());
    for (size_t i = 0; i < r; ++i) {
        long floor = std::numeric_limits<long>::min() / 4;
        for (size_t row = 0; row < rows; ++row) {
            const SeriesElem& f = coord[i][row];
            long j = static_cast<long>(row) / dom->m();
            if (!f.exact()) floor = std::max(floor, -e * f.prec() - j);
            if (f.nonzero()) w[i] = std::max(w[i], -e * f.lead() - j);
        }
        if (w[i] == std::numeric_limits<long>::min())
            throw precision_error("frame coordinate indistinguishable from zero");
        if (w[i] <= floor) throw precision_error("frame norm not certified above the knowledge floor");
    }
    for (size_t i = 0; i + 1 < r; ++i)
        if (w[i] > w[i + 1]) return false;
    // orthogonality: within each residue class of the size exponent mod e,
    // the leading coefficient vectors must be F_q-linearly independent
    const SmallField* Fq = dom->Fq();
    for (long cls = 0; cls < e; ++cls) {
        std::vector<std::vector<SmallField::Elem>> vecs;
        for (size_t i = 0; i < r; ++i) {
            if (((w[i] % e) + e) % e != cls) continue;
            std::vector<SmallField::Elem> v(rows, 0);
            for (size_t row = 0; row < rows; ++row) {
                const SeriesElem& f = coord[i][row];
                long j = static_cast<long>(row) / dom->m();
                if (f.nonzero() && -e * f.lead() - j == w[i]) v[row] = f.coeffs().front();
            }
            vecs.push_back(std::move(v));
        }
        size_t rank = 0;
        for (size_t col = 0; col < rows && rank < vecs.size(); ++col) {
            size_t sel = vecs.size();
            for (size_t k = rank; k < vecs.size(); ++k)
                if (vecs[k][col] != 0) {
                    sel = k;
                    break;
                }
            if (sel == vecs.size()) continue;
            std::swap(vecs[rank], vecs[sel]);
            SmallField::Elem piv = Fq->inv(vecs[rank][col]);
            for (size_t k = 0; k < vecs.size(); ++k) {
                if (k == rank || vecs[k][col] == 0) continue;
                SmallField::Elem c = Fq->mul(vecs[k][col], piv);
                for (size_t j2 = col; j2 < rows; ++j2)
                    vecs[k][j2] = Fq->sub(vecs[k][j2], Fq->mul(c, vecs[rank][j2]));
            }
            ++rank;
        }
        if (rank < vecs.size()) return false;
    }
    return true;
}

GammaActResult gamma_act(const GammaMatrix& gamma, const LatticeFrame& frame) {
    size_t r = frame.rank();
    if (gamma.rank() != r) throw domain_error("matrix rank does not match frame rank");
    if (!gamma.is_unimodular()) throw domain_error("matrix determinant is not a unit");
    if (!frame.last_is_one()) throw domain_error("frame must be normalized with last coordinate 1");
    const SeriesDomain* dom = frame.domain();
    std::vector<SeriesElem> img(r, SeriesElem::zero(dom));
    for (size_t i = 0; i < r; ++i) {
        SeriesElem acc = SeriesElem::zero(dom);
        for (size_t j = 0; j < r; ++j) {
            if (gamma.a[i][j].is_zero()) continue;
            acc = acc + SeriesElem::embed(dom, gamma.a[i][j]) * frame.omegas[j];
        }
        img[i] = acc;
    }
    SeriesElem aut = img.back();
    if (!aut.nonzero()) throw precision_error("factor of automorphy indistinguishable from zero");
    GammaActResult res;
    res.aut = aut;
    SeriesElem inv = aut.inverse();
    res.frame.omegas.reserve(r);
    for (size_t i = 0; i < r; ++i) res.frame.omegas.push_back(img[i] * inv);
    return res;
}

uint64_t point_count(uint32_t q, size_t r, long D) {
    uint64_t total = 1;
    for (size_t i = 0; i < r; ++i)
        for (long j = 0; j <= D; ++j) {
            total *= q;
            if (total > (1ULL << 62)) throw resource_error("point count overflow");
        }
    return total - 1;
}

void enumerate_points(const LatticeFrame& frame, long D,
                      const std::function<void(const std::vector<APoly>&, const SeriesElem&)>& fn, uint64_t cap) {
    const SeriesDomain* dom = frame.domain();
    const SmallField* Fq = dom->Fq();
    size_t r = frame.rank();
    uint64_t total = point_count(Fq->q(), r, D);
    if (total + 1 > cap) throw resource_error("point enumeration exceeds the configured cap");
    uint64_t per = 1;
    for (long j = 0; j <= D; ++j) per *= Fq->q();
    std::vector<APoly> polys;
    polys.reserve(per);
    for (uint64_t idx = 0; idx < per; ++idx) {
        std::vector<uint32_t> c;
        uint64_t t = idx;
        while (t) {
            c.push_back(static_cast<uint32_t>(t % Fq->q()));
            t /= Fq->q();
        }
        polys.emplace_back(Fq, std::move(c));
    }
    // cache embed(poly) * omega_i per coordinate
    std::vector<std::vector<SeriesElem>> cache(r);
    for (size_t i = 0; i < r; ++i) {
        cache[i].reserve(per);
        for (uint64_t idx = 0; idx < per; ++idx)
            cache[i].push_back(idx == 0 ? SeriesElem::zero(dom)
                                        : SeriesElem::embed(dom, polys[idx]) * frame.omegas[i]);
    }
    std::vector<uint64_t> odo(r, 0);
    std::vector<APoly> coeffs(r, APoly::zero(Fq));
    while (true) {
        size_t pos = 0;
        while (pos < r) {
            if (++odo[pos] < per) break;
            odo[pos] = 0;
            ++pos;
        }
        if (pos == r) break;
        SeriesElem acc = SeriesElem::zero(dom);
        for (size_t i = 0; i < r; ++i) {
            if (odo[i]) acc = acc + cache[i][odo[i]];
            coeffs[i] = polys[odo[i]];
        }
        fn(coeffs, acc);
    }
}

}  // namespace dmf
