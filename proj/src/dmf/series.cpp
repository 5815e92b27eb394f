#include "series.hpp"

#include <algorithm>

namespace dmf {

SeriesDomain::SeriesDomain(FqConfig cfg, uint32_t e, long rel_cap)
    : cfg_(cfg), e_(e), rel_cap_(rel_cap) {
    cfg_.validate();
    if (e_ < 1) throw domain_error("ramification index must be >= 1");
    if (rel_cap_ < 8) throw domain_error("relative cap too small");
    fq_ = cfg_.base_field();
    fqm_ = cfg_.coeff_field();
    embed_ = (cfg_.m == 1) ? std::vector<SmallField::Elem>() : fqm_->embedding_from(*fq_);
    if (cfg_.m == 1) {
        embed_.resize(fq_->q());
        for (uint32_t i = 0; i < fq_->q(); ++i) embed_[i] = i;
    }
    if (cfg_.m > 1) build_coord_matrices();
    if (e_ != 1 || cfg_.m != 1) {
        FqConfig base = cfg_;
        base.m = 1;
        kinf_ = std::unique_ptr<SeriesDomain>(new SeriesDomain(base, 1, rel_cap_));
    }
}

const SeriesDomain* SeriesDomain::kinfty() const { return kinf_ ? kinf_.get() : this; }

void SeriesDomain::build_coord_matrices() {
    // F_p-basis of F_{q^m}: { g^t * embed(x_q^a) }, t < m, a < s, where x_q is
    // the digit-basis root of F_q.  Column (t*s + a) holds its digit vector.
    uint32_t p = cfg_.p, s = cfg_.s, m = cfg_.m;
    uint32_t n = s * m;
    basis_mat_.assign(n * n, 0);
    SmallField::Elem g = fqm_->gen();
    SmallField::Elem gt = 1;
    for (uint32_t t = 0; t < m; ++t) {
        for (uint32_t a = 0; a < s; ++a) {
            // x_q is encoded as the integer p when s > 1; for s = 1 the basis is {1}
            SmallField::Elem xa = (s == 1) ? 1 : fq_->pow(p, a);
            SmallField::Elem col = fqm_->mul(gt, embed_[xa]);
            auto digits = fqm_->digits(col);
            for (uint32_t row = 0; row < n; ++row) basis_mat_[row * n + (t * s + a)] = digits[row];
        }
        gt = fqm_->mul(gt, g);
    }
    // invert mod p by Gaussian elimination
    std::vector<uint32_t> A = basis_mat_;
    basis_inv_.assign(n * n, 0);
    for (uint32_t i = 0; i < n; ++i) basis_inv_[i * n + i] = 1;
    auto inv_mod_p = [&](uint32_t x) {
        for (uint32_t y = 1; y < p; ++y)
            if (x * y % p == 1) return y;
        throw domain_error("internal: singular basis matrix");
    };
    for (uint32_t col = 0; col < n; ++col) {
        uint32_t piv = col;
        while (piv < n && A[piv * n + col] == 0) ++piv;
        if (piv == n) throw domain_error("internal: singular basis matrix");
        if (piv != col) {
            for (uint32_t j = 0; j < n; ++j) {
                std::swap(A[piv * n + j], A[col * n + j]);
                std::swap(basis_inv_[piv * n + j], basis_inv_[col * n + j]);
            }
        }
        uint32_t iv = inv_mod_p(A[col * n + col]);
        for (uint32_t j = 0; j < n; ++j) {
            A[col * n + j] = A[col * n + j] * iv % p;
            basis_inv_[col * n + j] = basis_inv_[col * n + j] * iv % p;
        }
        for (uint32_t row = 0; row < n; ++row) {
            if (row == col || A[row * n + col] == 0) continue;
            uint32_t c = A[row * n + col];
            for (uint32_t j = 0; j < n; ++j) {
                A[row * n + j] = (A[row * n + j] + (p - c) * A[col * n + j]) % p;
                basis_inv_[row * n + j] = (basis_inv_[row * n + j] + (p - c) * basis_inv_[col * n + j]) % p;
            }
        }
    }
}

std::vector<SmallField::Elem> SeriesDomain::fq_coords(SmallField::Elem z) const {
    uint32_t s = cfg_.s, m = cfg_.m;
    if (m == 1) return {z};
    uint32_t n = s * m, p = cfg_.p;
    auto digits = fqm_->digits(z);
    std::vector<SmallField::Elem> out(m, 0);
    std::vector<uint32_t> comps(n, 0);
    for (uint32_t i = 0; i < n; ++i) {
        uint32_t acc = 0;
        for (uint32_t j = 0; j < n; ++j) acc = (acc + basis_inv_[i * n + j] * digits[j]) % p;
        comps[i] = acc;
    }
    // component (t*s + a) is the a-th digit of the F_q coordinate c_t
    for (uint32_t t = 0; t < m; ++t) {
        std::vector<uint32_t> d(s, 0);
        for (uint32_t a = 0; a < s; ++a) d[a] = comps[t * s + a];
        out[t] = fq_->from_digits(d);
    }
    return out;
}

SmallField::Elem SeriesDomain::from_fq_coords(const std::vector<SmallField::Elem>& c) const {
    if (cfg_.m == 1) return c.at(0);
    SmallField::Elem g = fqm_->gen(), gt = 1, acc = 0;
    for (uint32_t t = 0; t < cfg_.m; ++t) {
        acc = fqm_->add(acc, fqm_->mul(gt, embed_[c.at(t)]));
        gt = fqm_->mul(gt, g);
    }
    return acc;
}

SeriesElem::SeriesElem(const SeriesDomain* dom, long lead, long prec, std::vector<SmallField::Elem> coeffs)
    : dom_(dom), lead_(lead), prec_(prec), a_(std::move(coeffs)) {
    if (prec_ < kExactPrec && lead_ + static_cast<long>(a_.size()) > prec_)
        throw domain_error("series window exceeds knowledge bound");
    canonicalize();
}

void SeriesElem::canonicalize() {
    size_t drop = 0;
    while (drop < a_.size() && a_[drop] == 0) ++drop;
    if (drop) {
        a_.erase(a_.begin(), a_.begin() + drop);
        lead_ += static_cast<long>(drop);
    }
    while (!a_.empty() && a_.back() == 0) a_.pop_back();
    if (a_.empty()) lead_ = prec_;
}

SeriesElem SeriesElem::zero(const SeriesDomain* dom, long prec) { return SeriesElem(dom, prec, prec, {}); }

SeriesElem SeriesElem::one(const SeriesDomain* dom) { return SeriesElem(dom, 0, kExactPrec, {1}); }

SeriesElem SeriesElem::scalar(const SeriesDomain* dom, SmallField::Elem c) {
    if (c == 0) return zero(dom);
    return SeriesElem(dom, 0, kExactPrec, {c});
}

SeriesElem SeriesElem::u_pow(const SeriesDomain* dom, long k) { return SeriesElem(dom, k, kExactPrec, {1}); }

SeriesElem SeriesElem::embed(const SeriesDomain* dom, const APoly& a) {
    if (a.is_zero()) return zero(dom);
    long d = a.deg();
    long e = dom->e();
    std::vector<SmallField::Elem> c(static_cast<size_t>(e * d + 1), 0);
    // T^j = u^(-e j); window runs from -e*d up to 0
    for (long j = 0; j <= d; ++j) {
        uint32_t cj = a.coeff(static_cast<size_t>(j));
        if (cj) c[static_cast<size_t>(e * (d - j))] = dom->embed_base(cj);
    }
    return SeriesElem(dom, -e * d, kExactPrec, std::move(c));
}

SmallField::Elem SeriesElem::coeff_at(long k) const {
    if (k < lead_ || k >= lead_ + static_cast<long>(a_.size())) return 0;
    return a_[static_cast<size_t>(k - lead_)];
}

std::optional<Rat> SeriesElem::valuation() const {
    if (a_.empty()) return std::nullopt;
    return Rat(lead_, dom_->e());
}

Rat SeriesElem::valuation_floor() const {
    if (!a_.empty()) return Rat(lead_, dom_->e());
    return Rat(prec_ >= kExactPrec ? kExactPrec : prec_, dom_->e());
}

SeriesElem operator+(const SeriesElem& x, const SeriesElem& y) {
    const SeriesDomain* dom = x.dom_ ? x.dom_ : y.dom_;
    if (x.dom_ && y.dom_ && !x.dom_->same(*y.dom_)) throw domain_error("series domain mismatch");
    long prec = std::min(x.prec_, y.prec_);
    if (x.a_.empty() && y.a_.empty()) return SeriesElem::zero(dom, prec);
    long lead = std::min(x.a_.empty() ? x.prec_ : x.lead_, y.a_.empty() ? y.prec_ : y.lead_);
    lead = std::min(lead, prec);
    long hi = std::min(prec, lead + dom->rel_cap());
    long upper = std::max(x.lead_ + static_cast<long>(x.a_.size()), y.lead_ + static_cast<long>(y.a_.size()));
    hi = std::min(hi, std::max(lead, upper));
    if (hi < lead) hi = lead;
    long window = hi - lead;
    // digits dropped by the cap lower the knowledge bound
    if (hi < prec && upper > hi) prec = hi;
    std::vector<SmallField::Elem> c(static_cast<size_t>(window), 0);
    const SmallField* F = dom->Fqm();
    for (long k = lead; k < hi; ++k) c[static_cast<size_t>(k - lead)] = F->add(x.coeff_at(k), y.coeff_at(k));
    return SeriesElem(dom, lead, prec, std::move(c));
}

SeriesElem SeriesElem::operator-() const {
    SeriesElem r = *this;
    const SmallField* F = dom_->Fqm();
    for (auto& c : r.a_) c = F->neg(c);
    return r;
}

SeriesElem operator-(const SeriesElem& x, const SeriesElem& y) { return x + (-y); }

SeriesElem operator*(const SeriesElem& x, const SeriesElem& y) {
    const SeriesDomain* dom = x.dom_ ? x.dom_ : y.dom_;
    if (x.dom_ && y.dom_ && !x.dom_->same(*y.dom_)) throw domain_error("series domain mismatch");
    long prec = std::min(prec_add(x.lead_, y.prec_), prec_add(y.lead_, x.prec_));
    if (x.exact_zero() || y.exact_zero()) return SeriesElem::zero(dom, kExactPrec);
    if (x.a_.empty() || y.a_.empty()) return SeriesElem::zero(dom, prec);
    long lead = x.lead_ + y.lead_;
    long full = static_cast<long>(x.a_.size() + y.a_.size()) - 1;
    long window = full;
    if (prec < kExactPrec) window = std::min(window, prec - lead);
    window = std::min(window, dom->rel_cap());
    if (window < 1) return SeriesElem::zero(dom, prec);
    if (window < full && lead + window < prec) prec = lead + window;
    std::vector<SmallField::Elem> c(static_cast<size_t>(window), 0);
    const SmallField* F = dom->Fqm();
    size_t nx = x.a_.size(), ny = y.a_.size();
    for (size_t i = 0; i < nx; ++i) {
        SmallField::Elem xi = x.a_[i];
        if (xi == 0) continue;
        for (size_t j = 0; j < ny; ++j) {
            size_t k = i + j;
            if (k >= static_cast<size_t>(window)) break;
            SmallField::Elem yj = y.a_[j];
            if (yj == 0) continue;
            c[k] = F->add(c[k], F->mul(xi, yj));
        }
    }
    return SeriesElem(dom, lead, prec, std::move(c));
}

SeriesElem SeriesElem::inverse() const {
    if (exact_zero()) throw domain_error("inverse of the zero series");
    if (a_.empty()) throw precision_error("inverse of a series indistinguishable from zero at its precision");
    const SmallField* F = dom_->Fqm();
    if (a_.size() == 1 && exact()) {
        return SeriesElem(dom_, -lead_, kExactPrec, {F->inv(a_[0])});
    }
    long rel = exact() ? dom_->rel_cap() : std::min(prec_ - lead_, dom_->rel_cap());
    std::vector<SmallField::Elem> b(static_cast<size_t>(rel), 0);
    SmallField::Elem i0 = F->inv(a_[0]);
    b[0] = i0;
    for (long k = 1; k < rel; ++k) {
        SmallField::Elem acc = 0;
        long jmax = std::min<long>(k, static_cast<long>(a_.size()) - 1);
        for (long j = 1; j <= jmax; ++j) acc = F->add(acc, F->mul(a_[static_cast<size_t>(j)], b[static_cast<size_t>(k - j)]));
        b[static_cast<size_t>(k)] = F->neg(F->mul(i0, acc));
    }
    return SeriesElem(dom_, -lead_, -lead_ + rel, std::move(b));
}

SeriesElem operator/(const SeriesElem& x, const SeriesElem& y) { return x * y.inverse(); }

SeriesElem SeriesElem::scaled(SmallField::Elem c) const {
    if (c == 0) return zero(dom_, prec_);
    SeriesElem r = *this;
    const SmallField* F = dom_->Fqm();
    for (auto& v : r.a_) v = F->mul(v, c);
    return r;
}

SeriesElem SeriesElem::shifted(long k) const {
    SeriesElem r = *this;
    r.lead_ += k;
    r.prec_ = prec_add(r.prec_, k);
    if (r.a_.empty()) r.lead_ = r.prec_;
    return r;
}

SeriesElem SeriesElem::pow(uint64_t n) const {
    SeriesElem r = SeriesElem::one(dom_);
    SeriesElem base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

SeriesElem SeriesElem::frobenius_pow(uint32_t i) const {
    if (i == 0) return *this;
    const SmallField* F = dom_->Fqm();
    long qe = 1;
    for (uint32_t k = 0; k < i; ++k) {
        qe *= dom_->q();
        if (qe > (1L << 40)) throw resource_error("frobenius exponent too large");
    }
    long prec = exact() ? kExactPrec : prec_ * qe;
    if (a_.empty()) return SeriesElem::zero(dom_, prec);
    long lead = lead_ * qe;
    long full = (static_cast<long>(a_.size()) - 1) * qe + 1;
    long window = std::min(full, dom_->rel_cap());
    if (window < full && lead + window < prec) prec = lead + window;
    std::vector<SmallField::Elem> c(static_cast<size_t>(window), 0);
    uint32_t frob_i = i * dom_->config().s;  // q^i = p^(s i)
    for (size_t j = 0; j < a_.size(); ++j) {
        long pos = static_cast<long>(j) * qe;
        if (pos >= window) break;
        if (a_[j]) c[static_cast<size_t>(pos)] = F->frob(a_[j], frob_i);
    }
    return SeriesElem(dom_, lead, prec, std::move(c));
}

SeriesElem SeriesElem::truncated(long P) const {
    if (prec_ <= P) return *this;
    SeriesElem r = *this;
    r.prec_ = P;
    long keep = P - r.lead_;
    if (keep <= 0) {
        r.a_.clear();
        r.lead_ = P;
        return r;
    }
    if (static_cast<long>(r.a_.size()) > keep) r.a_.resize(static_cast<size_t>(keep));
    r.canonicalize();
    return r;
}

std::string SeriesElem::str() const {
    std::string out;
    for (size_t i = 0; i < a_.size(); ++i) {
        if (a_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(a_[i]) + "*u^" + std::to_string(lead_ + static_cast<long>(i));
    }
    if (out.empty()) out = "0";
    if (!exact()) out += " + O(u^" + std::to_string(prec_) + ")";
    return out;
}

bool approx_equal(const SeriesElem& x, const SeriesElem& y, long P) {
    if (std::min(x.prec(), y.prec()) < P)
        throw precision_error("comparison at precision " + std::to_string(P) + " with insufficient knowledge");
    SeriesElem d = x - y;
    return d.coeffs().empty() || d.lead() >= P;
}

bool zero_to(const SeriesElem& x, long P) {
    if (x.prec() < P) throw precision_error("zero test at precision " + std::to_string(P) + " with insufficient knowledge");
    return x.coeffs().empty() || x.lead() >= P;
}

SeriesElem series_arith(const SeriesElem& x, const SeriesElem& y, SeriesOp op) {
    switch (op) {
        case SeriesOp::add: return x + y;
        case SeriesOp::sub: return x - y;
        case SeriesOp::mul: return x * y;
        case SeriesOp::div: return x / y;
    }
    throw domain_error("unknown series op");
}

std::vector<SeriesElem> kinfty_coords(const SeriesElem& x) {
    const SeriesDomain* dom = x.domain();
    const SeriesDomain* kd = dom->kinfty();
    uint32_t e = dom->e(), m = dom->m();
    size_t rows = static_cast<size_t>(e) * m;
    // row (j,t): series sum_k c_k (1/T)^k with u^(j + e k) carrying g^t u^j
    long lead_x = x.coeffs().empty() ? x.prec() : x.lead();
    std::vector<long> row_lead(rows), row_prec(rows);
    auto ceil_div = [](long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); };
    for (uint32_t j = 0; j < e; ++j) {
        // smallest k with j + e k >= bound
        long kl = ceil_div(lead_x - static_cast<long>(j), static_cast<long>(e));
        long kp = x.exact() ? kExactPrec : ceil_div(x.prec() - static_cast<long>(j), static_cast<long>(e));
        for (uint32_t t = 0; t < m; ++t) {
            row_lead[j * m + t] = kl;
            row_prec[j * m + t] = kp;
        }
    }
    std::vector<std::vector<SmallField::Elem>> data(rows);
    // window length per row from x's stored coefficients
    long top = x.lead() + static_cast<long>(x.coeffs().size());
    for (size_t r = 0; r < rows; ++r) {
        uint32_t j = static_cast<uint32_t>(r / m);
        long kl = row_lead[r];
        long kh = ceil_div(top - static_cast<long>(j), static_cast<long>(e));
        long len = std::max<long>(0, kh - kl);
        data[r].assign(static_cast<size_t>(len), 0);
    }
    for (size_t i = 0; i < x.coeffs().size(); ++i) {
        SmallField::Elem z = x.coeffs()[i];
        if (z == 0) continue;
        long n = x.lead() + static_cast<long>(i);
        long j = ((n % e) + e) % e;
        long k = (n - j) / e;
        auto coords = dom->fq_coords(z);
        for (uint32_t t = 0; t < m; ++t) {
            if (coords[t] == 0) continue;
            size_t r = static_cast<size_t>(j) * m + t;
            data[r][static_cast<size_t>(k - row_lead[r])] = coords[t];
        }
    }
    std::vector<SeriesElem> out;
    out.reserve(rows);
    for (size_t r = 0; r < rows; ++r) {
        long pr = row_prec[r];
        long ld = row_lead[r];
        if (pr < kExactPrec && ld + static_cast<long>(data[r].size()) > pr) data[r].resize(static_cast<size_t>(pr - ld));
        out.emplace_back(kd, ld, pr, std::move(data[r]));
    }
    return out;
}

}  // namespace dmf
