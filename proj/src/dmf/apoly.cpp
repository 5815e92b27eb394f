#include "apoly.hpp"

#include <algorithm>
#include <map>

namespace dmf {

uint32_t FqConfig::q() const {
    uint64_t v = 1;
    for (uint32_t i = 0; i < s; ++i) v *= p;
    return static_cast<uint32_t>(v);
}

const SmallField* FqConfig::base_field() const { return SmallField::get(p, s); }
const SmallField* FqConfig::coeff_field() const { return SmallField::get(p, s * m); }

void FqConfig::validate() const {
    if (s < 1 || m < 1) throw domain_error("field exponents must be >= 1");
    base_field();   // throws if p is not prime or the size is unsupported
    coeff_field();
}

APoly::APoly(const SmallField* field, std::vector<uint32_t> coeffs) : field_(field), c_(std::move(coeffs)) {
    for (auto& x : c_)
        if (x >= field_->q()) throw domain_error("coefficient outside field");
    trim();
}

APoly APoly::constant(const SmallField* f, uint32_t c) {
    APoly r(f);
    if (c % f->q() != 0) r.c_ = {c % f->q()};
    return r;
}

APoly APoly::T_pow(const SmallField* f, size_t k) {
    std::vector<uint32_t> c(k + 1, 0);
    c[k] = 1;
    return APoly(f, std::move(c));
}

uint32_t APoly::lead() const {
    if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

APoly APoly::monic() const {
    if (is_zero()) throw domain_error("monic form of zero polynomial");
    return scaled(field_->inv(lead()));
}

void APoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

APoly operator+(const APoly& a, const APoly& b) {
    const SmallField* f = a.field_ ? a.field_ : b.field_;
    APoly r(f);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = f->add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

APoly operator-(const APoly& a, const APoly& b) { return a + (-b); }

APoly APoly::operator-() const {
    APoly r(field_);
    r.c_ = c_;
    for (auto& x : r.c_) x = field_->neg(x);
    return r;
}

APoly APoly::scaled(uint32_t c) const {
    APoly r(field_);
    if (c == 0) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x = field_->mul(x, c);
    return r;
}

APoly operator*(const APoly& a, const APoly& b) {
    const SmallField* f = a.field_ ? a.field_ : b.field_;
    APoly r(f);
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] = f->add(r.c_[i + j], f->mul(a.c_[i], b.c_[j]));
        }
    }
    r.trim();
    return r;
}

int APoly::cmp(const APoly& a, const APoly& b) {
    if (a.deg() != b.deg()) return a.deg() < b.deg() ? -1 : 1;
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

std::pair<APoly, APoly> APoly::divmod(const APoly& a, const APoly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    const SmallField* f = b.field_;
    APoly q(f), r = a;
    if (a.deg() < b.deg()) return {q, r};
    q.c_.assign(a.deg() - b.deg() + 1, 0);
    uint32_t ilead = f->inv(b.lead());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        size_t shift = r.deg() - b.deg();
        uint32_t c = f->mul(r.lead(), ilead);
        q.c_[shift] = c;
        // r -= c * T^shift * b
        for (size_t i = 0; i < b.c_.size(); ++i) {
            r.c_[shift + i] = f->sub(r.c_[shift + i], f->mul(c, b.c_[i]));
        }
        r.trim();
    }
    q.trim();
    return {q, r};
}

APoly APoly::gcd(APoly a, APoly b) {
    while (!b.is_zero()) {
        APoly t = a % b;
        a = std::move(b);
        b = std::move(t);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

APoly APoly::pow(uint64_t e) const {
    APoly r = APoly::constant(field_, 1);
    APoly base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

APoly APoly::derivative() const {
    APoly r(field_);
    if (c_.size() <= 1) return r;
    r.c_.assign(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i) {
        // i * c_i as an i-fold sum of the prime-field scalar
        uint32_t s = 0;
        uint32_t imodp = static_cast<uint32_t>(i % field_->p());
        for (uint32_t k = 0; k < imodp; ++k) s = field_->add(s, c_[i]);
        r.c_[i - 1] = s;
    }
    r.trim();
    return r;
}

std::optional<APoly> APoly::inverse_mod(const APoly& mod) const {
    // extended Euclid
    const SmallField* f = field_;
    APoly r0 = mod, r1 = *this % mod;
    APoly s0 = APoly::zero(f), s1 = APoly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        APoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.deg() != 0) return std::nullopt;
    return (s0.scaled(f->inv(r0.lead()))) % mod;
}

std::string APoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || c_[i] != 1) out += std::to_string(c_[i]);
        if (i >= 1) {
            if (c_[i] != 1) out += "*";
            out += var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
    }
    return out;
}

APoly Factorization::expand(const SmallField* f) const {
    APoly r = APoly::constant(f, unit);
    for (const auto& [p, e] : factors) r = r * p.pow(e);
    return r;
}

namespace {

// fixed-seed generator for the equal-degree split; reproducible output
struct SplitMix64 {
    uint64_t state;
    explicit SplitMix64(uint64_t seed) : state(seed) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

APoly pow_mod(const APoly& a, uint64_t e, const APoly& mod) {
    APoly r = APoly::constant(mod.field(), 1);
    APoly base = a % mod;
    while (e) {
        if (e & 1) r = (r * base) % mod;
        base = (base * base) % mod;
        e >>= 1;
    }
    return r;
}

// p-th root of f when f = g(T^p); valid in characteristic p
APoly pth_root(const APoly& f) {
    const SmallField* F = f.field();
    uint32_t p = F->p();
    std::vector<uint32_t> out;
    for (size_t i = 0; i < f.coeffs().size(); i += p) {
        // coefficient root: c^(q/p) since c -> c^p permutes F_q
        uint32_t c = f.coeffs()[i];
        uint32_t root = F->pow(c, static_cast<long long>(F->q()) / p);
        out.push_back(root);
    }
    return APoly(F, std::move(out));
}

// product of distinct monic irreducibles of degree d dividing g (g squarefree,
// all factors of degree d); split completely by the Cantor-Zassenhaus step
void equal_degree_split(const APoly& g, uint32_t d, std::vector<APoly>& out, SplitMix64& rng) {
    if (static_cast<uint32_t>(g.deg()) == d) {
        out.push_back(g.monic());
        return;
    }
    const SmallField* F = g.field();
    uint32_t q = F->q();
    while (true) {
        // random polynomial of degree < deg g
        std::vector<uint32_t> rc(g.deg(), 0);
        for (auto& c : rc) c = static_cast<uint32_t>(rng.next() % q);
        APoly a(F, std::move(rc));
        if (a.is_zero()) continue;
        APoly h;
        if (F->p() == 2) {
            // absolute-trace map for characteristic 2
            uint32_t sd = F->n() * d;  // degree over F_2 of the factor field
            APoly t = a % g, acc = t;
            for (uint32_t i = 1; i < sd; ++i) {
                t = pow_mod(t, 2, g);
                acc = acc + t;
            }
            h = APoly::gcd(acc, g);
        } else {
            uint64_t e = 1;
            for (uint32_t i = 0; i < d; ++i) e *= q;
            APoly b = pow_mod(a, (e - 1) / 2, g);
            h = APoly::gcd(b - APoly::constant(F, 1), g);
        }
        if (h.is_zero() || h.deg() == 0 || h.deg() == g.deg()) continue;
        equal_degree_split(h, d, out, rng);
        equal_degree_split(g / h, d, out, rng);
        return;
    }
}

// all monic irreducible factors of a squarefree monic g
std::vector<APoly> factor_squarefree(APoly g, SplitMix64& rng) {
    std::vector<APoly> out;
    const SmallField* F = g.field();
    APoly x = APoly::T(F);
    APoly h = x % g;
    uint32_t d = 0;
    while (!g.is_constant()) {
        ++d;
        if (static_cast<long>(2 * d) > g.deg()) {
            out.push_back(g.monic());
            break;
        }
        h = pow_mod(h, F->q(), g);
        APoly part = APoly::gcd(h - x, g);
        if (part.deg() > 0) {
            equal_degree_split(part, d, out, rng);
            g = g / part;
            h = h % g;
        }
    }
    return out;
}

}  // namespace

Factorization factor(const APoly& f) {
    if (f.is_zero()) throw domain_error("factorization of zero");
    const SmallField* F = f.field();
    Factorization r;
    r.unit = f.lead();
    APoly g = f.monic();
    SplitMix64 rng(0x5eed5eed5eed5eedULL);
    std::map<std::vector<uint32_t>, uint32_t> found;  // coeffs -> multiplicity
    while (g.deg() > 0) {
        APoly gp = g.derivative();
        std::vector<APoly> primes;
        if (gp.is_zero()) {
            // g = h(T^p); the root has the same primes, so find them there
            // and count multiplicities against g itself below
            APoly root = pth_root(g);
            while (root.deg() > 0 && root.derivative().is_zero()) root = pth_root(root);
            APoly sf = root / APoly::gcd(root, root.derivative());
            primes = factor_squarefree(sf, rng);
        } else {
            APoly sf = g / APoly::gcd(g, gp);
            primes = factor_squarefree(sf, rng);
        }
        for (const auto& p : primes) {
            uint32_t mult = 0;
            while ((g % p).is_zero()) {
                g = g / p;
                ++mult;
            }
            found[p.coeffs()] += mult;
        }
    }
    for (const auto& [coeffs, mult] : found) r.factors.emplace_back(APoly(F, coeffs), mult);
    std::sort(r.factors.begin(), r.factors.end(),
              [](const auto& a, const auto& b) { return APoly::cmp(a.first, b.first) < 0; });
    return r;
}

int mobius(const APoly& a) {
    if (a.is_zero()) throw domain_error("moebius of zero");
    if (a.is_constant()) return 1;
    Factorization f = factor(a);
    for (const auto& [p, e] : f.factors)
        if (e >= 2) return 0;
    return (f.factors.size() % 2 == 0) ? 1 : -1;
}

std::vector<APoly> monic_divisors(const APoly& a) {
    if (a.is_zero()) throw domain_error("divisors of zero");
    const SmallField* F = a.field();
    Factorization f = factor(a);
    std::vector<APoly> out{APoly::constant(F, 1)};
    for (const auto& [p, e] : f.factors) {
        std::vector<APoly> next;
        APoly pk = APoly::constant(F, 1);
        for (uint32_t k = 0; k <= e; ++k) {
            for (const auto& d : out) next.push_back(d * pk);
            pk = pk * p;
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const APoly& x, const APoly& y) { return APoly::cmp(x, y) < 0; });
    return out;
}

bool CongClass::is_zero() const {
    for (const auto& n : numerators)
        if (!n.is_zero()) return false;
    return true;
}

void CongClass::validate() const {
    if (!level.is_monic() || level.deg() < 1) throw domain_error("level must be monic non-constant");
    if (numerators.empty()) throw domain_error("congruence class needs rank >= 1");
    for (const auto& n : numerators) {
        if (!n.is_zero() && n.deg() >= level.deg()) throw domain_error("numerator not reduced mod level");
    }
}

bool CongClass::is_monic_vector() const {
    for (const auto& n : numerators) {
        if (!n.is_zero()) return n.is_monic();
    }
    return false;
}

CongClass CongClass::scaled(uint32_t c) const {
    CongClass r = *this;
    for (auto& n : r.numerators) n = n.scaled(c);
    return r;
}

std::vector<APoly> residues_mod(const APoly& N) {
    if (N.deg() < 1) throw domain_error("level must be non-constant");
    const SmallField* F = N.field();
    size_t d = static_cast<size_t>(N.deg());
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= F->q();
    std::vector<APoly> out;
    out.reserve(count);
    std::vector<uint32_t> digits(d, 0);
    for (uint64_t idx = 0;; ++idx) {
        out.emplace_back(F, digits);
        size_t pos = 0;
        while (pos < d) {
            if (++digits[pos] < F->q()) break;
            digits[pos] = 0;
            ++pos;
        }
        if (pos == d) break;
    }
    return out;
}

std::vector<std::vector<APoly>> primitive_monic_reps(const APoly& N, uint32_t r, uint64_t enumeration_cap) {
    if (N.deg() < 1 || !N.is_monic()) throw domain_error("level must be monic non-constant");
    if (r < 1) throw domain_error("rank must be >= 1");
    const SmallField* F = N.field();
    uint64_t total = 1;
    for (uint32_t i = 0; i < r; ++i) {
        for (long j = 0; j < N.deg(); ++j) {
            total *= F->q();
            if (total > enumeration_cap) throw resource_error("residue enumeration exceeds the configured cap");
        }
    }
    std::vector<APoly> res = residues_mod(N);
    std::vector<APoly> primes;
    for (const auto& [p, e] : factor(N).factors) primes.push_back(p);

    std::vector<std::vector<APoly>> out;
    std::vector<size_t> idx(r, 0);
    while (true) {
        // monic test first: the first nonzero coordinate must be monic
        bool monic_vec = false, any = false;
        for (uint32_t i = 0; i < r; ++i) {
            const APoly& ni = res[idx[i]];
            if (!ni.is_zero()) {
                any = true;
                monic_vec = ni.is_monic();
                break;
            }
        }
        if (any && monic_vec) {
            bool primitive = true;
            for (const auto& p : primes) {
                bool all_divisible = true;
                for (uint32_t i = 0; i < r && all_divisible; ++i) {
                    if (!(res[idx[i]] % p).is_zero()) all_divisible = false;
                }
                if (all_divisible) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                std::vector<APoly> v;
                v.reserve(r);
                for (uint32_t i = 0; i < r; ++i) v.push_back(res[idx[i]]);
                out.push_back(std::move(v));
            }
        }
        size_t pos = 0;
        while (pos < r) {
            if (++idx[pos] < res.size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == r) break;
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return cmp_vec(a, b) < 0; });
    return out;
}

int cmp_vec(const std::vector<APoly>& a, const std::vector<APoly>& b) {
    for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        int c = APoly::cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

}  // namespace dmf
