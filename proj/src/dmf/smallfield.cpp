#include "smallfield.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "conway_data.hpp"

namespace dmf {

namespace {

const uint8_t* conway_coeffs(uint32_t p, uint32_t n) {
    for (size_t i = 0; i < kConwayTableSize; ++i) {
        if (kConwayTable[i].p == p && kConwayTable[i].n == n) return kConwayTable[i].coeffs;
    }
    return nullptr;
}

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

const SmallField* SmallField::get(uint32_t p, uint32_t n) {
    static std::mutex mu;
    static std::map<std::pair<uint32_t, uint32_t>, std::unique_ptr<SmallField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.get();
    auto field = std::unique_ptr<SmallField>(new SmallField(p, n));
    auto* ptr = field.get();
    cache.emplace(key, std::move(field));
    return ptr;
}

SmallField::SmallField(uint32_t p, uint32_t n) : p_(p), n_(n) {
    if (!is_prime(p)) throw domain_error("field characteristic must be prime");
    if (n == 0) throw domain_error("field extension degree must be >= 1");
    const uint8_t* cw = conway_coeffs(p, n);
    if (cw == nullptr) throw domain_error("no modulus in the shipped table for p=" + std::to_string(p) + " n=" + std::to_string(n));
    uint64_t q = 1;
    for (uint32_t i = 0; i < n; ++i) {
        q *= p;
        if (q > (1u << 21)) throw resource_error("field too large for table-based arithmetic");
    }
    q_ = static_cast<uint32_t>(q);
    modulus_.assign(cw, cw + n + 1);

    // encoding helpers on digit vectors
    auto encode = [&](const std::vector<uint32_t>& d) {
        uint32_t v = 0;
        for (uint32_t i = n_; i-- > 0;) v = v * p_ + (i < d.size() ? d[i] : 0);
        return v;
    };
    // multiply residue polynomial by x and reduce by the modulus
    auto mul_x = [&](std::vector<uint32_t> d) {
        uint32_t top = d[n_ - 1];
        for (uint32_t i = n_ - 1; i > 0; --i) d[i] = d[i - 1];
        d[0] = 0;
        if (top != 0) {
            // d[i] -= top * modulus_[i]  (mod p)
            for (uint32_t i = 0; i < n_; ++i) d[i] = (d[i] + (p_ - top) * modulus_[i]) % p_;
        }
        return d;
    };

    exp_.assign(2 * (q_ - 1), 0);
    log_.assign(q_, 0);
    std::vector<uint32_t> cur(n_, 0);
    cur[0] = 1;  // 1
    gen_ = (n_ == 1) ? encode({(p_ - modulus_[0] % p_) % p_}) : p_;  // root of modulus: x itself for n>1
    for (uint32_t k = 0; k < q_ - 1; ++k) {
        uint32_t code = encode(cur);
        exp_[k] = code;
        exp_[k + (q_ - 1)] = code;
        log_[code] = k;
        if (n_ == 1) {
            // multiply by the generator scalar
            uint32_t g0 = gen_;
            cur[0] = (cur[0] * g0) % p_;
        } else {
            cur = mul_x(cur);
        }
    }
    if (exp_[0] != 1) throw domain_error("internal: generator table construction failed");
    // sanity: the generator must have full order, i.e. all codes distinct
    {
        std::vector<char> seen(q_, 0);
        for (uint32_t k = 0; k < q_ - 1; ++k) {
            if (exp_[k] == 0 || seen[exp_[k]]) throw domain_error("internal: modulus is not primitive");
            seen[exp_[k]] = 1;
        }
    }
}

SmallField::Elem SmallField::add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    Elem r = 0, mulp = 1;
    while (a != 0 || b != 0) {
        uint32_t da = a % p_, db = b % p_;
        r += ((da + db) % p_) * mulp;
        a /= p_;
        b /= p_;
        mulp *= p_;
    }
    return r;
}

SmallField::Elem SmallField::neg(Elem a) const {
    if (p_ == 2) return a;
    Elem r = 0, mulp = 1;
    while (a != 0) {
        uint32_t da = a % p_;
        r += ((p_ - da) % p_) * mulp;
        a /= p_;
        mulp *= p_;
    }
    return r;
}

SmallField::Elem SmallField::pow(Elem a, long long e) const {
    if (a == 0) {
        if (e < 0) throw domain_error("inverse of zero field element");
        return e == 0 ? 1 : 0;
    }
    long long m = q_ - 1;
    long long k = (static_cast<long long>(log_[a]) * (e % m)) % m;
    if (k < 0) k += m;
    return exp_[k];
}

uint64_t SmallField::ipow_p(uint32_t i) const {
    uint64_t r = 1;
    for (uint32_t k = 0; k < i; ++k) r *= p_;
    return r;
}

std::vector<SmallField::Elem> SmallField::embedding_from(const SmallField& sub) const {
    if (sub.p_ != p_ || n_ % sub.n_ != 0) throw domain_error("not a subfield");
    std::vector<Elem> table(sub.q_, 0);
    uint64_t stride = (static_cast<uint64_t>(q_) - 1) / (sub.q_ - 1);
    for (uint32_t a = 1; a < sub.q_; ++a) {
        table[a] = from_dlog(static_cast<uint64_t>(sub.log_[a]) * stride);
    }
    return table;
}

std::vector<uint32_t> SmallField::digits(Elem a) const {
    std::vector<uint32_t> d(n_, 0);
    for (uint32_t i = 0; i < n_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

SmallField::Elem SmallField::from_digits(const std::vector<uint32_t>& d) const {
    Elem v = 0;
    for (uint32_t i = n_; i-- > 0;) v = v * p_ + (i < d.size() ? d[i] % p_ : 0);
    return v;
}

}  // namespace dmf
