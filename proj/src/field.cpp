#include "fqdigraph/field.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>

namespace fqdigraph {

namespace {

// Dense polynomials over F_p, constant term first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void poly_trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        std::uint32_t x = i < a.size() ? a[i] : 0;
        std::uint32_t y = i < b.size() ? b[i] : 0;
        r[i] = (x + p - y) % p;
    }
    poly_trim(r);
    return r;
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    // p prime, a != 0
    std::uint32_t r = 1, base = a % p, k = p - 2;
    while (k) {
        if (k & 1) r = static_cast<std::uint64_t>(r) * base % p;
        base = static_cast<std::uint64_t>(base) * base % p;
        k >>= 1;
    }
    return r;
}

// a mod m, m nonzero
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    poly_trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint32_t lead_inv = inv_mod_p(m.back(), p);
    while (a.size() > dm) {
        std::uint32_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < m.size(); ++i) {
            std::uint64_t t = static_cast<std::uint64_t>(c) * m[i] % p;
            a[shift + i] = (a[shift + i] + p - static_cast<std::uint32_t>(t)) % p;
        }
        poly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
        }
    }
    return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t k, const Poly& m, std::uint32_t p) {
    Poly r{1};
    base = poly_mod(std::move(base), m, p);
    while (k) {
        if (k & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        k >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Monic degree-e f over F_p; true iff f is irreducible. Uses the Frobenius
// criterion: gcd(X^{p^i} - X, f) = 1 for 1 <= i <= e/2.
bool poly_irreducible(const Poly& f, std::uint32_t e, std::uint32_t p) {
    if (e == 1) return true;
    if (f[0] == 0) return false;  // divisible by X
    Poly x{0, 1};
    Poly frob = x;
    for (std::uint32_t i = 1; i <= e / 2; ++i) {
        frob = poly_powmod(std::move(frob), p, f, p);
        Poly g = poly_gcd(poly_sub(frob, x, p), f, p);
        if (!(g.size() == 1)) return false;
    }
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp,
                              std::uint64_t cap) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && r > cap / base) {
            throw TooLarge("power " + std::to_string(base) + "^" +
                           std::to_string(exp) + " exceeds cap " +
                           std::to_string(cap));
        }
        r *= base;
    }
    return r;
}

struct FieldCtx::Caches {
    std::once_flag prim_once;
    std::once_flag log_once;
    elem_t primitive = 0;
    std::vector<std::uint32_t> log;    // log[idx] for idx != 0
    std::vector<elem_t> antilog;       // antilog[k] = primitive^k, k in [0, q-1)
};

FieldCtx::FieldCtx(FieldCtx&&) noexcept = default;
FieldCtx& FieldCtx::operator=(FieldCtx&&) noexcept = default;
FieldCtx::~FieldCtx() = default;

FieldCtx::FieldCtx(std::uint32_t p, std::uint32_t e,
                   std::optional<std::vector<coeff_t>> modulus,
                   std::uint64_t q_cap)
    : p_(p), e_(e), caches_(std::make_unique<Caches>()) {
    if (!is_prime_u64(p)) {
        throw NotPrime("p = " + std::to_string(p) + " is not prime");
    }
    if (e < 1) throw RangeError("extension degree must be at least 1");
    std::uint64_t q = checked_pow_u64(p, e, q_cap);
    q_ = static_cast<std::uint32_t>(q);

    if (modulus) {
        const auto& m = *modulus;
        if (m.size() != static_cast<std::size_t>(e) + 1) {
            throw BadModulus("modulus must have degree " + std::to_string(e));
        }
        if (m.back() != 1) throw BadModulus("modulus must be monic");
        for (coeff_t c : m) {
            if (c >= p) {
                throw BadModulus("modulus coefficient " + std::to_string(c) +
                                 " not reduced mod " + std::to_string(p));
            }
        }
        Poly f(m.begin(), m.end());
        if (!poly_irreducible(f, e, p)) {
            throw BadModulus("modulus is reducible over F_" + std::to_string(p));
        }
        modulus_ = m;
    } else {
        // Scan monic degree-e polynomials in ascending lexicographic order of
        // (c_0, ..., c_{e-1}); the counter's most significant digit is c_0.
        std::uint64_t total = 1;
        for (std::uint32_t i = 0; i < e; ++i) total *= p;
        std::vector<coeff_t> m(e + 1, 0);
        m[e] = 1;
        bool found = false;
        for (std::uint64_t n = 0; n < total && !found; ++n) {
            std::uint64_t t = n;
            for (std::uint32_t j = 0; j < e; ++j) {
                std::uint64_t place = 1;
                for (std::uint32_t k = j + 1; k < e; ++k) place *= p;
                m[j] = static_cast<coeff_t>((t / place) % p);
            }
            Poly f(m.begin(), m.end());
            if (poly_irreducible(f, e, p)) {
                modulus_ = m;
                found = true;
            }
        }
        if (!found) throw BadModulus("no irreducible modulus found");  // unreachable
    }
}

void FieldCtx::coeffs_of(elem_t idx, coeff_t* out) const {
    std::uint32_t t = idx;
    for (std::uint32_t i = 0; i < e_; ++i) {
        out[i] = static_cast<coeff_t>(t % p_);
        t /= p_;
    }
}

elem_t FieldCtx::index_of_coeffs(const coeff_t* c) const {
    std::uint64_t idx = 0;
    for (std::uint32_t i = e_; i-- > 0;) idx = idx * p_ + c[i];
    return static_cast<elem_t>(idx);
}

FieldElem FieldCtx::elem(elem_t index) const {
    if (index >= q_) {
        throw IndexOutOfRange("element index " + std::to_string(index) +
                              " not below q = " + std::to_string(q_));
    }
    FieldElem x;
    x.coeffs.resize(e_);
    coeffs_of(index, x.coeffs.data());
    return x;
}

elem_t FieldCtx::index_of(const FieldElem& x) const {
    if (x.coeffs.size() != e_) {
        throw RangeError("element has " + std::to_string(x.coeffs.size()) +
                         " coefficients, expected " + std::to_string(e_));
    }
    for (coeff_t c : x.coeffs) {
        if (c >= p_) {
            throw RangeError("coefficient " + std::to_string(c) +
                             " not reduced mod " + std::to_string(p_));
        }
    }
    return index_of_coeffs(x.coeffs.data());
}

elem_t FieldCtx::add(elem_t a, elem_t b) const {
    if (a >= q_ || b >= q_) throw IndexOutOfRange("element index not below q");
    std::uint64_t idx = 0, pa = a, pb = b, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        idx += (pa % p_ + pb % p_) % p_ * place;
        pa /= p_;
        pb /= p_;
        place *= p_;
    }
    return static_cast<elem_t>(idx);
}

elem_t FieldCtx::sub(elem_t a, elem_t b) const {
    if (a >= q_ || b >= q_) throw IndexOutOfRange("element index not below q");
    std::uint64_t idx = 0, pa = a, pb = b, place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        idx += (pa % p_ + p_ - pb % p_) % p_ * place;
        pa /= p_;
        pb /= p_;
        place *= p_;
    }
    return static_cast<elem_t>(idx);
}

elem_t FieldCtx::neg(elem_t a) const { return sub(0, a); }

void FieldCtx::mul_coeffs(const coeff_t* a, const coeff_t* b, coeff_t* out) const {
    // Convolution then reduction by the monic modulus.
    std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (a[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j) {
            prod[i + j] = (prod[i + j] +
                           static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
        }
    }
    for (std::uint32_t i = 2 * e_ - 2; i >= e_ && i < prod.size(); --i) {
        std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        std::uint32_t shift = i - e_;
        for (std::uint32_t j = 0; j < e_; ++j) {
            std::uint64_t t = static_cast<std::uint64_t>(c) * modulus_[j] % p_;
            prod[shift + j] = (prod[shift + j] + p_ - static_cast<std::uint32_t>(t)) % p_;
        }
    }
    for (std::uint32_t i = 0; i < e_; ++i) out[i] = static_cast<coeff_t>(prod[i]);
}

elem_t FieldCtx::mul(elem_t a, elem_t b) const {
    if (a >= q_ || b >= q_) throw IndexOutOfRange("element index not below q");
    if (e_ == 1) {
        return static_cast<elem_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    std::vector<coeff_t> ca(e_), cb(e_), cr(e_);
    coeffs_of(a, ca.data());
    coeffs_of(b, cb.data());
    mul_coeffs(ca.data(), cb.data(), cr.data());
    return index_of_coeffs(cr.data());
}

elem_t FieldCtx::pow(elem_t a, std::int64_t k) const {
    if (a >= q_) throw IndexOutOfRange("element index not below q");
    std::uint64_t kk;
    if (k < 0) {
        a = inv(a);
        kk = static_cast<std::uint64_t>(-(k + 1)) + 1;
    } else {
        kk = static_cast<std::uint64_t>(k);
    }
    if (a == 0) return kk == 0 ? 1 : 0;
    // Nonzero elements have order dividing q-1.
    if (q_ > 2) kk %= (q_ - 1);
    elem_t r = 1;
    elem_t base = a;
    while (kk) {
        if (kk & 1) r = mul(r, base);
        base = mul(base, base);
        kk >>= 1;
    }
    return r;
}

elem_t FieldCtx::inv(elem_t a) const {
    if (a >= q_) throw IndexOutOfRange("element index not below q");
    if (a == 0) throw DivisionByZero("inverse of zero");
    if (q_ == 2) return 1;
    return pow(a, static_cast<std::int64_t>(q_) - 2);
}

elem_t FieldCtx::div(elem_t a, elem_t b) const { return mul(a, inv(b)); }

FieldElem FieldCtx::add(const FieldElem& a, const FieldElem& b) const {
    return elem(add(index_of(a), index_of(b)));
}
FieldElem FieldCtx::sub(const FieldElem& a, const FieldElem& b) const {
    return elem(sub(index_of(a), index_of(b)));
}
FieldElem FieldCtx::neg(const FieldElem& a) const { return elem(neg(index_of(a))); }
FieldElem FieldCtx::mul(const FieldElem& a, const FieldElem& b) const {
    return elem(mul(index_of(a), index_of(b)));
}
FieldElem FieldCtx::inv(const FieldElem& a) const { return elem(inv(index_of(a))); }
FieldElem FieldCtx::div(const FieldElem& a, const FieldElem& b) const {
    return elem(div(index_of(a), index_of(b)));
}
FieldElem FieldCtx::pow(const FieldElem& a, std::int64_t k) const {
    return elem(pow(index_of(a), k));
}

elem_t FieldCtx::primitive_element() const {
    std::call_once(caches_->prim_once, [this] {
        const std::uint64_t order = q_ - 1;
        auto factors = prime_factors(order);
        for (elem_t cand = 1; cand < q_; ++cand) {
            bool ok = true;
            for (std::uint64_t r : factors) {
                if (pow(cand, static_cast<std::int64_t>(order / r)) == 1) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                caches_->primitive = cand;
                return;
            }
        }
        caches_->primitive = 1;  // q = 2: trivial group
    });
    return caches_->primitive;
}

const std::vector<std::uint32_t>& FieldCtx::log_table() const {
    std::call_once(caches_->log_once, [this] {
        const elem_t g = primitive_element();
        caches_->antilog.resize(q_ - 1);
        caches_->log.assign(q_, 0);
        elem_t x = 1;
        for (std::uint32_t k = 0; k + 1 < q_; ++k) {
            caches_->antilog[k] = x;
            caches_->log[x] = k;
            x = mul(x, g);
        }
    });
    return caches_->log;
}

const std::vector<elem_t>& FieldCtx::antilog_table() const {
    log_table();
    return caches_->antilog;
}

std::uint32_t FieldCtx::log(elem_t a) const {
    if (a >= q_) throw IndexOutOfRange("element index not below q");
    if (a == 0) throw DivisionByZero("log of zero");
    return log_table()[a];
}

elem_t FieldCtx::exp_of_primitive(std::uint64_t k) const {
    const auto& anti = antilog_table();
    return anti[k % (q_ - 1)];
}

std::vector<elem_t> FieldCtx::subfield_elements(std::uint32_t e_i) const {
    if (e_i < 1 || e_ % e_i != 0) {
        throw NotADivisor(std::to_string(e_i) + " does not divide " +
                          std::to_string(e_));
    }
    const std::int64_t pe =
        static_cast<std::int64_t>(checked_pow_u64(p_, e_i, q_));
    std::vector<elem_t> out;
    out.reserve(static_cast<std::size_t>(pe));
    for (elem_t x = 0; x < q_; ++x) {
        if (pow(x, pe) == x) out.push_back(x);
    }
    return out;
}

}  // namespace fqdigraph
