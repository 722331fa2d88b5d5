#include "fqdigraph/fplinalg.hpp"

#include <algorithm>
#include <string>

namespace fqdigraph {

namespace {

void check_pair(const FpVec& a, const FpVec& b) {
    if (a.size() != b.size()) {
        throw DimensionMismatch("vector lengths " + std::to_string(a.size()) +
                                " and " + std::to_string(b.size()));
    }
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1, base = a % p, k = p - 2;
    while (k) {
        if (k & 1) r = static_cast<std::uint64_t>(r) * base % p;
        base = static_cast<std::uint64_t>(base) * base % p;
        k >>= 1;
    }
    return r;
}

}  // namespace

FpVec fp_add(const FpVec& a, const FpVec& b, std::uint32_t p) {
    check_pair(a, b);
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = static_cast<coeff_t>((a[i] + b[i]) % p);
    }
    return r;
}

FpVec fp_sub(const FpVec& a, const FpVec& b, std::uint32_t p) {
    check_pair(a, b);
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = static_cast<coeff_t>((a[i] + p - b[i]) % p);
    }
    return r;
}

FpVec fp_neg(const FpVec& a, std::uint32_t p) {
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = static_cast<coeff_t>((p - a[i]) % p);
    }
    return r;
}

FpVec fp_scale(coeff_t c, const FpVec& a, std::uint32_t p) {
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] = static_cast<coeff_t>(static_cast<std::uint32_t>(c) * a[i] % p);
    }
    return r;
}

SubspaceFp::SubspaceFp(std::uint32_t p, std::uint32_t n) : p_(p), n_(n) {
    if (!is_prime_u64(p)) {
        throw NotPrime("p = " + std::to_string(p) + " is not prime");
    }
}

void SubspaceFp::check_vec(const FpVec& v) const {
    if (v.size() != n_) {
        throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                                ", ambient dimension " + std::to_string(n_));
    }
    for (coeff_t c : v) {
        if (c >= p_) {
            throw RangeError("coordinate " + std::to_string(c) +
                             " not reduced mod " + std::to_string(p_));
        }
    }
}

SubspaceFp SubspaceFp::span_of(std::uint32_t p, std::uint32_t n,
                               const std::vector<FpVec>& generators) {
    SubspaceFp W(p, n);
    for (const FpVec& g : generators) W.extend(g);
    return W;
}

FpVec SubspaceFp::reduce(const FpVec& v) const {
    check_vec(v);
    FpVec r = v;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        coeff_t c = r[pivots_[i]];
        if (c != 0) r = fp_sub(r, fp_scale(c, rows_[i], p_), p_);
    }
    return r;
}

bool SubspaceFp::contains(const FpVec& v) const {
    FpVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](coeff_t c) { return c == 0; });
}

bool SubspaceFp::extend(const FpVec& v) {
    FpVec r = reduce(v);
    auto it = std::find_if(r.begin(), r.end(), [](coeff_t c) { return c != 0; });
    if (it == r.end()) return false;
    std::uint32_t piv = static_cast<std::uint32_t>(it - r.begin());
    r = fp_scale(static_cast<coeff_t>(inv_mod_p(*it, p_)), r, p_);
    // clear the new pivot column in the old rows, then keep rows sorted by pivot
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        coeff_t c = rows_[i][piv];
        if (c != 0) rows_[i] = fp_sub(rows_[i], fp_scale(c, r, p_), p_);
    }
    auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
    std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
    return true;
}

std::uint64_t SubspaceFp::size(std::uint64_t cap) const {
    return checked_pow_u64(p_, dim(), cap);
}

std::vector<FpVec> SubspaceFp::coset(const FpVec& v, std::uint64_t cap) const {
    const std::uint64_t count = size(cap);
    FpVec rep = reduce(v);
    std::vector<FpVec> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::uint64_t k = 0; k < count; ++k) {
        FpVec x = rep;
        std::uint64_t t = k;
        for (const FpVec& row : rows_) {
            coeff_t c = static_cast<coeff_t>(t % p_);
            if (c != 0) x = fp_add(x, fp_scale(c, row, p_), p_);
            t /= p_;
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::optional<std::vector<coeff_t>> express_in_family(
    std::uint32_t p, const std::vector<FpVec>& family, const FpVec& v) {
    const std::size_t k = family.size();
    const std::size_t n = v.size();
    for (const FpVec& f : family) {
        if (f.size() != n) {
            throw DimensionMismatch("family vector length " +
                                    std::to_string(f.size()) + ", target " +
                                    std::to_string(n));
        }
    }
    // Gaussian elimination on the augmented system [family^T | v].
    std::vector<std::vector<std::uint32_t>> M(n,
                                              std::vector<std::uint32_t>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) M[i][j] = family[j][i];
        M[i][k] = v[i];
    }
    std::vector<std::size_t> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < k && row < n; ++col) {
        std::size_t sel = row;
        while (sel < n && M[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(M[sel], M[row]);
        std::uint32_t iv = inv_mod_p(M[row][col], p);
        for (std::size_t j = col; j <= k; ++j) {
            M[row][j] = static_cast<std::uint64_t>(M[row][j]) * iv % p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || M[i][col] == 0) continue;
            std::uint32_t c = M[i][col];
            for (std::size_t j = col; j <= k; ++j) {
                std::uint64_t t = static_cast<std::uint64_t>(c) * M[row][j] % p;
                M[i][j] = (M[i][j] + p - static_cast<std::uint32_t>(t)) % p;
            }
        }
        pivot_col_of_row.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < n; ++i) {
        if (M[i][k] != 0) return std::nullopt;  // inconsistent
    }
    std::vector<coeff_t> x(k, 0);
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
        x[pivot_col_of_row[i]] = static_cast<coeff_t>(M[i][k]);
    }
    return x;
}

FpVec flatten(const FieldCtx& F, const std::vector<elem_t>& rest) {
    FpVec out;
    out.reserve(rest.size() * F.e());
    for (elem_t x : rest) {
        FieldElem el = F.elem(x);
        out.insert(out.end(), el.coeffs.begin(), el.coeffs.end());
    }
    return out;
}

std::vector<elem_t> unflatten(const FieldCtx& F, const FpVec& v) {
    const std::uint32_t e = F.e();
    if (v.size() % e != 0) {
        throw DimensionMismatch("vector length " + std::to_string(v.size()) +
                                " not a multiple of " + std::to_string(e));
    }
    std::vector<elem_t> out;
    out.reserve(v.size() / e);
    for (std::size_t i = 0; i < v.size(); i += e) {
        FieldElem el;
        el.coeffs.assign(v.begin() + static_cast<std::ptrdiff_t>(i),
                         v.begin() + static_cast<std::ptrdiff_t>(i + e));
        out.push_back(F.index_of(el));
    }
    return out;
}

}  // namespace fqdigraph
