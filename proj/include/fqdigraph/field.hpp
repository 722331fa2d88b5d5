#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "fqdigraph/errors.hpp"

namespace fqdigraph {

/// Index of a field element, the canonical I/O encoding:
/// index = sum coeffs[i] * p^i, in [0, q).
using elem_t = std::uint32_t;

/// One coefficient in [0, p).
using coeff_t = std::uint16_t;

/// Element of F_{p^e} as coefficients of 1, xi, ..., xi^{e-1} in the power
/// basis of the modulus root xi.
struct FieldElem {
    std::vector<coeff_t> coeffs;
    bool operator==(const FieldElem&) const = default;
    auto operator<=>(const FieldElem&) const = default;
};

/// Arithmetic context for F_{p^e}. Immutable after construction; the
/// primitive-element and discrete-log caches are built lazily and are
/// thread-safe. All operations are pure.
class FieldCtx {
public:
    static constexpr std::uint64_t kDefaultQCap = std::uint64_t{1} << 16;

    /// Builds F_{p^e}. If no modulus is given, uses the lexicographically
    /// smallest monic irreducible of degree e over F_p (coefficients compared
    /// constant-term-first), so construction is deterministic across runs.
    /// The modulus, when supplied, is `e+1` coefficients, constant term first,
    /// leading coefficient 1.
    FieldCtx(std::uint32_t p, std::uint32_t e,
             std::optional<std::vector<coeff_t>> modulus = std::nullopt,
             std::uint64_t q_cap = kDefaultQCap);

    FieldCtx(const FieldCtx&) = delete;
    FieldCtx& operator=(const FieldCtx&) = delete;
    FieldCtx(FieldCtx&&) noexcept;
    FieldCtx& operator=(FieldCtx&&) noexcept;
    ~FieldCtx();

    std::uint32_t p() const { return p_; }
    std::uint32_t e() const { return e_; }
    std::uint32_t q() const { return q_; }
    const std::vector<coeff_t>& modulus() const { return modulus_; }

    // --- element <-> index codec ---
    FieldElem elem(elem_t index) const;
    elem_t index_of(const FieldElem& x) const;

    // --- arithmetic on indices ---
    elem_t add(elem_t a, elem_t b) const;
    elem_t sub(elem_t a, elem_t b) const;
    elem_t neg(elem_t a) const;
    elem_t mul(elem_t a, elem_t b) const;
    elem_t inv(elem_t a) const;  // throws DivisionByZero on 0
    elem_t div(elem_t a, elem_t b) const;
    elem_t pow(elem_t a, std::int64_t k) const;  // negative k via inverse

    // --- arithmetic on elements ---
    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;
    FieldElem inv(const FieldElem& a) const;
    FieldElem div(const FieldElem& a, const FieldElem& b) const;
    FieldElem pow(const FieldElem& a, std::int64_t k) const;

    /// Generator of F_q* with the smallest index; cached after first use.
    elem_t primitive_element() const;

    /// Discrete log base primitive_element(); defined for nonzero elements.
    /// The table behind it is built lazily on first use.
    std::uint32_t log(elem_t a) const;
    elem_t exp_of_primitive(std::uint64_t k) const;  // primitive^k

    /// The subfield F_{p^{e_i}} inside F_q as the fixed set of Frobenius^{e_i},
    /// returned as sorted element indices. Requires e_i | e.
    std::vector<elem_t> subfield_elements(std::uint32_t e_i) const;

private:
    std::uint32_t p_ = 0;
    std::uint32_t e_ = 0;
    std::uint32_t q_ = 0;
    std::vector<coeff_t> modulus_;

    struct Caches;
    std::unique_ptr<Caches> caches_;

    void coeffs_of(elem_t idx, coeff_t* out) const;
    elem_t index_of_coeffs(const coeff_t* c) const;
    void mul_coeffs(const coeff_t* a, const coeff_t* b, coeff_t* out) const;
    const std::vector<std::uint32_t>& log_table() const;
    const std::vector<elem_t>& antilog_table() const;
};

/// Trial-division primality check (desk-scale inputs).
bool is_prime_u64(std::uint64_t n);

/// base^exp, throwing TooLarge if the result would exceed `cap`.
std::uint64_t checked_pow_u64(std::uint64_t base, std::uint32_t exp,
                              std::uint64_t cap);

}  // namespace fqdigraph
