#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fqdigraph/errors.hpp"
#include "fqdigraph/field.hpp"

namespace fqdigraph {

/// Vector over F_p, one coefficient per coordinate, each in [0, p).
using FpVec = std::vector<coeff_t>;

FpVec fp_add(const FpVec& a, const FpVec& b, std::uint32_t p);
FpVec fp_sub(const FpVec& a, const FpVec& b, std::uint32_t p);
FpVec fp_neg(const FpVec& a, std::uint32_t p);
FpVec fp_scale(coeff_t c, const FpVec& a, std::uint32_t p);

/// Subspace of F_p^n kept as a reduced row echelon basis, so equal subspaces
/// have identical basis matrices and coset representatives are canonical.
class SubspaceFp {
public:
    SubspaceFp(std::uint32_t p, std::uint32_t n);

    static SubspaceFp span_of(std::uint32_t p, std::uint32_t n,
                              const std::vector<FpVec>& generators);

    std::uint32_t p() const { return p_; }
    std::uint32_t n() const { return n_; }
    std::uint32_t dim() const { return static_cast<std::uint32_t>(rows_.size()); }
    const std::vector<FpVec>& basis() const { return rows_; }

    /// Adds v to the span; true when the dimension grew.
    bool extend(const FpVec& v);

    bool contains(const FpVec& v) const;

    /// Canonical representative of v + W: v with every pivot coordinate
    /// eliminated. Two vectors lie in the same coset iff they reduce equal.
    FpVec reduce(const FpVec& v) const;

    /// Number of elements p^dim, throwing TooLarge above the cap.
    std::uint64_t size(std::uint64_t cap = std::uint64_t{1} << 20) const;

    /// All vectors of v + W: the representative plus every F_p combination of
    /// the basis rows, combination counter ascending with row 0 cycling
    /// fastest. Throws TooLarge when the coset is bigger than `cap`.
    std::vector<FpVec> coset(const FpVec& v,
                             std::uint64_t cap = std::uint64_t{1} << 20) const;

    bool operator==(const SubspaceFp& o) const {
        return p_ == o.p_ && n_ == o.n_ && rows_ == o.rows_;
    }

private:
    std::uint32_t p_;
    std::uint32_t n_;
    std::vector<FpVec> rows_;
    std::vector<std::uint32_t> pivots_;

    void check_vec(const FpVec& v) const;
};

/// One solution x of  sum_i x_i * family[i] = v  over F_p, or nullopt when v
/// is outside the span. Free coordinates are set to zero, so the answer is
/// deterministic even for a dependent family.
std::optional<std::vector<coeff_t>> express_in_family(
    std::uint32_t p, const std::vector<FpVec>& family, const FpVec& v);

/// Concatenates the coefficient vectors of l field elements into one vector
/// of length e*l over F_p, component 0 first.
FpVec flatten(const FieldCtx& F, const std::vector<elem_t>& rest);

/// Inverse of flatten.
std::vector<elem_t> unflatten(const FieldCtx& F, const FpVec& v);

}  // namespace fqdigraph
