#pragma once

#include "c2/ints.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace c2 {

// Table-driven arithmetic for F_q, q = p^k. Elements are indices 0..q-1 whose
// base-p digits are the coefficients of the residue polynomial; the prime
// subfield embeds as 0..p-1. Extension moduli come from a fixed table so that
// counts are reproducible across runs.
class FiniteField {
public:
    static bool supported(std::int64_t q);
    static FiniteField make(std::int64_t q);

    std::int64_t q() const { return q_; }
    std::int64_t p() const { return p_; }
    int ext_degree() const { return k_; }

    using Elt = std::uint32_t;
    Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
    Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
    Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
    Elt neg(Elt a) const { return neg_[a]; }
    Elt inv(Elt a) const; // a != 0
    Elt pow(Elt a, int e) const;

    Elt from_int(const Int& c) const {
        Int r = c % p_;
        if (r < 0) r += p_;
        return static_cast<Elt>(r);
    }

private:
    FiniteField() = default;
    std::int64_t q_ = 0, p_ = 0;
    int k_ = 1;
    std::vector<Elt> add_, mul_, neg_, inv_;
};

} // namespace c2
