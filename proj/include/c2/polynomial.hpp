#pragma once

#include "c2/ints.hpp"
#include "c2/monomial.hpp"
#include "c2/varset.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace c2 {

// Sparse multivariate polynomial over exact integers. Terms are kept sorted
// in descending lexicographic order with no zero coefficients, so equality is
// structural.
class Polynomial {
public:
    using Term = std::pair<Monomial, Int>;

    Polynomial() = default;
    explicit Polynomial(Int c) {
        if (c != 0) terms_.emplace_back(Monomial::one(), std::move(c));
    }
    Polynomial(const Monomial& m, Int c) {
        if (c != 0) terms_.emplace_back(m, std::move(c));
    }

    static Polynomial zero() { return Polynomial(); }
    static Polynomial constant(Int c) { return Polynomial(std::move(c)); }
    static Polynomial variable(int v) { return Polynomial(Monomial::var(v), 1); }

    // Takes arbitrary (monomial, coeff) pairs, merges and normalizes.
    static Polynomial from_terms(std::vector<Term> ts);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || terms_.front().first.is_one(); }
    const Int& constant_value() const; // requires is_constant() and !is_zero()

    int deg() const;
    int deg_in(int v) const;
    VarSet vars() const;
    int n_terms() const { return static_cast<int>(terms_.size()); }
    bool is_homogeneous() const;

    // Leading term in the canonical order.
    const Term& leading() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
    Polynomial times(const Int& c) const;

    bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }
    // Arbitrary but total; used for canonical pair ordering and map keys.
    bool operator<(const Polynomial& o) const;

    // Coefficient of v^k, as a polynomial free of v.
    Polynomial coeff_of(int v, int k) const;
    Polynomial substitute_zero(int v) const;
    Polynomial derivative(int v) const;

    Int eval(const std::vector<Int>& point) const; // point indexed by var id - 1

    // Exact division; nullopt when o does not divide *this over the integers.
    std::optional<Polynomial> divided_by(const Polynomial& o) const;

    Int content() const; // gcd of coefficients, >= 0; 0 for the zero polynomial
    Polynomial primitive_part() const;
    // Flips the sign if the canonical leading coefficient is negative.
    Polynomial normalized_sign() const;

    std::string str() const;
    static Polynomial parse(const std::string& text);

private:
    void normalize();
    std::vector<Term> terms_;
};

inline Polynomial operator*(const Int& c, const Polynomial& p) { return p.times(c); }

// f = leading * x + constant with both parts free of x.
struct LinearSplit {
    Polynomial leading;
    Polynomial constant;
    int variable = 0;
};

// Requires deg_x f <= 1; throws std::domain_error otherwise.
LinearSplit linear_split(const Polynomial& f, int x);

// f^x * g_x - f_x * g^x, one fixed sign. Requires both linear in x.
Polynomial resultant_linear(const Polynomial& f, const Polynomial& g, int x);

struct DeltaInfo {
    int total_degree = 0;
    int n_vars = 0;
    int delta = 0;
};

// Single polynomial: delta = 2 deg - N over the variables actually occurring.
// Requires homogeneous input.
DeltaInfo delta_of(const Polynomial& f);
// Pair: delta = (deg f + deg g) - N(f, g). Both inputs homogeneous.
DeltaInfo delta_of_pair(const Polynomial& f, const Polynomial& g);

} // namespace c2
