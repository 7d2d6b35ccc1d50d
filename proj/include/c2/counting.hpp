#pragma once

#include "c2/finite_field.hpp"
#include "c2/graph.hpp"
#include "c2/polynomial.hpp"
#include "c2/varset.hpp"

#include <string>
#include <vector>

namespace c2 {

struct CountResult {
    Int count;
    VarSet ambient;
    std::int64_t q = 0;
};

// Exact number of common zeros in F^n, n = |ambient|. When one polynomial is
// linear in some variable the enumeration runs over the remaining n-1
// coordinates with per-point solution counting.
CountResult count_affine(const std::vector<Polynomial>& polys, const VarSet& ambient,
                         const FiniteField& F);

// Same result with the outermost enumerated coordinate split across threads.
CountResult count_parallel(const std::vector<Polynomial>& polys, const VarSet& ambient,
                           const FiniteField& F, int shards);

// ([Psi_G]_q / q^2) mod q. Requires |V| >= 3; divisibility failure indicates
// an implementation bug and throws.
int c2_bruteforce(const Graph& g, const FiniteField& F, int shards = 1);

// True iff the total degree of the system is smaller than the ambient
// dimension, in which case the point count vanishes mod q.
bool chevalley_warning_applies(const std::vector<Polynomial>& polys, const VarSet& ambient);

struct LinearElimCheck {
    std::string name;
    Int lhs, rhs;
    bool pass = false;
};
struct LinearElimReport {
    std::vector<LinearElimCheck> checks;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Checks the four linear-elimination identities as exact integer equalities
// between independently computed counts. f and g must be linear in x and h
// free of x.
LinearElimReport verify_linear_elim(const Polynomial& f, const Polynomial& g, const Polynomial& h,
                                    int x, const FiniteField& F);

Int int_pow(std::int64_t base, int exp);

} // namespace c2
