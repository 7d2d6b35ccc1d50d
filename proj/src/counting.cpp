#include "c2/counting.hpp"

#include "c2/kirchhoff.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace c2 {

namespace {

using Elt = FiniteField::Elt;

// Polynomial compiled against a fixed position layout of the ambient
// variables, coefficients reduced into the prime subfield once.
struct Compiled {
    struct Term {
        Elt coeff;
        std::vector<std::pair<int, int>> powers; // (position, exponent)
    };
    std::vector<Term> terms;

    static Compiled build(const Polynomial& p, const std::vector<int>& var_of_pos,
                          const FiniteField& F) {
        Compiled c;
        for (auto& t : p.terms()) {
            Elt coeff = F.from_int(t.second);
            if (coeff == 0) continue;
            Term ct;
            ct.coeff = coeff;
            for (std::size_t pos = 0; pos < var_of_pos.size(); ++pos) {
                int e = t.first.deg_in(var_of_pos[pos]);
                if (e) ct.powers.emplace_back(static_cast<int>(pos), e);
            }
            c.terms.push_back(std::move(ct));
        }
        return c;
    }
    bool is_zero() const { return terms.empty(); }
    bool is_nonzero_constant() const {
        return terms.size() == 1 && terms[0].powers.empty() && terms[0].coeff != 0;
    }
    Elt eval(const std::vector<Elt>& point, const FiniteField& F) const {
        Elt acc = 0;
        for (auto& t : terms) {
            Elt v = t.coeff;
            for (auto [pos, e] : t.powers) {
                Elt x = point[pos];
                for (int i = 0; i < e; ++i) v = F.mul(v, x);
            }
            acc = F.add(acc, v);
        }
        return acc;
    }
};

// Odometer over the given positions; the outermost digit is split
// round-robin across shards.
template <typename Fn>
void enumerate_points(const FiniteField& F, const std::vector<int>& positions,
                      std::vector<Elt>& point, int shards, int shard_index, Fn&& fn) {
    const std::int64_t q = F.q();
    const int m = static_cast<int>(positions.size());
    if (m == 0) {
        if (shard_index == 0) fn();
        return;
    }
    std::vector<std::int64_t> digit(m, 0);
    for (std::int64_t outer = shard_index; outer < q; outer += shards) {
        point[positions[0]] = static_cast<Elt>(outer);
        std::fill(digit.begin() + 1, digit.end(), 0);
        for (int i = 1; i < m; ++i) point[positions[i]] = 0;
        while (true) {
            fn();
            int i = m - 1;
            while (i >= 1) {
                if (++digit[i] < q) {
                    point[positions[i]] = static_cast<Elt>(digit[i]);
                    break;
                }
                digit[i] = 0;
                point[positions[i]] = 0;
                --i;
            }
            if (i == 0) break;
        }
    }
}

Int q_pow(std::int64_t q, int n) {
    Int r = 1;
    for (int i = 0; i < n; ++i) r *= q;
    return r;
}

unsigned long long count_affine_shard(const std::vector<Polynomial>& polys, const VarSet& ambient,
                                      const FiniteField& F, int shards, int shard_index,
                                      bool& whole_space) {
    whole_space = false;
    for (auto& p : polys)
        if (!ambient.contains_all(p.vars()))
            throw std::invalid_argument("count_affine: polynomial variable outside ambient set");

    std::vector<int> var_of_pos = ambient.to_vector();
    const int n = static_cast<int>(var_of_pos.size());
    auto pos_of = [&](int var) {
        return static_cast<int>(std::lower_bound(var_of_pos.begin(), var_of_pos.end(), var) -
                                var_of_pos.begin());
    };

    // Coefficients are reduced mod p once. Identically-zero reductions are
    // vacuous; a nonzero constant kills the whole system.
    std::vector<Polynomial> reduced;
    for (auto& p : polys) {
        Compiled c = Compiled::build(p, var_of_pos, F);
        if (c.is_zero()) continue;
        if (c.is_nonzero_constant()) return 0;
        reduced.push_back(p);
    }
    if (reduced.empty()) {
        whole_space = true; // caller reports q^n once
        return 0;
    }

    // Pick a polynomial that stays linear in some variable after reduction.
    int lin_poly = -1, lin_var = 0;
    for (std::size_t i = 0; i < reduced.size() && lin_poly < 0; ++i) {
        for (int v : reduced[i].vars().to_vector()) {
            if (reduced[i].deg_in(v) != 1) continue;
            if (Compiled::build(reduced[i].coeff_of(v, 1), var_of_pos, F).is_zero()) continue;
            lin_poly = static_cast<int>(i);
            lin_var = v;
            break;
        }
    }

    const std::int64_t q = F.q();
    std::vector<Elt> point(n, 0);
    unsigned long long count = 0;

    if (lin_poly < 0) {
        std::vector<Compiled> cs;
        for (auto& p : reduced) cs.push_back(Compiled::build(p, var_of_pos, F));
        std::vector<int> all_pos(n);
        for (int i = 0; i < n; ++i) all_pos[i] = i;
        enumerate_points(F, all_pos, point, shards, shard_index, [&]() {
            for (auto& c : cs)
                if (c.eval(point, F) != 0) return;
            ++count;
        });
        return count;
    }

    const int xpos = pos_of(lin_var);
    Compiled A = Compiled::build(reduced[lin_poly].coeff_of(lin_var, 1), var_of_pos, F);
    Compiled B = Compiled::build(reduced[lin_poly].coeff_of(lin_var, 0), var_of_pos, F);

    // Remaining polynomials as coefficient lists in lin_var, evaluated by
    // Horner at whichever x values are needed.
    struct InX {
        std::vector<Compiled> coeff;
    };
    std::vector<InX> others;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        if (static_cast<int>(i) == lin_poly) continue;
        InX o;
        for (int k = 0; k <= reduced[i].deg_in(lin_var); ++k)
            o.coeff.push_back(Compiled::build(reduced[i].coeff_of(lin_var, k), var_of_pos, F));
        others.push_back(std::move(o));
    }
    auto others_vanish_at = [&](Elt xv) {
        for (auto& o : others) {
            Elt acc = 0;
            for (int k = static_cast<int>(o.coeff.size()) - 1; k >= 0; --k)
                acc = F.add(F.mul(acc, xv), o.coeff[k].eval(point, F));
            if (acc != 0) return false;
        }
        return true;
    };

    std::vector<int> rest_pos;
    for (int i = 0; i < n; ++i)
        if (i != xpos) rest_pos.push_back(i);
    enumerate_points(F, rest_pos, point, shards, shard_index, [&]() {
        Elt a = A.eval(point, F);
        Elt b = B.eval(point, F);
        if (a != 0) {
            Elt x0 = F.neg(F.mul(b, F.inv(a)));
            point[xpos] = x0;
            if (others_vanish_at(x0)) ++count;
            point[xpos] = 0;
        } else if (b == 0) {
            if (others.empty()) {
                count += static_cast<unsigned long long>(q);
            } else {
                for (std::int64_t xv = 0; xv < q; ++xv) {
                    point[xpos] = static_cast<Elt>(xv);
                    if (others_vanish_at(static_cast<Elt>(xv))) ++count;
                }
                point[xpos] = 0;
            }
        }
    });
    return count;
}

} // namespace

Int int_pow(std::int64_t base, int exp) { return q_pow(base, exp); }

CountResult count_affine(const std::vector<Polynomial>& polys, const VarSet& ambient,
                         const FiniteField& F) {
    return count_parallel(polys, ambient, F, 1);
}

CountResult count_parallel(const std::vector<Polynomial>& polys, const VarSet& ambient,
                           const FiniteField& F, int shards) {
    if (shards < 1) throw std::invalid_argument("count_parallel: shards must be >= 1");
    CountResult res;
    res.ambient = ambient;
    res.q = F.q();

    if (shards == 1) {
        bool whole = false;
        unsigned long long c = count_affine_shard(polys, ambient, F, 1, 0, whole);
        res.count = whole ? q_pow(F.q(), ambient.size()) : Int(c);
        return res;
    }
    std::vector<unsigned long long> partial(shards, 0);
    std::vector<char> wholes(shards, 0);
    std::vector<std::thread> workers;
    std::vector<std::exception_ptr> errors(shards);
    for (int s = 0; s < shards; ++s) {
        workers.emplace_back([&, s]() {
            try {
                bool w = false;
                partial[s] = count_affine_shard(polys, ambient, F, shards, s, w);
                wholes[s] = w ? 1 : 0;
            } catch (...) {
                errors[s] = std::current_exception();
            }
        });
    }
    for (auto& t : workers) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    if (wholes[0]) {
        res.count = q_pow(F.q(), ambient.size());
        return res;
    }
    unsigned long long total = 0;
    for (auto c : partial) total += c;
    res.count = total;
    return res;
}

int c2_bruteforce(const Graph& g, const FiniteField& F, int shards) {
    if (g.n_vertices() < 3)
        throw std::invalid_argument("c2_bruteforce: graph must have at least 3 vertices");
    Polynomial psi = graph_polynomial(g);
    VarSet ambient;
    for (auto& e : g.edges()) ambient.insert(e.label);
    CountResult r = count_parallel({psi}, ambient, F, shards);
    Int q2 = Int(F.q()) * F.q();
    if (r.count % q2 != 0)
        throw std::logic_error("c2_bruteforce: point count not divisible by q^2");
    Int residue = (r.count / q2) % F.q();
    return static_cast<int>(residue);
}

bool chevalley_warning_applies(const std::vector<Polynomial>& polys, const VarSet& ambient) {
    long long total = 0;
    for (auto& p : polys) {
        if (p.is_zero()) continue;
        total += p.deg();
    }
    return total < ambient.size();
}

LinearElimReport verify_linear_elim(const Polynomial& f, const Polynomial& g, const Polynomial& h,
                                    int x, const FiniteField& F) {
    if (f.deg_in(x) > 1 || g.deg_in(x) > 1)
        throw std::domain_error("verify_linear_elim: f, g must be linear in x");
    if (h.deg_in(x) != 0)
        throw std::domain_error("verify_linear_elim: h must not involve x");

    VarSet ambient = f.vars().united(g.vars()).united(h.vars());
    ambient.insert(x);
    VarSet rest = ambient.without(x);
    const int n = ambient.size();
    const std::int64_t q = F.q();

    Polynomial f1 = f.coeff_of(x, 1), f0 = f.coeff_of(x, 0);
    Polynomial g1 = g.coeff_of(x, 1), g0 = g.coeff_of(x, 0);
    Polynomial res = f1 * g0 - g1 * f0;

    auto C = [&](const std::vector<Polynomial>& ps, const VarSet& amb) {
        return count_affine(ps, amb, F).count;
    };

    LinearElimReport rep;
    {
        Int lhs = C({f, h}, ambient);
        Int rhs = C({h}, rest) - C({f1, h}, rest) + Int(q) * C({f1, f0, h}, rest);
        rep.checks.push_back({"lin11", lhs, rhs, lhs == rhs});
    }
    {
        Int lhs = C({f}, ambient);
        Int rhs = q_pow(q, n - 1) - C({f1}, rest) + Int(q) * C({f1, f0}, rest);
        rep.checks.push_back({"lin1", lhs, rhs, lhs == rhs});
    }
    {
        Int lhs = C({f, g, h}, ambient);
        Int rhs = Int(q) * C({f1, f0, g1, g0, h}, rest) + C({res, h}, rest) - C({f1, g1, h}, rest);
        rep.checks.push_back({"lin21", lhs, rhs, lhs == rhs});
    }
    {
        Int lhs = C({f, g}, ambient);
        Int rhs = Int(q) * C({f1, f0, g1, g0}, rest) + C({res}, rest) - C({f1, g1}, rest);
        rep.checks.push_back({"lin2", lhs, rhs, lhs == rhs});
    }
    return rep;
}

} // namespace c2
