#include "c2/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace c2 {

namespace {

Polynomial var_power(int v, int e) {
    return e == 0 ? Polynomial::constant(1) : Polynomial(Monomial::var(v, e), 1);
}

// Pseudo-remainder of a by b with respect to x.
Polynomial prem(Polynomial a, const Polynomial& b, int x) {
    int db = b.deg_in(x);
    Polynomial lb = b.coeff_of(x, db);
    while (!a.is_zero() && a.deg_in(x) >= db) {
        int da = a.deg_in(x);
        Polynomial la = a.coeff_of(x, da);
        a = lb * a - la * var_power(x, da - db) * b;
    }
    return a;
}

// Content of f viewed as a univariate polynomial in x, numeric content
// included.
Polynomial content_in(const Polynomial& f, int x) {
    Polynomial c;
    for (int k = 0; k <= f.deg_in(x); ++k) {
        Polynomial ck = f.coeff_of(x, k);
        if (ck.is_zero()) continue;
        c = c.is_zero() ? ck.normalized_sign() : gcd_full(c, ck);
        if (c.is_constant() && c.constant_value() == 1) break;
    }
    return c;
}

Polynomial exact(const Polynomial& f, const Polynomial& d) {
    auto q = f.divided_by(d);
    if (!q) throw std::logic_error("factor: expected exact division failed");
    return *q;
}

} // namespace

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero()) return g.primitive_part().normalized_sign();
    if (g.is_zero()) return f.primitive_part().normalized_sign();
    if (f.is_constant() || g.is_constant()) return Polynomial::constant(1);
    VarSet common = f.vars().intersect(g.vars());
    if (common.empty()) return Polynomial::constant(1);
    int x = common.to_vector().back();

    Polynomial cf = content_in(f, x), cg = content_in(g, x);
    Polynomial a = exact(f, cf), b = exact(g, cg);
    Polynomial c = gcd(cf, cg); // primitive gcd of the contents

    if (a.deg_in(x) < b.deg_in(x)) std::swap(a, b);
    // Primitive PRS; input sizes here are small enough that the recursive
    // content computations stay cheap.
    while (true) {
        Polynomial r = prem(a, b, x);
        if (r.is_zero()) break;
        if (r.deg_in(x) == 0) {
            b = Polynomial::constant(1);
            break;
        }
        a = std::move(b);
        b = exact(r, content_in(r, x));
    }
    Polynomial pp = b.is_constant() ? Polynomial::constant(1) : exact(b, content_in(b, x));
    Polynomial result = c * pp;

    // Exact-division guards; a failure here is an implementation bug.
    if (!f.divided_by(result) || !g.divided_by(result))
        throw std::logic_error("gcd: result does not divide inputs");
    return result.primitive_part().normalized_sign();
}

Polynomial gcd_full(const Polynomial& f, const Polynomial& g) {
    Int ic = int_gcd(f.content(), g.content());
    Polynomial p = gcd(f.primitive_part(), g.primitive_part());
    return p.times(ic == 0 ? Int(1) : ic);
}

std::optional<Polynomial> poly_sqrt(const Polynomial& f) {
    if (f.is_zero()) return Polynomial();
    if (f.is_constant()) {
        const Int& c = f.constant_value();
        auto [r, ok] = int_sqrt_exact(c);
        if (!ok) return std::nullopt;
        return Polynomial::constant(r);
    }
    if (f.deg() % 2 != 0) return std::nullopt;
    int x = f.vars().to_vector().back();
    int d2 = f.deg_in(x);
    if (d2 % 2 != 0) return std::nullopt;
    int d = d2 / 2;

    auto top = poly_sqrt(f.coeff_of(x, d2));
    if (!top) return std::nullopt;
    std::vector<Polynomial> gc(d + 1);
    gc[d] = *top;
    if (gc[d].is_zero()) return std::nullopt;
    Polynomial twice_top = gc[d].times(2);
    for (int j = d - 1; j >= 0; --j) {
        // Coefficient of x^{d+j} in the square of the already known part.
        Polynomial s;
        for (int k = j + 1; k <= d; ++k) {
            int l = d + j - k;
            if (l <= j || l > d) continue;
            if (l < k) continue; // count unordered pairs once
            Polynomial prod = gc[k] * gc[l];
            s += (k == l) ? prod : prod.times(2);
        }
        auto q = (f.coeff_of(x, d + j) - s).divided_by(twice_top);
        if (!q) return std::nullopt;
        gc[j] = *q;
    }
    Polynomial g;
    for (int j = 0; j <= d; ++j) g += gc[j] * var_power(x, j);
    if (g * g != f) return std::nullopt;
    return g.normalized_sign();
}

std::optional<std::pair<Polynomial, Polynomial>> split_quadratic(const Polynomial& f, int x) {
    int dx = f.deg_in(x);
    if (dx > 2) throw std::domain_error("split_quadratic: degree in variable exceeds 2");
    auto ordered = [](Polynomial a, Polynomial b) {
        if (b < a) std::swap(a, b);
        return std::make_optional(std::make_pair(std::move(a), std::move(b)));
    };
    if (dx <= 1) return ordered(f, Polynomial::constant(1));

    Polynomial A = f.coeff_of(x, 2), B = f.coeff_of(x, 1), C = f.coeff_of(x, 0);
    auto s = poly_sqrt(B * B - A * C.times(4));
    if (!s) return std::nullopt;
    for (int sign : {1, -1}) {
        Polynomial cand = A.times(2) * Polynomial::variable(x) + (B - s->times(sign));
        if (cand.is_zero()) continue;
        Polynomial pc = gcd_full(cand.coeff_of(x, 1), cand.coeff_of(x, 0));
        if (pc.is_zero()) continue;
        Polynomial a0 = exact(cand, pc);
        auto b0 = f.divided_by(a0);
        if (b0 && b0->deg_in(x) == 1) return ordered(a0, *b0);
    }
    return std::nullopt;
}

std::optional<std::pair<Polynomial, Polynomial>> square_split(const Polynomial& h) {
    if (h.is_zero() || h.is_constant()) return std::nullopt;
    if (auto s = poly_sqrt(h); s && s->deg() >= 1)
        return std::make_pair(*s, Polynomial::constant(1));
    for (int x : h.vars().to_vector()) {
        if (h.deg_in(x) < 2) continue;
        Polynomial w = gcd(h, h.derivative(x));
        if (w.deg() < 1) continue;
        if (auto q = h.divided_by(w * w)) return std::make_pair(w, *q);
        // One gcd refinement before giving up on this variable.
        auto u = h.divided_by(w);
        if (!u) continue;
        Polynomial w2 = gcd(w, *u);
        if (w2.deg() < 1) continue;
        if (auto q2 = h.divided_by(w2 * w2)) return std::make_pair(w2, *q2);
    }
    return std::nullopt;
}

} // namespace c2
