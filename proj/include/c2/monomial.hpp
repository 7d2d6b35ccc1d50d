#pragma once

#include "c2/varset.hpp"

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <stdexcept>

namespace c2 {

// Hard limit on distinct variables in one polynomial ring. The largest graphs
// handled here (completed zigzags up to h=8 plus two surgery edges) stay well
// under it.
inline constexpr int kMaxVars = 32;

// Exponent vector indexed by variable id - 1. Fixed size keeps comparison and
// hashing branch-free.
struct Monomial {
    std::array<std::uint8_t, kMaxVars> e{};

    static Monomial one() { return Monomial{}; }
    static Monomial var(int v, int exp = 1) {
        check_var(v);
        Monomial m;
        m.e[v - 1] = static_cast<std::uint8_t>(exp);
        return m;
    }

    int deg() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }
    int deg_in(int v) const {
        check_var(v);
        return e[v - 1];
    }
    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    VarSet vars() const {
        VarSet s;
        for (int v = 1; v <= kMaxVars; ++v)
            if (e[v - 1]) s.insert(v);
        return s;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            int s = int(e[i]) + int(o.e[i]);
            if (s > 255) throw std::overflow_error("Monomial: exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        return r;
    }
    bool divides(const Monomial& o) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }
    Monomial divided_into(const Monomial& o) const { // o / this
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint8_t>(o.e[i] - e[i]);
        return r;
    }
    Monomial without(int v) const {
        Monomial r = *this;
        r.e[v - 1] = 0;
        return r;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
    // Lexicographic by variable id; used as the canonical term order.
    bool operator<(const Monomial& o) const {
        return std::memcmp(e.data(), o.e.data(), kMaxVars) < 0;
    }

private:
    static void check_var(int v) {
        if (v < 1 || v > kMaxVars) throw std::out_of_range("Monomial: variable id out of range");
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : m.e) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace c2
