#include "c2/finite_field.hpp"

#include <stdexcept>

namespace c2 {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Fixed irreducible moduli for the supported prime powers, as coefficient
// vectors of x^0..x^k (monic).
std::vector<int> modulus_for(std::int64_t q) {
    switch (q) {
        case 4: return {1, 1, 1};        // x^2 + x + 1 over F_2
        case 8: return {1, 1, 0, 1};     // x^3 + x + 1 over F_2
        case 9: return {1, 0, 1};        // x^2 + 1 over F_3
        case 16: return {1, 1, 0, 0, 1}; // x^4 + x + 1 over F_2
        case 25: return {1, 1, 1};       // x^2 + x + 1 over F_5
        case 27: return {1, 2, 0, 1};    // x^3 + 2x + 1 over F_3
        default: return {};
    }
}

constexpr std::int64_t kMaxQ = 128;

} // namespace

bool FiniteField::supported(std::int64_t q) {
    if (q < 2 || q > kMaxQ) return false;
    return is_prime(q) || !modulus_for(q).empty();
}

FiniteField FiniteField::make(std::int64_t q) {
    if (!supported(q)) throw std::invalid_argument("FiniteField: unsupported field order");
    FiniteField f;
    f.q_ = q;
    std::vector<int> mod = modulus_for(q);
    if (mod.empty()) {
        f.p_ = q;
        f.k_ = 1;
    } else {
        f.k_ = static_cast<int>(mod.size()) - 1;
        std::int64_t p = 2;
        while (true) {
            std::int64_t pk = 1;
            for (int i = 0; i < f.k_; ++i) pk *= p;
            if (pk == q) break;
            ++p;
        }
        f.p_ = p;
    }
    const auto q32 = static_cast<std::size_t>(q);
    f.add_.resize(q32 * q32);
    f.mul_.resize(q32 * q32);
    f.neg_.resize(q32);
    f.inv_.assign(q32, 0);

    auto digits = [&](std::int64_t x) {
        std::vector<std::int64_t> d(f.k_, 0);
        for (int i = 0; i < f.k_; ++i) {
            d[i] = x % f.p_;
            x /= f.p_;
        }
        return d;
    };
    auto undigits = [&](const std::vector<std::int64_t>& d) {
        std::int64_t x = 0;
        for (int i = f.k_ - 1; i >= 0; --i) x = x * f.p_ + d[i];
        return x;
    };

    for (std::int64_t a = 0; a < q; ++a) {
        auto da = digits(a);
        for (auto& x : da) x = (f.p_ - x) % f.p_;
        f.neg_[a] = static_cast<Elt>(undigits(da));
    }
    for (std::int64_t a = 0; a < q; ++a) {
        auto da = digits(a);
        for (std::int64_t b = 0; b < q; ++b) {
            auto db = digits(b);
            std::vector<std::int64_t> sum(f.k_);
            for (int i = 0; i < f.k_; ++i) sum[i] = (da[i] + db[i]) % f.p_;
            f.add_[a * q + b] = static_cast<Elt>(undigits(sum));

            // Polynomial product reduced by the monic modulus.
            std::vector<std::int64_t> prod(2 * f.k_ - 1, 0);
            for (int i = 0; i < f.k_; ++i)
                for (int j = 0; j < f.k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % f.p_;
            for (int d = 2 * f.k_ - 2; d >= f.k_; --d) {
                std::int64_t c = prod[d];
                if (!c) continue;
                prod[d] = 0;
                for (int i = 0; i < f.k_; ++i) {
                    int idx = d - f.k_ + i;
                    prod[idx] = (prod[idx] - c * mod[i]) % f.p_;
                    if (prod[idx] < 0) prod[idx] += f.p_;
                }
            }
            prod.resize(f.k_);
            f.mul_[a * q + b] = static_cast<Elt>(undigits(prod));
        }
    }
    for (std::int64_t a = 1; a < q; ++a)
        for (std::int64_t b = 1; b < q; ++b)
            if (f.mul_[a * q + b] == 1) {
                f.inv_[a] = static_cast<Elt>(b);
                break;
            }
    for (std::int64_t a = 1; a < q; ++a)
        if (f.inv_[a] == 0) throw std::logic_error("FiniteField: modulus is not irreducible");
    return f;
}

FiniteField::Elt FiniteField::inv(Elt a) const {
    if (a == 0) throw std::domain_error("FiniteField: inverse of zero");
    return inv_[a];
}

FiniteField::Elt FiniteField::pow(Elt a, int e) const {
    Elt r = 1;
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

} // namespace c2
