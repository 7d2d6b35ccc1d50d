#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace c2 {

// Variable ids are edge labels, 1-based. The whole toolkit caps out at 64
// variables; monomials cap lower (see monomial.hpp).
class VarSet {
public:
    VarSet() = default;
    explicit VarSet(std::uint64_t bits) : bits_(bits) {}

    static VarSet range(int first, int last) { // inclusive
        VarSet s;
        for (int v = first; v <= last; ++v) s.insert(v);
        return s;
    }
    static VarSet of(std::initializer_list<int> vars) {
        VarSet s;
        for (int v : vars) s.insert(v);
        return s;
    }

    void insert(int v) {
        check(v);
        bits_ |= (std::uint64_t{1} << (v - 1));
    }
    void erase(int v) {
        check(v);
        bits_ &= ~(std::uint64_t{1} << (v - 1));
    }
    bool contains(int v) const {
        return v >= 1 && v <= 64 && (bits_ >> (v - 1)) & 1;
    }
    bool contains_all(const VarSet& o) const { return (o.bits_ & ~bits_) == 0; }
    bool intersects(const VarSet& o) const { return (bits_ & o.bits_) != 0; }
    bool empty() const { return bits_ == 0; }
    int size() const { return __builtin_popcountll(bits_); }

    VarSet united(const VarSet& o) const { return VarSet(bits_ | o.bits_); }
    VarSet minus(const VarSet& o) const { return VarSet(bits_ & ~o.bits_); }
    VarSet intersect(const VarSet& o) const { return VarSet(bits_ & o.bits_); }
    VarSet without(int v) const {
        VarSet s = *this;
        s.erase(v);
        return s;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        for (int v = 1; v <= 64; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    std::uint64_t bits() const { return bits_; }
    bool operator==(const VarSet& o) const { return bits_ == o.bits_; }
    bool operator!=(const VarSet& o) const { return bits_ != o.bits_; }
    bool operator<(const VarSet& o) const { return bits_ < o.bits_; }

    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (int v : to_vector()) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    static void check(int v) {
        if (v < 1 || v > 64) throw std::out_of_range("VarSet: variable id out of range");
    }
    std::uint64_t bits_ = 0;
};

} // namespace c2
