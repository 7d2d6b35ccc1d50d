#include "c2/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace c2 {

void Polynomial::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return b.first < a.first; });
    std::vector<Term> merged;
    merged.reserve(terms_.size());
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().first == t.first) {
            merged.back().second += t.second;
            if (merged.back().second == 0) merged.pop_back();
        } else if (t.second != 0) {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

Polynomial Polynomial::from_terms(std::vector<Term> ts) {
    Polynomial p;
    p.terms_ = std::move(ts);
    p.normalize();
    return p;
}

const Int& Polynomial::constant_value() const {
    static const Int zero_ = 0;
    if (terms_.empty()) return zero_;
    if (!terms_.front().first.is_one())
        throw std::logic_error("constant_value on non-constant polynomial");
    return terms_.front().second;
}

int Polynomial::deg() const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.first.deg());
    return d;
}

int Polynomial::deg_in(int v) const {
    int d = 0;
    for (auto& t : terms_) d = std::max(d, t.first.deg_in(v));
    return d;
}

VarSet Polynomial::vars() const {
    VarSet s;
    for (auto& t : terms_) s = s.united(t.first.vars());
    return s;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().first.deg();
    for (auto& t : terms_)
        if (t.first.deg() != d) return false;
    return true;
}

const Polynomial::Term& Polynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    // Merge of two canonically sorted term lists.
    Polynomial r;
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].first == o.terms_[j].first) {
            Int c = terms_[i].second + o.terms_[j].second;
            if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
            ++i, ++j;
        } else if (o.terms_[j].first < terms_[i].first) {
            r.terms_.push_back(terms_[i++]);
        } else {
            r.terms_.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::unordered_map<Monomial, Int, MonomialHash> acc;
    acc.reserve(terms_.size() * o.terms_.size() / 2 + 8);
    for (auto& a : terms_)
        for (auto& b : o.terms_) acc[a.first.times(b.first)] += a.second * b.second;
    std::vector<Term> ts;
    ts.reserve(acc.size());
    for (auto& kv : acc)
        if (kv.second != 0) ts.emplace_back(kv.first, std::move(kv.second));
    return from_terms(std::move(ts));
}

Polynomial Polynomial::times(const Int& c) const {
    if (c == 0) return Polynomial();
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second *= c;
    return r;
}

bool Polynomial::operator<(const Polynomial& o) const {
    std::size_t n = std::min(terms_.size(), o.terms_.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first;
        if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
    }
    return terms_.size() < o.terms_.size();
}

Polynomial Polynomial::coeff_of(int v, int k) const {
    std::vector<Term> ts;
    for (auto& t : terms_)
        if (t.first.deg_in(v) == k) ts.emplace_back(t.first.without(v), t.second);
    return from_terms(std::move(ts));
}

Polynomial Polynomial::substitute_zero(int v) const { return coeff_of(v, 0); }

Polynomial Polynomial::derivative(int v) const {
    std::vector<Term> ts;
    for (auto& t : terms_) {
        int e = t.first.deg_in(v);
        if (e == 0) continue;
        Monomial m = t.first;
        m.e[v - 1] = static_cast<std::uint8_t>(e - 1);
        ts.emplace_back(m, t.second * e);
    }
    return from_terms(std::move(ts));
}

Int Polynomial::eval(const std::vector<Int>& point) const {
    Int total = 0;
    for (auto& t : terms_) {
        Int v = t.second;
        for (int i = 0; i < kMaxVars; ++i) {
            for (int k = 0; k < t.first.e[i]; ++k) {
                if (static_cast<std::size_t>(i) >= point.size())
                    throw std::out_of_range("eval: point too short");
                v *= point[i];
            }
        }
        total += v;
    }
    return total;
}

std::optional<Polynomial> Polynomial::divided_by(const Polynomial& o) const {
    if (o.is_zero()) throw std::domain_error("division by zero polynomial");
    Polynomial rem = *this;
    std::vector<Term> q;
    const Term& lo = o.leading();
    while (!rem.is_zero()) {
        const Term& lr = rem.leading();
        if (!lo.first.divides(lr.first)) return std::nullopt;
        if (lr.second % lo.second != 0) return std::nullopt;
        Term t{lo.first.divided_into(lr.first), lr.second / lo.second};
        rem = rem - o * Polynomial(t.first, t.second);
        q.push_back(std::move(t));
    }
    return from_terms(std::move(q));
}

Int Polynomial::content() const {
    Int c = 0;
    for (auto& t : terms_) {
        c = int_gcd(c, t.second);
        if (c == 1) break;
    }
    return c;
}

Polynomial Polynomial::primitive_part() const {
    Int c = content();
    if (c == 0 || c == 1) return *this;
    Polynomial r = *this;
    for (auto& t : r.terms_) t.second /= c;
    return r;
}

Polynomial Polynomial::normalized_sign() const {
    if (!terms_.empty() && terms_.front().second < 0) return -*this;
    return *this;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : terms_) {
        Int c = t.second;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool printed = false;
        if (c != 1 || t.first.is_one()) {
            os << c;
            printed = true;
        }
        for (int v = 1; v <= kMaxVars; ++v) {
            int e = t.first.deg_in(v);
            if (!e) continue;
            if (printed) os << "*";
            os << "a" << v;
            if (e > 1) os << "^" << e;
            printed = true;
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error at position " + std::to_string(i) +
                                    ": " + what);
    }
    Int parse_int() {
        skip_ws();
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        if (digits.empty()) fail("expected integer");
        return Int(digits);
    }
    // factor := integer | a<id>[^exp]
    void parse_factor(Int& coeff, Monomial& mono) {
        skip_ws();
        if (peek() == 'a') {
            ++i;
            Int v = parse_int();
            if (v < 1 || v > kMaxVars) fail("variable id out of range");
            int exp = 1;
            if (peek() == '^') {
                ++i;
                Int e = parse_int();
                if (e < 1 || e > 255) fail("exponent out of range");
                exp = static_cast<int>(e);
            }
            mono = mono.times(Monomial::var(static_cast<int>(v), exp));
        } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= parse_int();
        } else {
            fail("expected factor");
        }
    }
    Polynomial::Term parse_term(bool negative) {
        Int coeff = negative ? -1 : 1;
        Monomial mono = Monomial::one();
        parse_factor(coeff, mono);
        while (peek() == '*') {
            ++i;
            parse_factor(coeff, mono);
        }
        return {mono, coeff};
    }
    Polynomial run() {
        std::vector<Polynomial::Term> ts;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++i;
        } else if (peek() == '+') {
            ++i;
        }
        ts.push_back(parse_term(neg));
        while (!eof()) {
            char c = peek();
            if (c == '+')
                neg = false;
            else if (c == '-')
                neg = true;
            else
                fail("expected + or -");
            ++i;
            ts.push_back(parse_term(neg));
        }
        return Polynomial::from_terms(std::move(ts));
    }
};

} // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Parser p(text);
    if (p.eof()) throw std::invalid_argument("polynomial parse error: empty input");
    if (p.peek() == '0') {
        std::size_t save = p.i;
        ++p.i;
        if (p.eof()) return Polynomial();
        p.i = save;
    }
    return p.run();
}

LinearSplit linear_split(const Polynomial& f, int x) {
    if (f.deg_in(x) > 1) throw std::domain_error("linear_split: polynomial not linear in variable");
    return LinearSplit{f.coeff_of(x, 1), f.coeff_of(x, 0), x};
}

Polynomial resultant_linear(const Polynomial& f, const Polynomial& g, int x) {
    if (f.deg_in(x) > 1 || g.deg_in(x) > 1)
        throw std::domain_error("resultant_linear: input not linear in variable");
    LinearSplit sf = linear_split(f, x), sg = linear_split(g, x);
    return sf.leading * sg.constant - sf.constant * sg.leading;
}

DeltaInfo delta_of(const Polynomial& f) {
    if (!f.is_homogeneous()) throw std::domain_error("delta_of: non-homogeneous input");
    DeltaInfo d;
    d.total_degree = f.deg();
    d.n_vars = f.vars().size();
    d.delta = 2 * d.total_degree - d.n_vars;
    return d;
}

DeltaInfo delta_of_pair(const Polynomial& f, const Polynomial& g) {
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw std::domain_error("delta_of_pair: non-homogeneous input");
    DeltaInfo d;
    d.total_degree = f.deg() + g.deg();
    d.n_vars = f.vars().united(g.vars()).size();
    d.delta = d.total_degree - d.n_vars;
    return d;
}

} // namespace c2
