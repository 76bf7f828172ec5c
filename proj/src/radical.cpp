#include "orbint/radical.hpp"

#include <sstream>
#include <stdexcept>

namespace orbint {

std::pair<Int, Int> squarefree_decompose(const Int& m) {
    if (m <= 0)
        throw std::domain_error("squarefree decomposition needs a positive integer");
    Int rest = m, s = 1, f = 1;
    for (Int p = 2; p * p <= rest; p++) {
        if (rest % p != 0)
            continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            e++;
        }
        for (unsigned i = 0; i + 1 < e; i += 2)
            s *= p;
        if (e % 2 == 1)
            f *= p;
    }
    f *= rest; /* leftover prime appears to the first power */
    return {s, f};
}

void RadExt::add_term(Int m, Rat c) {
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), std::move(c));
    } else {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

RadExt RadExt::sqrt_term(const Rat& c, const Int& m) {
    auto [s, f] = squarefree_decompose(m);
    RadExt r;
    r.add_term(f, c * Rat(s));
    return r;
}

RadExt RadExt::sqrt_of(const Rat& v) {
    if (v < 0)
        throw std::domain_error("square root of a negative rational");
    if (v == 0)
        return RadExt();
    /* sqrt(p/q) = sqrt(p*q) / q */
    Int pq = v.get_num() * v.get_den();
    return sqrt_term(Rat(1) / Rat(v.get_den()), pq);
}

bool RadExt::is_rational() const {
    if (terms_.empty())
        return true;
    return terms_.size() == 1 && terms_.begin()->first == 1;
}

Rat RadExt::rational_part() const { return coeff(1); }

Rat RadExt::coeff(const Int& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

RadExt operator+(const RadExt& a, const RadExt& b) {
    RadExt r = a;
    for (const auto& [m, c] : b.terms_)
        r.add_term(m, c);
    return r;
}

RadExt RadExt::operator-() const {
    RadExt r;
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

RadExt operator-(const RadExt& a, const RadExt& b) { return a + (-b); }

RadExt operator*(const RadExt& a, const RadExt& b) {
    RadExt r;
    for (const auto& [m1, c1] : a.terms_)
        for (const auto& [m2, c2] : b.terms_) {
            /* sqrt(m1) * sqrt(m2) = s * sqrt(f) with m1 m2 = s^2 f */
            auto [s, f] = squarefree_decompose(m1 * m2);
            r.add_term(f, c1 * c2 * Rat(s));
        }
    return r;
}

RadExt operator/(const RadExt& a, const RadExt& b) {
    if (b.is_zero())
        throw std::domain_error("division by radical zero");
    if (b.terms_.size() != 1)
        throw std::domain_error("division only by single-term radical values");
    const auto& [m, c] = *b.terms_.begin();
    /* 1/(c sqrt(m)) = sqrt(m)/(c m) */
    RadExt inv = RadExt::sqrt_term(Rat(1) / (c * Rat(m)), m);
    return a * inv;
}

bool operator==(const RadExt& a, const RadExt& b) { return a.terms_ == b.terms_; }

std::string RadExt::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first)
            os << " + ";
        os << c.get_str();
        if (m != 1)
            os << "*sqrt(" << m.get_str() << ")";
        first = false;
    }
    return os.str();
}

}  // namespace orbint
