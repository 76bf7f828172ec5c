#pragma once

/* Dense univariate polynomials and reduced rational functions over an
 * exact field K (K = Rat or K = Cyclo in this project).
 *
 * Requirements on K: default construction gives 0, construction from int
 * and from Rat, exact +,-,*,/ and ==. Everything here is pure; values are
 * immutable once built.
 *
 * A RatFunc is kept in canonical form: gcd(num, den) = 1 and den monic,
 * so equality of rational functions is plain field equality on the pair.
 */

#include "orbint/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace orbint {

template <class K>
struct Poly {
    /* coefficients, lowest degree first; empty = zero polynomial */
    std::vector<K> c;

    Poly() = default;
    explicit Poly(K k) {
        if (!(k == K(0)))
            c.push_back(std::move(k));
    }
    explicit Poly(std::vector<K> cc) : c(std::move(cc)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == K(0))
            c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    /* degree of the zero polynomial is -1 by convention */
    long deg() const { return (long)c.size() - 1; }
    const K& lead() const {
        if (c.empty())
            throw std::domain_error("leading coefficient of zero polynomial");
        return c.back();
    }
    K at(size_t i) const { return i < c.size() ? c[i] : K(0); }

    static Poly X() { return Poly(std::vector<K>{K(0), K(1)}); }
    static Poly monomial(K a, size_t e) {
        if (a == K(0))
            return Poly();
        std::vector<K> v(e + 1, K(0));
        v[e] = std::move(a);
        return Poly(std::move(v));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> v(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < v.size(); i++)
            v[i] = a.at(i) + b.at(i);
        return Poly(std::move(v));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<K> v(std::max(a.c.size(), b.c.size()), K(0));
        for (size_t i = 0; i < v.size(); i++)
            v[i] = a.at(i) - b.at(i);
        return Poly(std::move(v));
    }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c)
            x = K(0) - x;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero())
            return Poly();
        std::vector<K> v(a.c.size() + b.c.size() - 1, K(0));
        for (size_t i = 0; i < a.c.size(); i++)
            for (size_t j = 0; j < b.c.size(); j++)
                v[i + j] = v[i + j] + a.c[i] * b.c[j];
        return Poly(std::move(v));
    }
    friend Poly operator*(const K& k, const Poly& b) { return Poly(K(k)) * b; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }

    /* polynomial division: returns (quotient, remainder) */
    friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero())
            throw std::domain_error("polynomial division by zero");
        Poly r = a, q;
        q.c.assign(a.c.size(), K(0));
        while (!r.is_zero() && r.deg() >= b.deg()) {
            K f = r.lead() / b.lead();
            size_t sh = (size_t)(r.deg() - b.deg());
            q.c[sh] = q.c[sh] + f;
            /* r -= f * X^sh * b */
            for (size_t i = 0; i < b.c.size(); i++)
                r.c[i + sh] = r.c[i + sh] - f * b.c[i];
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    K eval(const K& x) const {
        K acc(0);
        for (size_t i = c.size(); i-- > 0;)
            acc = acc * x + c[i];
        return acc;
    }

    /* evaluation into a larger structure (e.g. Poly<Rat> at a Cyclo or at a
     * rational function); V needs V*V, V+V and construction from K */
    template <class V>
    V eval_in(const V& x) const {
        V acc = V(K(0));
        for (size_t i = c.size(); i-- > 0;)
            acc = acc * x + V(c[i]);
        return acc;
    }

    Poly monic() const {
        if (is_zero())
            return *this;
        Poly r = *this;
        K inv = K(1) / lead();
        for (auto& x : r.c)
            x = x * inv;
        return r;
    }

    /* substitute X -> X^s (exponent stretch, s >= 1) */
    Poly stretch(size_t s) const {
        if (is_zero())
            return *this;
        std::vector<K> v((c.size() - 1) * s + 1, K(0));
        for (size_t i = 0; i < c.size(); i++)
            v[i * s] = c[i];
        return Poly(std::move(v));
    }
};

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = b;
        b = r;
    }
    return a.monic();
}

template <class K>
Poly<K> poly_pow(const Poly<K>& p, unsigned long e) {
    Poly<K> out(K(1)), base = p;
    while (e) {
        if (e & 1)
            out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

struct PoleAtOne : std::runtime_error {
    int order;
    explicit PoleAtOne(int ord)
        : std::runtime_error("pole at X=1 of order " + std::to_string(ord)),
          order(ord) {}
};

template <class K>
struct RatFunc {
    Poly<K> num, den;

    RatFunc() : den(K(1)) {}
    explicit RatFunc(K k) : num(std::move(k)), den(K(1)) {}
    explicit RatFunc(Poly<K> p) : num(std::move(p)), den(K(1)) {}
    RatFunc(Poly<K> n, Poly<K> d) { normalize(std::move(n), std::move(d)); }

    /* rf_normalize: reduce to the unique gcd-free, monic-denominator form */
    void normalize(Poly<K> n, Poly<K> d) {
        if (d.is_zero())
            throw std::domain_error("rational function with zero denominator");
        if (n.is_zero()) {
            num = Poly<K>();
            den = Poly<K>(K(1));
            return;
        }
        Poly<K> g = poly_gcd(n, d);
        if (g.deg() > 0) {
            n = divmod(n, g).first;
            d = divmod(d, g).first;
        }
        K lead_inv = K(1) / d.lead();
        for (auto& x : n.c)
            x = x * lead_inv;
        for (auto& x : d.c)
            x = x * lead_inv;
        num = std::move(n);
        den = std::move(d);
    }

    bool is_zero() const { return num.is_zero(); }

    static RatFunc X() { return RatFunc(Poly<K>::X()); }
    /* a * X^e with e of either sign */
    static RatFunc monomial(K a, long e) {
        if (e >= 0)
            return RatFunc(Poly<K>::monomial(std::move(a), (size_t)e));
        return RatFunc(Poly<K>(std::move(a)), Poly<K>::monomial(K(1), (size_t)(-e)));
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.den - b.num * a.den, a.den * b.den);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num * b.num, a.den * b.den);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero())
            throw std::domain_error("division of rational functions by zero");
        return RatFunc(a.num * b.den, a.den * b.num);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num == b.num && a.den == b.den;
    }

    K eval(const K& x) const {
        K d = den.eval(x);
        if (d == K(0))
            throw std::domain_error("rational function evaluated at a pole");
        return num.eval(x) / d;
    }

    /* compose with the monomial a*X^m (m of either sign, a != 0 for m != 0):
     * f(a X^m) brought back to polynomial-fraction form */
    RatFunc subst_monomial(const K& a, long m) const {
        if (m == 0)
            return RatFunc(K(num.eval(a) / den.eval(a)));
        auto lift = [&](const Poly<K>& p) {
            /* p(a X^|m|); for m < 0 we then read X^-1 for X and clear */
            Poly<K> out;
            K pw(1);
            for (size_t i = 0; i < p.c.size(); i++) {
                if (!(p.c[i] == K(0)))
                    out = out + Poly<K>::monomial(p.c[i] * pw, i * (size_t)labs(m));
                pw = pw * a;
            }
            return out;
        };
        Poly<K> n = lift(num), d = lift(den);
        if (m > 0)
            return RatFunc(n, d);
        /* m < 0: reverse both within a common degree */
        size_t D = (size_t)std::max(n.deg(), d.deg());
        auto rev = [&](const Poly<K>& p) {
            std::vector<K> v(D + 1, K(0));
            for (size_t i = 0; i < p.c.size(); i++)
                v[D - i] = p.c[i];
            return Poly<K>(std::move(v));
        };
        return RatFunc(rev(n), rev(d));
    }

    /* substitute X -> Y^s, s >= 1 */
    RatFunc stretch(size_t s) const { return RatFunc(num.stretch(s), den.stretch(s)); }

    /* order of vanishing of p at X=1 */
    static int mult_at_one(Poly<K> p) {
        if (p.is_zero())
            return -1;
        Poly<K> xm1 = Poly<K>::X() - Poly<K>(K(1));
        int k = 0;
        for (;;) {
            auto [q, r] = divmod(p, xm1);
            if (!r.is_zero())
                return k;
            p = q;
            k++;
        }
    }

    /* limit as X -> 1, by repeated exact division of num and den by (X-1).
     * Throws PoleAtOne when the (reduced) denominator vanishes to higher
     * order than the numerator. */
    K limit_at_one() const {
        int k = mult_at_one(den);
        if (k <= 0) {
            K d = den.eval(K(1));
            if (d == K(0))
                throw std::logic_error("unreduced denominator");
            return num.eval(K(1)) / d;
        }
        int j = num.is_zero() ? k : mult_at_one(num);
        if (j < k)
            throw PoleAtOne(k - j);
        Poly<K> xm1 = Poly<K>::X() - Poly<K>(K(1));
        Poly<K> n = num, d = den;
        for (int i = 0; i < k; i++) {
            n = divmod(n, xm1).first;
            d = divmod(d, xm1).first;
        }
        return n.eval(K(1)) / d.eval(K(1));
    }

    /* first T Taylor coefficients at X=0 (den(0) != 0) */
    std::vector<K> series_expand(size_t T) const {
        K d0 = den.at(0);
        if (d0 == K(0))
            throw std::domain_error("series expansion at a pole (den(0) = 0)");
        std::vector<K> out(T, K(0));
        K inv = K(1) / d0;
        for (size_t i = 0; i < T; i++) {
            K acc = num.at(i);
            for (size_t j = 1; j <= i; j++)
                acc = acc - den.at(j) * out[i - j];
            out[i] = acc * inv;
        }
        return out;
    }
};

}  // namespace orbint
