#include "orbint/curve.hpp"

#include <stdexcept>

namespace orbint {

void Curve::validate() const {
    if (q < 2)
        throw std::invalid_argument("curve needs q >= 2");
    if (genus < 0)
        throw std::invalid_argument("curve needs genus >= 0");
    if (numerator.at(0) != 1)
        throw std::invalid_argument("zeta numerator must have P(0) = 1");
    if (numerator.deg() > 2 * genus)
        throw std::invalid_argument("zeta numerator degree exceeds 2*genus");
    /* functional equation P(t) = q^g t^{2g} P(1/(qt)), i.e. coefficientwise
     * p_{2g-i} = q^{g-i} p_i */
    for (int i = 0; i <= 2 * genus; i++) {
        Rat lhs = numerator.at((size_t)(2 * genus - i));
        Rat rhs = rat_pow(Rat(q), genus - i) * numerator.at((size_t)i);
        if (lhs != rhs)
            throw std::invalid_argument(
                "zeta numerator violates the functional equation at degree " + std::to_string(i));
    }
}

Curve curve_from_counts(long q, int genus, const std::vector<long>& counts) {
    if ((int)counts.size() != genus)
        throw std::invalid_argument("need exactly genus point counts");
    /* t P'(t)/P(t) = sum_k (N_k - 1 - q^k) t^k gives the Newton-style
     * recurrence  m p_m = sum_{k=1..m} (N_k - 1 - q^k) p_{m-k}; the counts
     * pin down p_1..p_g and the functional equation supplies the rest */
    std::vector<Rat> p(2 * (size_t)genus + 1, Rat(0));
    p[0] = Rat(1);
    std::vector<Rat> c(genus + 1, Rat(0));
    for (int k = 1; k <= genus; k++)
        c[k] = Rat(counts[k - 1]) - 1 - rat_pow(Rat(q), k);
    for (int m = 1; m <= genus; m++) {
        Rat acc(0);
        for (int k = 1; k <= m; k++)
            acc += c[k] * p[(size_t)(m - k)];
        p[(size_t)m] = acc / m;
        if (!rat_is_integer(p[(size_t)m]))
            throw std::invalid_argument("inconsistent point counts: non-integral zeta numerator");
    }
    for (int i = 2 * genus; i > genus; i--)
        p[(size_t)i] = rat_pow(Rat(q), i - genus) * p[(size_t)(2 * genus - i)];
    Curve out{q, genus, Poly<Rat>(std::move(p))};
    out.validate(); /* also catches non-integral/inconsistent count data */
    return out;
}

Curve curve_from_numerator(long q, int genus, Poly<Rat> numerator) {
    Curve out{q, genus, std::move(numerator)};
    out.validate();
    return out;
}

Rat zeta_at(const Curve& c, const Rat& t) {
    Rat den = (1 - t) * (1 - Rat(c.q) * t);
    if (den == 0)
        throw std::domain_error("zeta evaluated at a pole");
    return c.numerator.eval(t) / den;
}

Rat zeta_star_at(const Curve& c, const Rat& t) {
    if (t == 1)
        throw std::domain_error("modified zeta evaluated at its pole t=1");
    return c.numerator.eval(t) / (1 - t);
}

RatFunc<Rat> ztilde_dD(const Curve& c, int d, long degD) {
    if (d < 1)
        throw std::invalid_argument("ztilde_dD needs d >= 1");
    /* in y = q^{-s}: q^{s d degD} = y^{-d degD}, zeta(s+j) = Z_C(y/q^j) */
    RatFunc<Rat> out = RatFunc<Rat>::monomial(rat_pow(Rat(c.q), (long)(d * (long)d) * (c.genus - 1)),
                                              -(long)d * degD);
    out = out * (RatFunc<Rat>(Rat(1)) - RatFunc<Rat>::X());
    Rat f(1);
    for (int j = 1; j <= d; j++) {
        f /= Rat(c.q);
        out = out * zeta_eval(c, RatFunc<Rat>::monomial(f, 1));
    }
    return out;
}

Rat vol_gl(const Curve& c, int d) {
    if (d < 1)
        throw std::invalid_argument("vol_gl needs d >= 1");
    Rat qinv = Rat(1) / Rat(c.q);
    Rat out = rat_pow(Rat(c.q), (long)d * d * (c.genus - 1)) * zeta_star_at(c, qinv);
    Rat t = qinv;
    for (int j = 2; j <= d; j++) {
        t *= qinv;
        out *= zeta_at(c, t);
    }
    return out;
}

std::vector<Rat> series_coeffs_ZdD(const Curve& c, int d, long degD, size_t T) {
    /* y^{d degD} Z_{d,D}(s+d) = q^{d^2 degD} Z_C(y/q)...Z_C(y/q^d) is a
     * power series at y = 0; expand it and report its first T coefficients */
    RatFunc<Rat> f(rat_pow(Rat(c.q), (long)d * d * degD));
    Rat a(1);
    for (int j = 1; j <= d; j++) {
        a /= Rat(c.q);
        f = f * zeta_eval(c, RatFunc<Rat>::monomial(a, 1));
    }
    return f.series_expand(T);
}

}  // namespace orbint
