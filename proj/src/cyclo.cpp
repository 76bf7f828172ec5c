#include "orbint/cyclo.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace orbint {

unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; p++) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

namespace {

using RPoly = Poly<Rat>;

/* Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, computed recursively. */
RPoly cyclotomic_poly_impl(unsigned long N) {
    std::vector<Rat> xn(N + 1, Rat(0));
    xn[0] = Rat(-1);
    xn[N] = Rat(1);
    RPoly p{std::vector<Rat>(xn)};
    for (unsigned long d = 1; d < N; d++) {
        if (N % d != 0)
            continue;
        RPoly phid{std::vector<Rat>(cyclotomic_poly(d))};
        auto [q, r] = divmod(p, phid);
        if (!r.is_zero())
            throw std::logic_error("cyclotomic recursion left a remainder");
        p = q;
    }
    return p;
}

std::map<unsigned long, std::vector<Rat>> g_phi_cache;
std::recursive_mutex g_phi_mutex;

}  // namespace

const std::vector<Rat>& cyclotomic_poly(unsigned long N) {
    if (N == 0)
        throw std::domain_error("cyclotomic polynomial of order 0");
    std::lock_guard<std::recursive_mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(N);
    if (it != g_phi_cache.end())
        return it->second;
    RPoly p = cyclotomic_poly_impl(N);
    return g_phi_cache.emplace(N, p.c).first->second;
}

namespace {

/* reduce a polynomial in zeta_N modulo Phi_N, returning exactly phi(N)
 * power-basis coordinates */
std::vector<Rat> reduce_mod_phi(unsigned long N, std::vector<Rat> raw) {
    RPoly p{std::move(raw)};
    RPoly phi{std::vector<Rat>(cyclotomic_poly(N))};
    RPoly r = divmod(p, phi).second;
    std::vector<Rat> out(euler_phi(N), Rat(0));
    for (size_t i = 0; i < r.c.size(); i++)
        out[i] = r.c[i];
    return out;
}

}  // namespace

Cyclo::Cyclo(unsigned long N, std::vector<Rat> coeffs) : n_(N) {
    if (N == 0)
        throw std::domain_error("cyclotomic order must be positive");
    c_ = reduce_mod_phi(N, std::move(coeffs));
}

Cyclo Cyclo::root_of_unity(unsigned long N, long k) {
    if (N == 0)
        throw std::domain_error("cyclotomic order must be positive");
    long m = k % (long)N;
    if (m < 0)
        m += (long)N;
    std::vector<Rat> raw((size_t)m + 1, Rat(0));
    raw[(size_t)m] = Rat(1);
    return Cyclo(N, std::move(raw));
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); i++)
        if (c_[i] != 0)
            return false;
    return true;
}

Rat Cyclo::rational_part() const {
    if (!is_rational())
        throw std::domain_error("cyclotomic number is not rational: " + str());
    return c_[0];
}

Cyclo Cyclo::promoted(unsigned long M) const {
    if (M == n_)
        return *this;
    if (M % n_ != 0)
        throw std::domain_error("cyclotomic order promotion requires divisibility");
    unsigned long s = M / n_; /* zeta_{n_} = zeta_M^s */
    std::vector<Rat> raw(s * (c_.empty() ? 1 : c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); i++)
        raw[i * s] = c_[i];
    return Cyclo(M, std::move(raw));
}

Cyclo Cyclo::compressed() const {
    if (n_ != 1 && is_rational())
        return Cyclo(c_[0]);
    return *this;
}

namespace {

unsigned long lcm_ul(unsigned long a, unsigned long b) { return a / std::gcd(a, b) * b; }

}  // namespace

Cyclo operator+(const Cyclo& a, const Cyclo& b) {
    unsigned long L = lcm_ul(a.order(), b.order());
    Cyclo x = a.promoted(L), y = b.promoted(L);
    for (size_t i = 0; i < x.c_.size(); i++)
        x.c_[i] += y.c_[i];
    return x;
}

Cyclo operator-(const Cyclo& a, const Cyclo& b) {
    unsigned long L = lcm_ul(a.order(), b.order());
    Cyclo x = a.promoted(L), y = b.promoted(L);
    for (size_t i = 0; i < x.c_.size(); i++)
        x.c_[i] -= y.c_[i];
    return x;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
    unsigned long L = lcm_ul(a.order(), b.order());
    Cyclo x = a.promoted(L), y = b.promoted(L);
    std::vector<Rat> raw(2 * x.c_.size(), Rat(0));
    for (size_t i = 0; i < x.c_.size(); i++) {
        if (x.c_[i] == 0)
            continue;
        for (size_t j = 0; j < y.c_.size(); j++)
            raw[i + j] += x.c_[i] * y.c_[j];
    }
    return Cyclo(L, std::move(raw));
}

Cyclo Cyclo::inverse() const {
    if (is_zero())
        throw std::domain_error("inverse of cyclotomic zero");
    if (is_rational())
        return Cyclo(n_, {Rat(1) / c_[0]});
    /* extended Euclid in Q[x]: u * this + v * Phi_N = 1 */
    RPoly a{std::vector<Rat>(c_)};
    RPoly b{std::vector<Rat>(cyclotomic_poly(n_))};
    RPoly r0 = b, r1 = a;
    RPoly s0, s1{std::vector<Rat>{Rat(1)}}; /* coefficients of `this` */
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        RPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    /* r0 = gcd (a nonzero constant since Phi_N is irreducible) */
    if (r0.deg() != 0)
        throw std::logic_error("cyclotomic inverse: gcd with Phi_N not constant");
    Rat inv = Rat(1) / r0.c[0];
    std::vector<Rat> raw(s0.c.size(), Rat(0));
    for (size_t i = 0; i < s0.c.size(); i++)
        raw[i] = s0.c[i] * inv;
    return Cyclo(n_, std::move(raw));
}

Cyclo operator/(const Cyclo& a, const Cyclo& b) {
    unsigned long L = lcm_ul(a.order(), b.order());
    return a.promoted(L) * b.promoted(L).inverse();
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    unsigned long L = lcm_ul(a.order(), b.order());
    return a.promoted(L).coeffs() == b.promoted(L).coeffs();
}

std::string Cyclo::str() const {
    std::ostringstream os;
    if (is_rational())
        return c_[0].get_str();
    os << "(";
    bool first = true;
    for (size_t i = 0; i < c_.size(); i++) {
        if (c_[i] == 0)
            continue;
        if (!first)
            os << " + ";
        os << c_[i].get_str();
        if (i > 0)
            os << "*z" << n_ << "^" << i;
        first = false;
    }
    os << ")";
    return os.str();
}

}  // namespace orbint
