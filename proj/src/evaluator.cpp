#include "orbint/evaluator.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

namespace orbint {

namespace {

long factorial(int r) {
    long f = 1;
    for (int i = 2; i <= r; i++)
        f *= i;
    return f;
}

long gcd_mod(long e, long r) {
    long m = ((e % r) + r) % r;
    return std::gcd(m, r);
}

bool is_prime(long r) {
    if (r < 2)
        return false;
    for (long p = 2; p * p <= r; p++)
        if (r % p == 0)
            return false;
    return true;
}

RatFunc<Cyclo> to_cyclo(const RatFunc<Rat>& f) {
    auto lift = [](const Poly<Rat>& p) {
        std::vector<Cyclo> v;
        v.reserve(p.c.size());
        for (const auto& x : p.c)
            v.emplace_back(x);
        return Poly<Cyclo>(std::move(v));
    };
    return RatFunc<Cyclo>(lift(f.num), lift(f.den));
}

/* ---- truncated Laurent data at X = 1 (u = X - 1) ---------------------- */

using Ser = std::vector<Cyclo>; /* truncated power series in u */

Ser mul_trunc(const Ser& a, const Ser& b, size_t len) {
    size_t n = std::min(len, a.size() + b.size() - 1);
    Ser out(n, Cyclo(0));
    for (size_t i = 0; i < a.size() && i < n; i++) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < b.size() && i + j < n; j++)
            out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

/* a * (1 + u)^m truncated to len terms; m of either sign, via the
 * generalized binomial series (exact for integer m) */
Ser shifted_monomial(const Cyclo& a, long m, size_t len) {
    Ser out(len, Cyclo(0));
    Rat binom(1);
    for (size_t t = 0; t < len; t++) {
        out[t] = a * Cyclo(binom);
        binom *= rat(m - (long)t, (long)t + 1);
    }
    return out;
}

Ser poly_on_series(const Poly<Rat>& p, const Ser& y, size_t len) {
    Ser acc(1, Cyclo(0));
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = mul_trunc(acc, y, len);
        if (acc.size() < len)
            acc.resize(len, Cyclo(0));
        acc[0] = acc[0] + Cyclo(p.c[i]);
    }
    if (acc.size() < len)
        acc.resize(len, Cyclo(0));
    return acc;
}

/* f = sum_i c[i] u^{lead + i}; empty c means the zero function */
struct Laur {
    long lead = 0;
    Ser c;
};

/* expansion of f(a (1+u)^m) around u = 0 */
Laur expand_at(const RatFunc<Rat>& f, const Cyclo& a, long m, size_t len) {
    Ser y = shifted_monomial(a, m, len);
    Ser ns = poly_on_series(f.num, y, len);
    Ser ds = poly_on_series(f.den, y, len);
    size_t vn = 0, vd = 0;
    while (vn < ns.size() && ns[vn].is_zero())
        vn++;
    while (vd < ds.size() && ds[vd].is_zero())
        vd++;
    if (vd == ds.size())
        throw std::logic_error("denominator series vanished to full precision");
    if (vn == ns.size())
        return Laur{};
    size_t k = len - std::max(vn, vd);
    Laur out;
    out.lead = (long)vn - (long)vd;
    out.c.assign(k, Cyclo(0));
    Cyclo inv = Cyclo(1) / ds[vd];
    for (size_t t = 0; t < k; t++) {
        Cyclo acc = ns[vn + t];
        for (size_t s = 1; s <= t; s++)
            acc = acc - ds[vd + s] * out.c[t - s];
        out.c[t] = acc * inv;
    }
    return out;
}

/* the common core of psi_at_one / psi_tail_at_one: the value at X = 1 of
 *   (1/(r r!)) sum_k sum_w zeta_r^{-ke} prod_j phihat(zeta_r^{kj} X^{d s_j})
 * with k restricted as requested; phihat normalization throughout */
Cyclo psi_sum_value(const IntegralQuery& query, const GenericDirection& dir, bool include_k0) {
    int n = query.n, d = query.d;
    if (n < 1 || d < 1 || n % d != 0)
        throw std::invalid_argument("block count must divide the rank");
    int r = n / d;
    if (r == 1)
        return include_k0 ? Cyclo(1) : Cyclo(0);
    if ((int)dir.b.size() != r || !direction_admissible(dir.b))
        throw std::domain_error("degenerate direction");

    RatFunc<Rat> fac = phi_of_y(query.curve, d, query.degD);
    size_t len = (size_t)r + 10;

    /* The factor at position j of a permuted product depends only on j and
     * on the prefix sum s_j, i.e. on the SET of direction entries consumed
     * so far.  Summing over permutations therefore collapses to a dynamic
     * program over subsets (chains of prefix sets), replacing r! * r series
     * multiplications by r * 2^r.  Series live in the fixed exponent window
     * [lo, hi]: each factor has pole order <= 1 at X = 1, so a product of
     * at most r-1 of them never drops below u^{-(r-1)}; an intermediate
     * term above u^{r-1} can never be pulled back to u^0 by the remaining
     * factors, whose valuations total at least -(r-1). */
    const long lo = -(long)(r - 1), hi = std::max<long>(2, (long)r - 1);
    const size_t W = (size_t)(hi - lo + 1);
    using Win = std::vector<Cyclo>; /* coefficient of u^{lo + i} at index i */
    auto win_mul = [&](const Win& a, const Win& b) {
        Win out(W, Cyclo(0));
        for (size_t i = 0; i < W; i++) {
            if (a[i].is_zero())
                continue;
            /* absolute exponents: (lo + i) + (lo + j) = lo + (i + j + lo);
             * indices outside [0, W) are below or above the window */
            for (size_t j = 0; j < W && (long)(i + j) + lo < (long)W; j++) {
                long idx = (long)(i + j) + lo;
                if (idx >= 0)
                    out[(size_t)idx] = out[(size_t)idx] + a[i] * b[j];
            }
        }
        return out;
    };

    std::map<std::pair<long, long>, Win> cache;
    auto factor = [&](long kj, long m) -> const Win& {
        auto key = std::make_pair(kj % r, m);
        auto it = cache.find(key);
        if (it == cache.end()) {
            Cyclo a = Cyclo::root_of_unity((unsigned long)r, key.first);
            Laur f = expand_at(fac, a, m, len);
            Win w(W, Cyclo(0));
            for (size_t i = 0; i < f.c.size(); i++) {
                long ex = f.lead + (long)i;
                if (ex >= lo && ex <= hi)
                    w[(size_t)(ex - lo)] = f.c[i];
            }
            it = cache.emplace(key, std::move(w)).first;
        }
        return it->second;
    };

    /* subset sums of the direction entries */
    std::vector<long> ssum(1ul << r, 0);
    for (unsigned long mask = 1; mask < (1ul << r); mask++) {
        unsigned long low = mask & (~mask + 1);
        size_t bit = 0;
        while (!(low & (1ul << bit)))
            bit++;
        ssum[mask] = ssum[mask ^ low] + dir.b[bit];
        if (ssum[mask] == 0 && mask + 1 < (1ul << r))
            throw std::domain_error("degenerate direction: vanishing partial sum");
    }

    Win acc(W, Cyclo(0));
    std::vector<Win> g(1ul << r);
    for (long k = include_k0 ? 0 : 1; k < r; k++) {
        Cyclo weight = Cyclo::root_of_unity((unsigned long)r, -(k * query.e % r));
        for (auto& w : g)
            w.clear();
        g[0] = Win(W, Cyclo(0));
        g[0][(size_t)-lo] = Cyclo(1); /* the empty product, u^0 */
        /* numeric order visits every proper subset before its supersets */
        Win total(W, Cyclo(0));
        for (unsigned long mask = 1; mask + 1 < (1ul << r); mask++) {
            int j = std::popcount(mask);
            Win prev(W, Cyclo(0));
            for (size_t i = 0; i < (size_t)r; i++)
                if ((mask & (1ul << i)) && !g[mask ^ (1ul << i)].empty())
                    for (size_t t = 0; t < W; t++)
                        prev[t] = prev[t] + g[mask ^ (1ul << i)][t];
            g[mask] = win_mul(prev, factor(k * j, (long)d * ssum[mask]));
            if (j == r - 1)
                for (size_t t = 0; t < W; t++)
                    total[t] = total[t] + g[mask][t];
        }
        for (size_t t = 0; t < W; t++)
            acc[t] = acc[t] + weight * total[t];
    }

    for (long ex = lo; ex < 0; ex++)
        if (!acc[(size_t)(ex - lo)].is_zero()) {
            long worst = ex;
            throw PoleAtOne((int)-worst);
        }
    return acc[(size_t)-lo] * Cyclo(rat(1, (long)r * factorial(r)));
}

}  // namespace

bool direction_admissible(const std::vector<long>& b) {
    size_t r = b.size();
    if (r == 0 || r > 62)
        return false;
    long total = 0;
    for (long x : b)
        total += x;
    if (total != 0)
        return false;
    for (unsigned long mask = 1; mask + 1 < (1ul << r); mask++) {
        long s = 0;
        for (size_t i = 0; i < r; i++)
            if (mask & (1ul << i))
                s += b[i];
        if (s == 0)
            return false;
    }
    return true;
}

GenericDirection default_direction(int r, unsigned salt) {
    if (r < 1)
        throw std::invalid_argument("rank must be positive");
    for (;; salt++) {
        long base = r + 1 + (long)salt;
        std::vector<long> b(r);
        long sum = 0, pw = 1;
        for (int i = 0; i < r; i++) {
            b[(size_t)i] = r * pw;
            sum += pw;
            pw *= base;
        }
        for (int i = 0; i < r; i++)
            b[(size_t)i] -= sum;
        if (r == 1)
            b[0] = 0;
        if (r == 1 || direction_admissible(b))
            return GenericDirection{std::move(b), salt};
    }
}

RatFunc<Rat> phi_of_y(const Curve& c, int d, long degD) {
    if (d < 1)
        throw std::invalid_argument("block size must be positive");
    Rat scale = rat_pow(Rat(c.q), (long)d * d * (c.genus - 1));
    return RatFunc<Rat>(Rat(scale)) * z_dD(c, d, degD, Rat(1), 1);
}

RatFunc<Cyclo> phi_P_line(const Curve& c, int n, int d, long degD, const std::vector<int>& w,
                          long k, const GenericDirection& dir) {
    if (n < 1 || d < 1 || n % d != 0)
        throw std::invalid_argument("block count must divide the rank");
    int r = n / d;
    if ((int)w.size() != r || (int)dir.b.size() != r)
        throw std::invalid_argument("permutation and direction must have length r");
    RatFunc<Cyclo> fac = to_cyclo(phi_of_y(c, d, degD));
    RatFunc<Cyclo> out(Cyclo(1));
    long s = 0;
    for (int j = 1; j <= r - 1; j++) {
        s += dir.b[(size_t)w[(size_t)(j - 1)]];
        if (s == 0)
            throw std::domain_error("degenerate direction: vanishing partial sum");
        Cyclo a = Cyclo::root_of_unity((unsigned long)r, k * j % r);
        out = out * fac.subst_monomial(a, (long)d * s);
    }
    return out;
}

Rat psi_at_one(const IntegralQuery& query, const GenericDirection& dir) {
    Cyclo v = psi_sum_value(query, dir, true);
    if (!v.is_rational())
        throw std::logic_error("nonrational limit: " + v.str());
    int r = query.n / query.d;
    /* drop the per-factor constant q^{d^2(g-1)} carried by phihat */
    Rat norm = rat_pow(Rat(query.curve.q), (long)(r - 1) * query.d * query.d * (query.curve.genus - 1));
    return v.rational_part() / norm;
}

Rat psi_tail_at_one(const IntegralQuery& query, const GenericDirection& dir) {
    Cyclo v = psi_sum_value(query, dir, false);
    if (!v.is_rational())
        throw std::logic_error("nonrational limit: " + v.str());
    return v.rational_part();
}

Rat prime_r_oracle(const IntegralQuery& query) {
    if (query.n < 1 || query.d < 1 || query.n % query.d != 0)
        throw std::invalid_argument("block count must divide the rank");
    long r = query.n / query.d;
    if (!is_prime(r))
        throw std::invalid_argument("closed form needs a prime quotient rank");
    if (gcd_mod(query.e, r) != 1)
        throw std::invalid_argument("degree must be coprime to the quotient rank");
    RatFunc<Cyclo> fac = to_cyclo(phi_of_y(query.curve, query.d, query.degD));
    Cyclo prod(1);
    for (long j = 1; j < r; j++)
        prod = prod * fac.eval(Cyclo::root_of_unity((unsigned long)r, j));
    Cyclo out = Cyclo(rat(-1, r)) * prod;
    if (!out.is_rational())
        throw std::logic_error("root-of-unity product failed to be rational");
    return out.rational_part();
}

IntegralResult integral_value(const IntegralQuery& query) {
    return integral_value(query, default_direction(query.n / query.d));
}

IntegralResult integral_value(const IntegralQuery& query, const GenericDirection& dir) {
    if (query.n < 1 || query.d < 1 || query.n % query.d != 0)
        throw std::invalid_argument("block count must divide the rank");
    long r = query.n / query.d;
    if (gcd_mod(query.e, r) != 1)
        throw std::invalid_argument("degree must be coprime to the quotient rank");
    IntegralResult out;
    out.direction_used = dir;
    out.psi = psi_at_one(query, dir);
    const Curve& c = query.curve;
    Rat qinv = rat(1, c.q);
    out.volume_factor = zeta_star_at(c, qinv);
    Rat t = qinv;
    for (int j = 2; j <= query.d; j++) {
        t *= qinv;
        out.volume_factor *= zeta_at(c, t);
    }
    /* exponent in half-units of q */
    long half = (long)query.n * (query.n - query.d) * query.degD +
                2l * query.n * query.d * (c.genus - 1);
    if (half % 2 == 0)
        out.q_power = RadExt(rat_pow(Rat(c.q), half / 2));
    else
        out.q_power = RadExt::sqrt_term(rat_pow(Rat(c.q), (half - 1) / 2), Int(c.q));
    out.value = out.q_power * RadExt(out.volume_factor * out.psi);
    return out;
}

Rat siegel_value(const Curve& c, int n) {
    if (n < 1)
        throw std::invalid_argument("rank must be positive");
    Rat qinv = rat(1, c.q);
    Rat out = rat_pow(Rat(c.q), (long)n * n * (c.genus - 1)) * zeta_star_at(c, qinv);
    Rat t = qinv;
    for (int j = 2; j <= n; j++) {
        t *= qinv;
        out *= zeta_at(c, t);
    }
    return out;
}

bool series_vs_closed_check(const Curve& c, long degD, int n, int d, const Parabolic& p,
                            const Vec& xi, long box, size_t order, std::string* why) {
    if (n < 1 || d < 1 || n % d != 0)
        throw std::invalid_argument("block count must divide the rank");
    int r = n / d;
    if ((int)p.n() != r || xi.size() != (size_t)r)
        throw std::invalid_argument("parabolic and offset must live in the quotient rank");
    if (r == 1)
        return true;

    Parabolic p0 = borel(r), g = full_group(r);
    RootSets rs0 = root_sets(p0, g);
    int rank = r - 1;

    /* coordinate i is interior when the i-th simple root stays inside a
     * block of p (then the cumulative zeta coefficients bound it below);
     * otherwise it is constrained only through the dual-weight cone, which
     * gives a certified bound only in rank one */
    std::vector<bool> interior(rank);
    int boundary = 0;
    for (int i = 0; i < rank; i++) {
        interior[(size_t)i] = p.block_of(i) == p.block_of(i + 1);
        if (!interior[(size_t)i])
            boundary++;
    }
    if (boundary > 0 && rank > 1)
        throw std::invalid_argument(
            "no certified enumeration bound for a cone constraint above rank one");

    RootSets rsp = root_sets(p, g);

    /* per-coordinate lower bounds on the series support */
    std::vector<long> low(rank);
    for (int i = 0; i < rank; i++) {
        if (interior[(size_t)i]) {
            low[(size_t)i] = -(long)d * degD;
        } else {
            /* rank one: <h w^vee / d - xi, w> > 0 with <w^vee, w> > 0 */
            const Vec& w = rsp.duals[0];
            Rat a = dot(rs0.duals[(size_t)i], w);
            if (!(a > 0))
                throw std::logic_error("dual pairing must be positive");
            low[(size_t)i] = (long)rat_floor(Rat(d) * dot(xi, w) / a).get_si() + 1;
        }
        if (low[(size_t)i] < -box || low[(size_t)i] > box)
            throw std::invalid_argument("box too small: support bound outside the box");
    }

    DualTriplet trip = dual_triplet(p0);
    long cb = trip.b; /* line weights, all equal to b, keep the scaled context integral */

    /* completeness: any support point outside the box has some h_i > box,
     * so its exponent is at least cb (box+1) + cb * sum of the other lows */
    long lowsum = 0;
    for (long l : low)
        lowsum += l;
    long emin = cb * lowsum;
    long ecap = cb * (box + 1 - low[0]) + emin - 1;
    for (int i = 1; i < rank; i++)
        ecap = std::min(ecap, cb * (box + 1 - low[(size_t)i]) + emin - 1);
    long emax = emin + (long)order - 1;
    if (emax > ecap)
        throw std::invalid_argument("box too small for the requested comparison order");

    /* cumulative coefficient sums of Ztilde_{d,D}: B(m) = sum_{i<=m} zt_i */
    RatFunc<Rat> zt = ztilde_dD(c, d, degD);
    long sigma = std::max(0l, (long)d * degD);
    RatFunc<Rat> zshift = zt * RatFunc<Rat>::monomial(Rat(1), sigma);
    std::vector<Rat> ztc = zshift.series_expand((size_t)(box + sigma + 1));
    std::vector<Rat> cum(ztc.size());
    Rat run(0);
    for (size_t i = 0; i < ztc.size(); i++) {
        run += ztc[i];
        cum[i] = run;
    }
    auto bracket = [&](long m) -> Rat {
        long idx = m + sigma;
        if (idx < 0)
            return Rat(0);
        if (idx >= (long)cum.size())
            throw std::logic_error("cumulative table too short");
        return cum[(size_t)idx];
    };

    /* series side: coefficients of X^e for e in [emin, emax] */
    std::map<long, Rat> lhs;
    std::vector<long> h((size_t)rank, -box);
    for (;;) {
        long e = 0;
        for (int i = 0; i < rank; i++)
            e += cb * h[(size_t)i];
        if (e >= emin && e <= emax) {
            Vec v = vec_zero((size_t)r);
            for (int i = 0; i < rank; i++)
                v = v + Rat(h[(size_t)i]) * rs0.duals[(size_t)i];
            Vec arg = rat(1, d) * v - xi;
            for (const auto& w : rsp.duals)
                if (dot(arg, w) == 0)
                    throw std::invalid_argument("offset lies on a wall of the cone");
            if (tau_hat(p, g, arg)) {
                Rat coef(1);
                for (int i = 0; i < rank; i++)
                    if (interior[(size_t)i])
                        coef *= bracket(h[(size_t)i]);
                if (coef != 0)
                    lhs[e] = (lhs.count(e) ? lhs[e] : Rat(0)) + coef;
            }
        }
        int i = 0;
        for (; i < rank; i++) {
            if (++h[(size_t)i] <= box)
                break;
            h[(size_t)i] = -box;
        }
        if (i == rank)
            break;
    }

    /* closed side along the same line */
    Vec mu = vec_zero((size_t)r);
    for (int i = 0; i < rank; i++)
        mu = mu + Rat(cb) * rs0.roots[(size_t)i];
    RatFunc<Cyclo> ztcy = to_cyclo(zt);
    Vec bdxi = Rat(trip.b * d) * xi;
    RatFunc<Cyclo> closed(Cyclo(0));
    for (const auto& nu : trip.reps) {
        LineCtx ctx;
        ctx.q = c.q;
        ctx.base = vec_zero((size_t)r);
        ctx.dir = mu;
        ctx.unit = Rat(1);
        ctx.phase = nu;
        RatFunc<Cyclo> term = vartheta_hat(p0, p, ctx);
        for (int i = 0; i < rank; i++)
            if (interior[(size_t)i])
                term = term * ctx.compose(ztcy, rs0.duals[(size_t)i]);
        term = term * vartheta(p, g, bdxi, ctx.scaled(trip.b));
        closed = closed + term;
    }
    closed = closed * RatFunc<Cyclo>(Cyclo(rat(1, (long)trip.reps.size())));

    /* align: multiply by X^shift so both sides are Taylor at 0 */
    long denord = 0;
    while (denord < (long)closed.den.c.size() && closed.den.at((size_t)denord) == Cyclo(0))
        denord++;
    long shift = std::max(std::max(0l, -emin), denord);
    RatFunc<Cyclo> aligned = closed * RatFunc<Cyclo>::monomial(Cyclo(1), shift);
    if (aligned.den.at(0) == Cyclo(0)) {
        if (why)
            *why = "closed form has a lower-order term than the series window";
        return false;
    }
    std::vector<Cyclo> rhs = aligned.series_expand((size_t)(emax + shift + 1));
    for (long e = -shift; e <= emax; e++) {
        Cyclo want = e < emin ? Cyclo(0)
                              : Cyclo(lhs.count(e) ? lhs[e] : Rat(0));
        if (!(rhs[(size_t)(e + shift)] == want)) {
            if (why)
                *why = "coefficient mismatch at exponent " + std::to_string(e) + ": series " +
                       want.str() + " vs closed " + rhs[(size_t)(e + shift)].str();
            return false;
        }
    }
    return true;
}

}  // namespace orbint
