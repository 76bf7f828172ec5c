#include "orbint/arthur.hpp"

#include <stdexcept>

namespace orbint {

namespace {

int sign_dim(const Parabolic& inner, const Parabolic& outer) {
    /* (-1)^{dim a_inner^outer} */
    return ((int)inner.nblocks() - (int)outer.nblocks()) % 2 == 0 ? 1 : -1;
}

Rat pairing_product(const std::vector<Vec>& ws, const Vec& lambda) {
    Rat prod(1);
    for (const auto& w : ws) {
        Rat x = dot(lambda, w);
        if (x == 0)
            throw std::domain_error("theta evaluated on a singular hyperplane");
        prod *= x;
    }
    return prod;
}

}  // namespace

RadExt theta(const Parabolic& p, const Parabolic& q, const Vec& lambda) {
    RootSets rs = root_sets(p, q);
    return covolume(rs.roots) / RadExt(pairing_product(rs.roots, lambda));
}

RadExt theta_hat(const Parabolic& p, const Parabolic& q, const Vec& lambda) {
    RootSets rs = root_sets(p, q);
    return covolume(rs.duals) / RadExt(pairing_product(rs.duals, lambda));
}

bool theta_orthogonality_check(const Parabolic& p, const Parabolic& q, const Vec& lambda) {
    RadExt sum1, sum2;
    for (const auto& r : parabolics_between(p, q)) {
        RadExt t1 = theta_hat(p, r, lambda) * theta(r, q, lambda);
        RadExt t2 = theta(p, r, lambda) * theta_hat(r, q, lambda);
        if (sign_dim(p, r) > 0) {
            sum1 = sum1 + t1;
            sum2 = sum2 + t2;
        } else {
            sum1 = sum1 - t1;
            sum2 = sum2 - t2;
        }
    }
    RadExt expect(p == q ? 1 : 0);
    return sum1 == expect && sum2 == expect;
}

RadExt c_fn(const Parabolic& p, const Parabolic& q, const ScalarFn& phi, const Vec& lambda) {
    RadExt total;
    for (const auto& r : parabolics_between(p, q)) {
        RadExt term = theta_hat(p, r, lambda) * phi(inner_project(lambda, r)) * theta(r, q, lambda);
        total = sign_dim(r, q) > 0 ? total + term : total - term;
    }
    return total;
}

Vec tilde_lambda(const Parabolic& q, const Parabolic& p, const Vec& lambda) {
    if (!contained_in(p, q))
        throw std::invalid_argument("tilde_lambda: P not contained in Q");
    RootSets g = root_sets(p, full_group(p.n()));
    Vec out = inner_project(lambda, p);
    /* the elements of Delta_P^Q are the adjacent-block roots of P that stay
     * inside one Q-block; they sit at known indices of the (P,G) root list */
    size_t i = 0;
    for (size_t a = 0; a + 1 < p.nblocks(); a++, i++) {
        bool same_qblock = q.block_of(p.blocks[a][0]) == q.block_of(p.blocks[a + 1][0]);
        if (same_qblock)
            out = out + dot(lambda, g.duals[i]) * g.roots[i];
    }
    return out;
}

RadExt tilde_c(const Parabolic& q, const Parabolic& p, const ScalarFn& phi, const Vec& lambda) {
    RadExt sum;
    for (const auto& r : parabolics_between(p, q)) {
        RadExt term = phi(tilde_lambda(r, p, lambda));
        sum = sign_dim(r, q) > 0 ? sum + term : sum - term;
    }
    return theta_hat(p, q, tilde_lambda(q, p, lambda)) * sum;
}

int gamma_fn(const Parabolic& p, const Parabolic& q, const Vec& h, const Vec& x, const Vec& xi) {
    int total = 0;
    Vec hx = h - x, hxi = h - xi;
    for (const auto& r : parabolics_between(p, q))
        if (tau(p, r, hx) && tau_hat(r, q, hxi))
            total += sign_dim(r, q);
    return total;
}

int gamma_prime(const Parabolic& q, const Vec& h, const Vec& t) {
    return gamma_fn(q, full_group(q.n()), h, vec_zero(h.size()), t);
}

Cyclo unit_phase(const Rat& turns) {
    Int den = turns.get_den();
    Int num = turns.get_num();
    if (!den.fits_ulong_p() || !num.fits_slong_p())
        throw std::overflow_error("phase denominator too large");
    return Cyclo::root_of_unity(den.get_ui(), -num.get_si());
}

Cyclo PointCtx::chr(const Vec& w) const {
    Cyclo out(rat_pow(Rat(q), -rat_to_long(dot(lambda, w))));
    if (!phase.empty())
        out = out * unit_phase(dot(phase, w));
    return out;
}

Cyclo PointCtx::compose(const RatFunc<Cyclo>& f, const Vec& w) const { return f.eval(chr(w)); }

PointCtx PointCtx::shifted(const Vec& v) const {
    PointCtx out = *this;
    out.phase = phase.empty() ? v : phase + v;
    return out;
}

PointCtx PointCtx::scaled(long b) const {
    PointCtx out = *this;
    Rat inv = rat(1, b);
    out.lambda = inv * lambda;
    if (!phase.empty())
        out.phase = inv * phase;
    return out;
}

Cyclo LineCtx::coeff_of(const Vec& w) const {
    Cyclo out(rat_pow(Rat(q), -rat_to_long(dot(base, w))));
    if (!phase.empty())
        out = out * unit_phase(dot(phase, w));
    return out;
}

long LineCtx::yexp_of(const Vec& w) const { return rat_to_long(dot(dir, w) / unit); }

RatFunc<Cyclo> LineCtx::chr(const Vec& w) const {
    return RatFunc<Cyclo>::monomial(coeff_of(w), yexp_of(w));
}

RatFunc<Cyclo> LineCtx::compose(const RatFunc<Cyclo>& f, const Vec& w) const {
    return f.subst_monomial(coeff_of(w), yexp_of(w));
}

LineCtx LineCtx::shifted(const Vec& v) const {
    LineCtx out = *this;
    out.phase = phase.empty() ? v : phase + v;
    return out;
}

LineCtx LineCtx::scaled(long b) const {
    LineCtx out = *this;
    Rat inv = rat(1, b);
    out.base = inv * base;
    out.dir = inv * dir;
    if (!phase.empty())
        out.phase = inv * phase;
    return out;
}

bool triplet_inclusions_hold(const Parabolic& p, long b, long bprime) {
    Parabolic g = full_group(p.n());
    for (const auto& member : parabolics_with_levi(levi_of(p))) {
        RootSets big = root_sets(member, g);
        for (const auto& r : parabolics_containing(member)) {
            RootSets lo = root_sets(member, r), hi = root_sets(r, g);
            std::vector<Vec> mid = lo.duals;
            for (const auto& rt : hi.roots)
                mid.push_back(rat(1, b) * rt);
            /* Z(hat-duals(P,G)) inside the middle lattice */
            for (const auto& d : big.duals)
                if (!mid.empty() && !in_lattice(mid, d))
                    return false;
            /* middle lattice inside (1/b') Z(hat-duals(P,G)) */
            for (const auto& m : mid)
                if (!in_lattice(big.duals, Rat(bprime) * m))
                    return false;
        }
    }
    return true;
}

DualTriplet make_triplet(const Parabolic& p, long b, long bprime) {
    if (!triplet_inclusions_hold(p, b, bprime))
        throw std::invalid_argument("lattice inclusions fail for these multipliers");
    DualTriplet t;
    t.b = b;
    t.bprime = bprime;
    RootSets rs = root_sets(p, full_group(p.n()));
    size_t k = rs.roots.size();
    /* all sum_alpha c_alpha alpha with c in {0..b'-1}^k */
    std::vector<long> c(k, 0);
    for (;;) {
        Vec v = vec_zero((size_t)p.n());
        for (size_t i = 0; i < k; i++)
            v = v + Rat(c[i]) * rs.roots[i];
        t.reps.push_back(std::move(v));
        size_t i = 0;
        for (; i < k; i++) {
            if (++c[i] < bprime)
                break;
            c[i] = 0;
        }
        if (i == k)
            break;
    }
    return t;
}

DualTriplet dual_triplet(const Parabolic& p) {
    const long bound = 64;
    for (long b = 1; b <= bound; b++)
        for (long bprime = 1; bprime <= bound; bprime++)
            if (triplet_inclusions_hold(p, b, bprime))
                return make_triplet(p, b, bprime);
    throw std::logic_error("no dual triplet found within the search bound");
}

Cyclo triplet_average(const DualTriplet& t, const Vec& h) {
    Cyclo sum(0);
    for (const auto& rep : t.reps)
        sum = sum + unit_phase(dot(rep, h));
    return sum * Cyclo(rat(1, (long)t.reps.size()));
}

}  // namespace orbint
