#pragma once

/* The rational-function calculus on parabolic chains: theta functions and
 * their alternating sums c_P^Q, the tilde projectors, the combinatorial
 * Gamma functions, and the q-periodic vartheta variants together with the
 * dual triplets and averaged operators c_{P,N}^{G,xi}.
 *
 * Two exact value domains are used.  Point evaluations of theta live in
 * RadExt (covolumes are square roots).  The periodic functions are
 * characters lambda -> q^{-<lambda,w>}; they are evaluated through a
 * "character context": PointCtx maps a weight vector w to an exact
 * cyclotomic number (integer q-power times a root of unity coming from
 * imaginary shifts), LineCtx maps it to a monomial in Y = q^{-unit*u}
 * along the line lambda(u) = base + u*dir, so that whole identities can
 * be compared as reduced univariate rational functions over Q(zeta).
 */

#include "orbint/cyclo.hpp"
#include "orbint/radical.hpp"
#include "orbint/rootdata.hpp"

#include <functional>
#include <vector>

namespace orbint {

/* component of v in a_T^Q: subtract the blockwise averages */
inline Vec inner_project(const Vec& v, const Parabolic& q) { return v - project_levi(v, q); }

/* theta_P^Q(lambda) = v_P^Q / prod_{alpha} <lambda, alpha^vee> where v_P^Q
 * is the covolume of the lattice spanned by the simple roots of (P,Q);
 * theta_hat uses the dual (weight) basis and its covolume.  Throws
 * std::domain_error when a pairing vanishes. */
RadExt theta(const Parabolic& p, const Parabolic& q, const Vec& lambda);
RadExt theta_hat(const Parabolic& p, const Parabolic& q, const Vec& lambda);

/* both alternating orthogonality sums over P c R c Q equal delta_{P,Q} */
bool theta_orthogonality_check(const Parabolic& p, const Parabolic& q, const Vec& lambda);

using ScalarFn = std::function<RadExt(const Vec&)>;

/* c_P^Q(phi, lambda) = sum_{P c R c Q} (-1)^{dim a_R^Q}
 *     theta_hat_P^R(lambda) phi(lambda^R) theta_R^Q(lambda),
 * with lambda^R the component of lambda in a_T^R */
RadExt c_fn(const Parabolic& p, const Parabolic& q, const ScalarFn& phi, const Vec& lambda);

/* the skew projector onto a_T^Q relative to P c Q:
 * lambda~^{Q/P} = lambda^P + sum_{alpha in Delta_P^Q} <lambda, w_alpha^vee> alpha
 * with (w_alpha^vee) the basis of a_P^G dual to Delta_P^G */
Vec tilde_lambda(const Parabolic& q, const Parabolic& p, const Vec& lambda);

/* c~^{Q/P}(phi,lambda) = theta_hat_P^Q(lambda~^{Q/P}) *
 *     sum_{P c R c Q} (-1)^{dim a_R^Q} phi(lambda~^{R/P}) */
RadExt tilde_c(const Parabolic& q, const Parabolic& p, const ScalarFn& phi, const Vec& lambda);

/* Gamma_P^Q(H, X, xi) = sum_{R, P c R c Q} (-1)^{dim a_R^Q}
 *     tau_P^R(H - X) tau_hat_R^Q(H - xi)  (an integer-valued function) */
int gamma_fn(const Parabolic& p, const Parabolic& q, const Vec& h, const Vec& x, const Vec& xi);
/* Gamma'_Q(H, T) = Gamma_Q^G(H, 0, T); identically 1 for Q = G */
int gamma_prime(const Parabolic& q, const Vec& h, const Vec& t);

/* e^{-2 pi i turns} as an exact root of unity */
Cyclo unit_phase(const Rat& turns);

/* character context: exact evaluation at a rational point lambda, with an
 * optional imaginary shift nu = (2 pi i / log q) * phase */
struct PointCtx {
    long q = 2;
    Vec lambda;
    Vec phase;

    using Value = Cyclo;
    Value one() const { return Cyclo(1); }
    Value constant(const Rat& r) const { return Cyclo(r); }
    /* q^{-<lambda,w>} e^{-2 pi i <phase,w>}; <lambda,w> must be integral */
    Value chr(const Vec& w) const;
    /* univariate f evaluated at chr(w) */
    Value compose(const RatFunc<Cyclo>& f, const Vec& w) const;
    PointCtx shifted(const Vec& v) const;
    PointCtx scaled(long b) const; /* argument (lambda + nu)/b */
};

/* character context along the line lambda(u) = base + u*dir with formal
 * variable Y = q^{-unit*u}: chr(w) is the monomial
 * q^{-<base,w>} e^{-2 pi i <phase,w>} Y^{<dir,w>/unit} */
struct LineCtx {
    long q = 2;
    Vec base;
    Vec dir;
    Rat unit = Rat(1);
    Vec phase;

    using Value = RatFunc<Cyclo>;
    Value one() const { return Value(Cyclo(1)); }
    Value constant(const Rat& r) const { return Value(Cyclo(r)); }
    Cyclo coeff_of(const Vec& w) const;
    long yexp_of(const Vec& w) const;
    Value chr(const Vec& w) const;
    Value compose(const RatFunc<Cyclo>& f, const Vec& w) const;
    LineCtx shifted(const Vec& v) const;
    LineCtx scaled(long b) const;
};

/* vartheta_P^{Q,xi}(lambda) = q^{-<lambda,[xi]_P^Q>} prod_alpha
 *     1/(1 - q^{-<lambda,alpha^vee>}), through a character context */
template <class Ctx>
typename Ctx::Value vartheta(const Parabolic& p, const Parabolic& q, const Vec& xi,
                             const Ctx& ctx) {
    typename Ctx::Value out = ctx.chr(xi_bracket(xi, p, q));
    for (const auto& r : root_sets(p, q).roots)
        out = out / (ctx.one() - ctx.chr(r));
    return out;
}

/* vartheta_hat_P^Q(lambda) = prod_{w^vee} 1/(1 - q^{-<lambda,w^vee>}) */
template <class Ctx>
typename Ctx::Value vartheta_hat(const Parabolic& p, const Parabolic& q, const Ctx& ctx) {
    typename Ctx::Value out = ctx.one();
    for (const auto& d : root_sets(p, q).duals)
        out = out / (ctx.one() - ctx.chr(d));
    return out;
}

/* dual triplet (N, b, b'): coset representatives of Z(Delta_P)/b'Z(Delta_P)
 * (as the rational vectors v with nu = (2 pi i / log q) v), where b and b'
 * satisfy the lattice sandwich
 *   Z(hat-duals(P,G)) c Z(hat-duals(P,R)) + (1/b) Z(roots(R,G))
 *                     c (1/b') Z(hat-duals(P,G))
 * for every member P of P(M) and every R containing it */
struct DualTriplet {
    std::vector<Vec> reps;
    long b = 1;
    long bprime = 1;
};

/* do the lattice inclusions hold for these (b, b')? */
bool triplet_inclusions_hold(const Parabolic& p, long b, long bprime);
/* smallest (b, then b') found by search, with the full coset set */
DualTriplet dual_triplet(const Parabolic& p);
/* a valid (not necessarily minimal) triplet with the given multipliers */
DualTriplet make_triplet(const Parabolic& p, long b, long bprime);
/* (1/|N|) sum_nu q^{-<nu,H>} as an exact cyclotomic number */
Cyclo triplet_average(const DualTriplet& t, const Vec& h);

/* phi in the product form phi(lambda) = prod_alpha f_alpha(q^{-<lambda,w_alpha^vee>}),
 * one univariate factor per element of Delta_P (in root_sets order) */
struct ProductPhi {
    Parabolic p;
    std::vector<RatFunc<Cyclo>> factors;
};

/* phi(lambda^R) through a character context (inner projection is moved
 * onto the weight vectors by self-adjointness) */
template <class Ctx>
typename Ctx::Value phi_at(const ProductPhi& phi, const Parabolic& r, const Ctx& ctx) {
    RootSets rs = root_sets(phi.p, full_group(phi.p.n()));
    typename Ctx::Value out = ctx.one();
    for (size_t i = 0; i < rs.duals.size(); i++)
        out = out * ctx.compose(phi.factors[i], inner_project(rs.duals[i], r));
    return out;
}

/* c_{P,N}^{G,xi}(phi, lambda) = (1/|N|) sum_nu sum_{P c R c G}
 *   (-1)^{dim a_R^G} vartheta_hat_P^R(lambda+nu) phi((lambda+nu)^R)
 *   vartheta_R^{G, b xi}((lambda+nu)/b) */
template <class Ctx>
typename Ctx::Value c_xi_fn(const ProductPhi& phi, const Vec& xi, const DualTriplet& t,
                            const Ctx& ctx) {
    Parabolic g = full_group(phi.p.n());
    Vec bxi = Rat(t.b) * xi;
    typename Ctx::Value total = ctx.constant(Rat(0));
    for (const auto& rep : t.reps) {
        Ctx at = ctx.shifted(rep);
        Ctx at_b = at.scaled(t.b);
        for (const auto& r : parabolics_containing(phi.p)) {
            typename Ctx::Value term =
                vartheta_hat(phi.p, r, at) * phi_at(phi, r, at) * vartheta(r, g, bxi, at_b);
            if (((int)r.nblocks() - 1) % 2 == 0)
                total = total + term;
            else
                total = total - term;
        }
    }
    return total * ctx.constant(rat(1, (long)t.reps.size()));
}

}  // namespace orbint
