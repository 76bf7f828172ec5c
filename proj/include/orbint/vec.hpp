#pragma once

/* Small exact linear algebra over Q^n: the ambient space a_0 of the
 * diagonal torus of GL(n) and its dual, identified through the standard
 * inner product.  Also fraction-free Gaussian elimination helpers used
 * for dual bases, projections and lattice membership.
 */

#include "orbint/rational.hpp"

#include <optional>
#include <vector>

namespace orbint {

using Vec = std::vector<Rat>;

Vec vec_zero(size_t n);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& c, const Vec& v);
Rat dot(const Vec& a, const Vec& b);
bool vec_is_zero(const Vec& v);

/* solve A x = b by Gaussian elimination; A given by columns.
 * Returns nullopt when the system is inconsistent; requires the columns
 * to be linearly independent (the only case we use). */
std::optional<std::vector<Rat>> solve_columns(const std::vector<Vec>& cols, const Vec& b);

/* det of the Gram matrix of a list of vectors */
Rat gram_det(const std::vector<Vec>& basis);

/* coordinates of v in the given (independent) basis, or nullopt when v
 * is outside the span */
inline std::optional<std::vector<Rat>> in_span(const std::vector<Vec>& basis, const Vec& v) {
    return solve_columns(basis, v);
}

/* is v an integer combination of the basis vectors? */
bool in_lattice(const std::vector<Vec>& basis, const Vec& v);

}  // namespace orbint
