#pragma once

#include <optional>

#include "twisthom/matrix.hpp"

namespace twisthom {

// u * m * v = d with u, v unimodular and d diagonal with a divisibility chain
// d(0,0) | d(1,1) | ... ; diagonal entries are nonnegative.
struct SmithDecomposition {
    IntMatrix u, d, v;
    std::size_t rank = 0;  // number of nonzero diagonal entries
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);

// Columns form a basis of the kernel lattice {x in Z^cols : m x = 0}.
IntMatrix kernel_basis(const IntMatrix& m);

// Basis of the lattice spanned by the columns of gens (possibly fewer columns).
IntMatrix lattice_basis(const IntMatrix& gens);

// Integral solution x of a x = b (b may have several columns), if one exists.
std::optional<IntMatrix> try_solve_exact(const IntMatrix& a, const IntMatrix& b);

// As above but throws Unsolvable.
IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b);

// True iff every column of b lies in the lattice spanned by the columns of a.
bool columns_in_span(const IntMatrix& a, const IntMatrix& b);

// Basis of {x in Z^cols(g) : g x lies in the lattice spanned by columns of r}.
IntMatrix preimage_basis(const IntMatrix& g, const IntMatrix& r);

}  // namespace twisthom
