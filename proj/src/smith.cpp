#include "twisthom/smith.hpp"

#include <cstdlib>

namespace twisthom {

namespace {

Integer abs_val(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Floor division quotient used for remainder-shrinking row/column reduction.
Integer shrink_quot(const Integer& a, const Integer& b) {
    Integer q = a / b;
    Integer r = a - q * b;
    // round toward making |remainder| <= |b|/2 keeps entries small
    if (r != 0 && 2 * abs_val(r) > abs_val(b)) q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& m) {
    std::size_t r = m.rows(), c = m.cols();
    SmithDecomposition out{IntMatrix::identity(r), m, IntMatrix::identity(c)};
    IntMatrix& a = out.d;
    IntMatrix& u = out.u;
    IntMatrix& v = out.v;

    std::size_t t = 0;
    std::size_t nmin = r < c ? r : c;
    while (t < nmin) {
        // pivot: smallest nonzero absolute value in the trailing block
        std::size_t pi = t, pj = t;
        Integer best = 0;
        for (std::size_t i = t; i < r; ++i)
            for (std::size_t j = t; j < c; ++j) {
                const Integer& x = a.at(i, j);
                if (x != 0 && (best == 0 || abs_val(x) < best)) {
                    best = abs_val(x);
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        for (;;) {
            bool dirty = false;
            for (std::size_t i = t + 1; i < r; ++i) {
                if (a.at(i, t) == 0) continue;
                Integer q = shrink_quot(a.at(i, t), a.at(t, t));
                if (q != 0) {
                    a.add_row(i, t, -q);
                    u.add_row(i, t, -q);
                }
                if (a.at(i, t) != 0) {  // smaller remainder becomes the pivot
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < c; ++j) {
                if (a.at(t, j) == 0) continue;
                Integer q = shrink_quot(a.at(t, j), a.at(t, t));
                if (q != 0) {
                    a.add_col(j, t, -q);
                    v.add_col(j, t, -q);
                }
                if (a.at(t, j) != 0) {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (dirty) continue;
            bool row_clear = true, col_clear = true;
            for (std::size_t i = t + 1; i < r; ++i) row_clear &= a.at(i, t) == 0;
            for (std::size_t j = t + 1; j < c; ++j) col_clear &= a.at(t, j) == 0;
            if (!row_clear || !col_clear) continue;
            // divisibility of the trailing block by the pivot
            bool fixed = false;
            for (std::size_t i = t + 1; i < r && !fixed; ++i)
                for (std::size_t j = t + 1; j < c && !fixed; ++j)
                    if (a.at(i, j) % a.at(t, t) != 0) {
                        a.add_row(t, i, 1);
                        u.add_row(t, i, 1);
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (a.at(t, t) < 0) {
            a.negate_row(t);
            u.negate_row(t);
        }
        ++t;
    }
    out.rank = t;
    return out;
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

IntMatrix kernel_basis(const IntMatrix& m) {
    if (m.rows() == 0) return IntMatrix::identity(m.cols());
    SmithDecomposition s = smith_normal_form(m);
    // m x = 0  <=>  d (v^-1 x) = 0  <=>  x in span of the trailing columns of v
    return s.v.columns(s.rank, m.cols() - s.rank);
}

IntMatrix lattice_basis(const IntMatrix& gens) {
    if (gens.cols() == 0) return gens;
    SmithDecomposition s = smith_normal_form(gens);
    // gens * v applies unimodular column operations, so spans the same
    // lattice; its first `rank` columns are independent and the rest vanish.
    return (gens * s.v).columns(0, s.rank);
}

std::optional<IntMatrix> try_solve_exact(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw ShapeMismatch("solve_exact");
    SmithDecomposition s = smith_normal_form(a);
    IntMatrix w = s.u * b;  // d * (v^-1 x) = u b
    IntMatrix y(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i < s.rank) {
                if (w.at(i, j) % s.d.at(i, i) != 0) return std::nullopt;
                y.at(i, j) = w.at(i, j) / s.d.at(i, i);
            } else if (w.at(i, j) != 0) {
                return std::nullopt;
            }
        }
    }
    return s.v * y;
}

IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b) {
    auto x = try_solve_exact(a, b);
    if (!x) throw Unsolvable(std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                             " system with " + std::to_string(b.cols()) + " right-hand sides");
    return *x;
}

bool columns_in_span(const IntMatrix& a, const IntMatrix& b) {
    return try_solve_exact(a, b).has_value();
}

IntMatrix preimage_basis(const IntMatrix& g, const IntMatrix& r) {
    if (r.cols() == 0) return kernel_basis(g);
    if (g.rows() != r.rows()) throw ShapeMismatch("preimage_basis");
    IntMatrix k = kernel_basis(IntMatrix::hcat(g, r));
    return lattice_basis(k.top_rows(g.cols()));
}

}  // namespace twisthom
