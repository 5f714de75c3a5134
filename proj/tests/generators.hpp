#pragma once

#include <vector>

#include "rng.hpp"
#include "twisthom/complex.hpp"
#include "twisthom/dgchain.hpp"

// Random objects for the dg-category and twisted-complex suites. Complexes
// are assembled from split pieces (identity pairs plus free summands) and
// conjugated by unimodular basis changes, so d^2 = 0 holds by construction
// and homology is controlled exactly.
namespace testutil {

inline twisthom::Complex random_complex(Rng& rng, int lo_deg = -1, int hi_deg = 1,
                                        std::size_t max_rank = 2) {
    using twisthom::Complex;
    std::vector<Complex> parts;
    for (int i = lo_deg; i <= hi_deg; ++i) {
        std::size_t h = static_cast<std::size_t>(rng.range(0, static_cast<long long>(max_rank)));
        if (h) parts.push_back(Complex::concentrated(i, h));
        if (i < hi_deg) {
            std::size_t p = static_cast<std::size_t>(rng.range(0, 1));
            if (p)
                parts.push_back(Complex({{i, p}, {i + 1, p}}, {{i, twisthom::IntMatrix::identity(p)}}));
        }
    }
    Complex c = Complex::direct_sum(parts);
    if (c.empty()) c = Complex::concentrated(0, 1);
    // conjugate by random unimodular basis changes per degree
    std::map<int, twisthom::IntMatrix> u, uinv;
    for (const auto& [i, r] : c.ranks()) {
        u[i] = rng.unimodular(r);
        uinv[i] = twisthom::solve_exact(u[i], twisthom::IntMatrix::identity(r));
    }
    std::map<int, std::size_t> ranks = c.ranks();
    std::map<int, twisthom::IntMatrix> diffs;
    for (const auto& [i, r] : c.ranks()) {
        (void)r;
        if (!c.rank(i + 1)) continue;
        twisthom::IntMatrix d = u.at(i + 1) * c.differential(i) * uinv.at(i);
        if (!d.is_zero()) diffs[i] = d;
    }
    return Complex(std::move(ranks), std::move(diffs));
}

// Complex with homology concentrated in degree 0 (free part plus torsion via
// an injective two-term piece), as required by the evaluate/Tot oracle suite.
inline twisthom::Complex random_h0_complex(Rng& rng, std::size_t max_rank = 2) {
    using twisthom::Complex;
    using twisthom::IntMatrix;
    std::size_t h = static_cast<std::size_t>(rng.range(0, static_cast<long long>(max_rank)));
    std::size_t p = static_cast<std::size_t>(rng.range(0, 1));
    std::vector<Complex> parts;
    if (h) parts.push_back(Complex::concentrated(0, h));
    if (p) {
        // Z --m--> Z with m != 0: homology Z/|m| in degree 0, nothing in -1
        IntMatrix m(1, 1);
        m.at(0, 0) = rng.range(1, 3);
        parts.push_back(Complex({{-1, 1}, {0, 1}}, {{-1, m}}));
    }
    Complex c = Complex::direct_sum(parts);
    if (c.empty()) c = Complex::concentrated(0, 1);
    std::map<int, twisthom::IntMatrix> u, uinv;
    for (const auto& [i, r] : c.ranks()) {
        u[i] = rng.unimodular(r);
        uinv[i] = twisthom::solve_exact(u[i], twisthom::IntMatrix::identity(r));
    }
    std::map<int, std::size_t> ranks = c.ranks();
    std::map<int, twisthom::IntMatrix> diffs;
    for (const auto& [i, r] : c.ranks()) {
        (void)r;
        if (!c.rank(i + 1)) continue;
        twisthom::IntMatrix d = u.at(i + 1) * c.differential(i) * uinv.at(i);
        if (!d.is_zero()) diffs[i] = d;
    }
    return Complex(std::move(ranks), std::move(diffs));
}

}  // namespace testutil
