#pragma once

#include <map>

#include "twisthom/abelian.hpp"

namespace twisthom {

// Bounded cohomological complex of finitely generated free Z-modules:
// d^i : C^i -> C^{i+1}, d^{i+1} d^i = 0. Ranks are stored sparsely; absent
// degrees are zero.
class Complex {
public:
    Complex() = default;
    Complex(std::map<int, std::size_t> ranks, std::map<int, IntMatrix> differentials);

    static Complex concentrated(int degree, std::size_t rank_);

    std::size_t rank(int i) const;
    // Differential C^i -> C^{i+1}, materialized with the right shape.
    IntMatrix differential(int i) const;
    const std::map<int, std::size_t>& ranks() const { return ranks_; }
    bool empty() const { return ranks_.empty(); }
    int min_degree() const;
    int max_degree() const;

    bool operator==(const Complex&) const = default;

    // Throws NotAComplex if some d(i+1) d(i) != 0 or shapes disagree.
    void validate() const;

    FgAbGroup homology(int i, const Coefficient& coeff) const;
    std::map<int, FgAbGroup> homology(const Coefficient& coeff) const;

    Complex shifted(int n) const;  // (C[n])^i = C^{i+n}, d flips sign for odd n
    static Complex direct_sum(const std::vector<Complex>& parts);

private:
    std::map<int, std::size_t> ranks_;        // only nonzero ranks
    std::map<int, IntMatrix> differentials_;  // only nonzero maps
};

// Mapping cone of a chain map f : X -> Y (degreewise maps commuting with d):
// Cone^i = X^{i+1} (+) Y^i with differential [[-d_X, 0], [f, d_Y]].
Complex mapping_cone(const Complex& x, const Complex& y, const std::map<int, IntMatrix>& f);

// Throws NotChainMap unless f commutes with the differentials.
void require_chain_map(const Complex& x, const Complex& y, const std::map<int, IntMatrix>& f,
                       const std::string& what);

}  // namespace twisthom
