#pragma once

#include <string>
#include <vector>

#include "twisthom/smith.hpp"

namespace twisthom {

// The coefficient ring: Z or Z/n with n >= 2.
class Coefficient {
public:
    static Coefficient integers() { return Coefficient(0); }
    static Coefficient mod(const Integer& n);

    bool is_integers() const { return modulus_ == 0; }
    const Integer& modulus() const { return modulus_; }
    bool operator==(const Coefficient&) const = default;
    std::string to_string() const;

private:
    explicit Coefficient(Integer n) : modulus_(std::move(n)) {}
    Integer modulus_;  // 0 encodes Z
};

// Finitely generated abelian group in invariant-factor form: a divisibility
// chain d1 | d2 | ... with no factor equal to 1 and 0 encoding a free summand
// (zeros come last).
class FgAbGroup {
public:
    FgAbGroup() = default;  // trivial group
    static FgAbGroup trivial() { return FgAbGroup(); }
    static FgAbGroup free(std::size_t rank_);
    static FgAbGroup cyclic(const Integer& n);
    // Normalizes (drops units, checks chain); throws on a broken chain.
    static FgAbGroup from_invariants(std::vector<Integer> factors);
    // Z^generators / column span of relations.
    static FgAbGroup from_relations(std::size_t generators, const IntMatrix& relations);

    const std::vector<Integer>& invariant_factors() const { return factors_; }
    std::size_t free_rank() const;
    std::vector<Integer> torsion() const;
    bool is_trivial() const { return factors_.empty(); }
    bool operator==(const FgAbGroup&) const = default;

    FgAbGroup direct_sum(const FgAbGroup& other) const;
    std::string to_string() const;  // e.g. "0", "Z", "Z/2 + Z^2"

private:
    std::vector<Integer> factors_;
};

// A f.g. abelian group presented as Z^generators / column span of relations.
struct PresentedGroup {
    std::size_t generators = 0;
    IntMatrix relations;  // generators x r; may have zero columns

    static PresentedGroup free_group(std::size_t n) { return {n, IntMatrix(n, 0)}; }
    // A^n for A the coefficient ring (relations n*I for Z/n).
    static PresentedGroup coefficient_power(const Coefficient& c, std::size_t n);
    FgAbGroup group() const { return FgAbGroup::from_relations(generators, relations); }
};

// A subquotient T / S of some Z^ambient: T is the lattice spanned by the
// columns of `top` (a basis), S the sublattice spanned by top * rel.
// This is the common currency for homology groups with remembered witnesses.
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(IntMatrix top, IntMatrix rel_in_top);

    std::size_t ambient() const { return top_.rows(); }
    std::size_t generators() const { return top_.cols(); }
    const IntMatrix& top() const { return top_; }
    const IntMatrix& relations() const { return rel_; }

    FgAbGroup group() const { return FgAbGroup::from_relations(top_.cols(), rel_); }
    bool is_trivial_group() const { return group().is_trivial(); }

    // Coordinates of ambient columns with respect to the top basis; throws
    // Unsolvable if a column is not in T.
    IntMatrix coords_of(const IntMatrix& ambient_cols) const { return solve_exact(top_, ambient_cols); }
    // Is the element with the given top-coordinates zero in T/S?
    bool element_is_zero(const IntMatrix& coords_col) const;
    // A generator (top coordinates) that is nonzero in T/S, if any.
    std::optional<IntMatrix> nonzero_witness() const;

    // Matrix of the map induced by `ambient_map` (ambient_1 -> ambient_2) on
    // top coordinates. Throws if the map does not send T1 into T2 or S1 into S2.
    static IntMatrix induced_map(const IntMatrix& ambient_map, const Subquotient& from,
                                 const Subquotient& to);

private:
    IntMatrix top_;  // ambient x k
    IntMatrix rel_;  // k x r
};

// Homology at B of  Z^a/RA --F--> Z^b/RB --G--> Z^c/RC.
// Preconditions (checked): G F = 0 and G RB = 0 as maps into Z^c/RC.
// RA never enters: the image of the induced map is (im F + RB)/RB.
Subquotient pair_homology(const IntMatrix& f, const IntMatrix& rel_b, const IntMatrix& g,
                          const IntMatrix& rel_c);

// ker(d_out)/im(d_in) over the coefficient ring, with maps acting on column
// vectors: d_in : A^a -> A^b, d_out : A^b -> A^c.
FgAbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out, const Coefficient& coeff);
Subquotient homology_at_presented(const IntMatrix& d_in, const IntMatrix& d_out,
                                  const Coefficient& coeff);

// Columns generate ker(m) over the coefficient ring; over Z they are a basis
// of the kernel lattice.
IntMatrix kernel_basis(const IntMatrix& m, const Coefficient& coeff);

}  // namespace twisthom
