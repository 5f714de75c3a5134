#pragma once

#include "twisthom/complex.hpp"
#include "twisthom/dgcategory.hpp"

namespace twisthom {

// The concrete negative dg-category built from bounded complexes of f.g. free
// abelian groups: hom^d(P,Q) is all graded maps of degree d for d < 0 and the
// chain maps (closed degree-0 elements, the good truncation) for d = 0, so
// H^0 is chain maps modulo homotopy.
class DgChainInstance {
public:
    // Throws NotAComplex if some input fails d^2 = 0. Objects are named
    // "C0", "C1", ... unless names are given.
    static DgChainInstance build(std::vector<Complex> objects, std::vector<std::string> names = {});

    const NegDgCategory& category() const { return category_; }
    const Complex& object(ObjectIndex i) const { return objects_[i]; }
    std::size_t object_count() const { return objects_.size(); }

    // Underlying graded map of a hom element: per internal degree i, the
    // matrix Q^{i+deg} x P^i. Only nonzero blocks are returned.
    std::map<int, IntMatrix> graded_components(const HomElement& e) const;

    // Hom element with the given underlying graded map. For degree 0 the map
    // must be a chain map (throws NotChainMap otherwise).
    HomElement element_from_graded(ObjectIndex a, ObjectIndex b, int degree,
                                   const std::map<int, IntMatrix>& components) const;

    HomElement chain_map(ObjectIndex a, ObjectIndex b, const std::map<int, IntMatrix>& components) const {
        return element_from_graded(a, b, 0, components);
    }

private:
    DgChainInstance() : category_(NegDgCategory::wrap_unchecked({})) {}

    struct GradedBasis {
        std::vector<std::tuple<int, std::size_t, std::size_t>> positions;  // (internal degree, row, col)
        std::map<std::tuple<int, std::size_t, std::size_t>, std::size_t> index;
    };
    GradedBasis graded_basis(ObjectIndex a, ObjectIndex b, int degree) const;
    IntMatrix graded_differential(ObjectIndex a, ObjectIndex b, int degree) const;

    std::vector<Complex> objects_;
    NegDgCategory category_;
    // kernel basis of the closedness condition on degree-0 graded maps,
    // keyed by (source, target); columns are the hom^0 generators.
    std::map<std::pair<ObjectIndex, ObjectIndex>, IntMatrix> chain_map_basis_;
};

}  // namespace twisthom
