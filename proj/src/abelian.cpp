#include "twisthom/abelian.hpp"

#include <algorithm>
#include <sstream>

namespace twisthom {

Coefficient Coefficient::mod(const Integer& n) {
    if (n < 2) throw Error("modulus must be >= 2, got " + n.str());
    return Coefficient(n);
}

std::string Coefficient::to_string() const {
    return is_integers() ? "Z" : "Z/" + modulus_.str();
}

FgAbGroup FgAbGroup::free(std::size_t rank_) {
    FgAbGroup g;
    g.factors_.assign(rank_, Integer(0));
    return g;
}

FgAbGroup FgAbGroup::cyclic(const Integer& n) {
    FgAbGroup g;
    if (n == 0) return free(1);
    Integer a = n < 0 ? Integer(-n) : n;
    if (a != 1) g.factors_.push_back(a);
    return g;
}

FgAbGroup FgAbGroup::from_invariants(std::vector<Integer> factors) {
    std::vector<Integer> kept;
    for (auto& f : factors) {
        if (f < 0) f = -f;
        if (f != 1) kept.push_back(f);
    }
    std::stable_sort(kept.begin(), kept.end(), [](const Integer& a, const Integer& b) {
        if (a == 0) return false;  // zeros last
        if (b == 0) return true;
        return a < b;
    });
    for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
        const Integer& a = kept[i];
        const Integer& b = kept[i + 1];
        if (a == 0 && b != 0) throw Error("invariant factors: free part before torsion");
        if (a != 0 && b != 0 && b % a != 0)
            throw Error("invariant factors do not form a divisibility chain: " + a.str() + ", " + b.str());
    }
    FgAbGroup g;
    g.factors_ = std::move(kept);
    return g;
}

FgAbGroup FgAbGroup::from_relations(std::size_t generators, const IntMatrix& relations) {
    if (relations.rows() != generators) throw ShapeMismatch("relations for presented group");
    SmithDecomposition s = smith_normal_form(relations);
    std::vector<Integer> factors;
    for (std::size_t i = 0; i < s.rank; ++i) factors.push_back(s.d.at(i, i));
    for (std::size_t i = s.rank; i < generators; ++i) factors.push_back(0);
    return from_invariants(std::move(factors));
}

std::size_t FgAbGroup::free_rank() const {
    std::size_t n = 0;
    for (const auto& f : factors_) n += f == 0;
    return n;
}

std::vector<Integer> FgAbGroup::torsion() const {
    std::vector<Integer> t;
    for (const auto& f : factors_)
        if (f != 0) t.push_back(f);
    return t;
}

FgAbGroup FgAbGroup::direct_sum(const FgAbGroup& other) const {
    // Invariant factors of a direct sum: merge primary parts. Computing via a
    // block-diagonal relation presentation keeps one code path.
    std::vector<IntMatrix> blocks;
    auto rel = [](const FgAbGroup& g) {
        std::vector<Integer> tor = g.torsion();
        IntMatrix m(g.invariant_factors().size(), tor.size());
        for (std::size_t i = 0; i < tor.size(); ++i) m.at(i, i) = tor[i];
        return m;
    };
    IntMatrix r = IntMatrix::diag_blocks({rel(*this), rel(other)});
    return from_relations(factors_.size() + other.factors_.size(), r);
}

std::string FgAbGroup::to_string() const {
    if (factors_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& f : factors_) {
        if (f == 0) break;
        os << (first ? "" : " + ") << "Z/" << f.str();
        first = false;
    }
    std::size_t fr = free_rank();
    if (fr == 1) os << (first ? "" : " + ") << "Z";
    else if (fr > 1) os << (first ? "" : " + ") << "Z^" << fr;
    return os.str();
}

PresentedGroup PresentedGroup::coefficient_power(const Coefficient& c, std::size_t n) {
    if (c.is_integers()) return free_group(n);
    return {n, IntMatrix::scalar(n, c.modulus())};
}

Subquotient::Subquotient(IntMatrix top, IntMatrix rel_in_top)
    : top_(std::move(top)), rel_(std::move(rel_in_top)) {
    if (rel_.rows() != top_.cols()) throw ShapeMismatch("subquotient relations");
}

bool Subquotient::element_is_zero(const IntMatrix& coords_col) const {
    if (coords_col.rows() != top_.cols()) throw ShapeMismatch("subquotient element");
    return columns_in_span(rel_, coords_col);
}

std::optional<IntMatrix> Subquotient::nonzero_witness() const {
    for (std::size_t j = 0; j < top_.cols(); ++j) {
        IntMatrix e(top_.cols(), 1);
        e.at(j, 0) = 1;
        if (!element_is_zero(e)) return e;
    }
    return std::nullopt;
}

IntMatrix Subquotient::induced_map(const IntMatrix& ambient_map, const Subquotient& from,
                                   const Subquotient& to) {
    IntMatrix image = ambient_map * from.top();
    IntMatrix induced = to.coords_of(image);  // throws if T1 is not carried into T2
    // relations must be carried into relations
    IntMatrix rel_image = induced * from.relations();
    if (!columns_in_span(to.relations(), rel_image))
        throw Error("map does not descend to the subquotient");
    return induced;
}

Subquotient pair_homology(const IntMatrix& f, const IntMatrix& rel_b, const IntMatrix& g,
                          const IntMatrix& rel_c) {
    std::size_t b = g.cols();
    if (f.rows() != b) throw ShapeMismatch("pair_homology: cols(g) = " + std::to_string(b) +
                                           " vs rows(f) = " + std::to_string(f.rows()));
    if (rel_b.rows() != b || rel_c.rows() != g.rows()) throw ShapeMismatch("pair_homology relations");

    if (!columns_in_span(rel_c, g * f))
        throw CompositionNotZero("g. f is not zero modulo the target relations");
    if (!columns_in_span(rel_c, g * rel_b))
        throw CompositionNotZero("g does not kill the middle relations");

    IntMatrix top = preimage_basis(g, rel_c);            // basis of ker(induced g) lifted to Z^b
    IntMatrix sub = IntMatrix::hcat(f, rel_b);           // generators of im(f) + relations
    IntMatrix rel = solve_exact(top, sub);               // exact by the checks above
    return Subquotient(std::move(top), std::move(rel));
}

Subquotient homology_at_presented(const IntMatrix& d_in, const IntMatrix& d_out,
                                  const Coefficient& coeff) {
    if (d_out.cols() != d_in.rows())
        throw ShapeMismatch("homology_at: cols(d_out) = " + std::to_string(d_out.cols()) +
                            " vs rows(d_in) = " + std::to_string(d_in.rows()));
    std::size_t b = d_out.cols(), c = d_out.rows();
    IntMatrix rel_b = PresentedGroup::coefficient_power(coeff, b).relations;
    IntMatrix rel_c = PresentedGroup::coefficient_power(coeff, c).relations;
    return pair_homology(d_in, rel_b, d_out, rel_c);
}

FgAbGroup homology_at(const IntMatrix& d_in, const IntMatrix& d_out, const Coefficient& coeff) {
    return homology_at_presented(d_in, d_out, coeff).group();
}

IntMatrix kernel_basis(const IntMatrix& m, const Coefficient& coeff) {
    if (coeff.is_integers()) return kernel_basis(m);
    IntMatrix lifted = preimage_basis(m, IntMatrix::scalar(m.rows(), coeff.modulus()));
    IntMatrix reduced = lifted.reduced_mod(coeff.modulus());
    // drop columns that vanish mod n
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < reduced.cols(); ++j)
        if (!reduced.column(j).is_zero()) keep.push_back(j);
    IntMatrix out(m.cols(), keep.size());
    for (std::size_t j = 0; j < keep.size(); ++j)
        for (std::size_t i = 0; i < m.cols(); ++i) out.at(i, j) = reduced.at(i, keep[j]);
    return out;
}

}  // namespace twisthom
