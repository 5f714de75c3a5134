#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "twisthom/matrix.hpp"
#include "twisthom/validation.hpp"

namespace twisthom {

using ObjectIndex = std::size_t;

// An element of hom^degree(source, target), written in the free generator
// basis of that graded piece. Elements of absent graded pieces are the zero
// element with empty coords.
struct HomElement {
    ObjectIndex source = 0;
    ObjectIndex target = 0;
    int degree = 0;
    std::vector<Integer> coords;

    bool is_zero() const {
        for (const auto& c : coords)
            if (c != 0) return false;
        return true;
    }
};

// Finitely presented dg-category with hom complexes given by free-module
// ranks, differential matrices and composition tables on generators.
// A valid instance is negative: no generators in positive degrees.
class NegDgCategory {
public:
    struct HomComplex {
        std::map<int, std::size_t> ranks;             // degree -> rank (nonzero only)
        std::map<int, IntMatrix> differentials;       // degree d -> rank(d+1) x rank(d)
    };
    struct Data {
        std::vector<std::string> objects;
        // hom complexes keyed by (source, target)
        std::map<std::pair<ObjectIndex, ObjectIndex>, HomComplex> homs;
        // composition tables keyed by (a, b, c, deg_f, deg_g) for
        // hom^{deg_g}(b,c) x hom^{deg_f}(a,b) -> hom^{deg_f+deg_g}(a,c);
        // column ig * rank_f + if holds the coords of gen_g . gen_f.
        // Absent tables mean the composition is zero.
        std::map<std::tuple<ObjectIndex, ObjectIndex, ObjectIndex, int, int>, IntMatrix> compositions;
        // identity coords in hom^0(x, x), one entry per object
        std::vector<std::vector<Integer>> identities;
    };

    // Validates eagerly; throws InvalidCategory carrying the report text.
    static NegDgCategory create(Data data);
    // No validation; used by validate_category to report on raw input.
    static NegDgCategory wrap_unchecked(Data data) { return NegDgCategory(std::move(data)); }

    std::size_t object_count() const { return data_.objects.size(); }
    const std::string& object_name(ObjectIndex i) const { return data_.objects[i]; }
    std::optional<ObjectIndex> find_object(const std::string& name) const;

    std::size_t hom_rank(ObjectIndex a, ObjectIndex b, int degree) const;
    IntMatrix hom_differential(ObjectIndex a, ObjectIndex b, int degree) const;

    HomElement zero(ObjectIndex a, ObjectIndex b, int degree) const;
    HomElement element(ObjectIndex a, ObjectIndex b, int degree, std::vector<Integer> coords) const;
    HomElement identity(ObjectIndex x) const;

    HomElement add(const HomElement& a, const HomElement& b) const;
    HomElement scaled(const HomElement& a, const Integer& s) const;
    // g . f with target(f) = source(g); degree adds. Positive-degree results
    // are zero by negativity.
    HomElement compose(const HomElement& g, const HomElement& f) const;
    HomElement differential(const HomElement& f) const;

    ValidationReport validate() const;

private:
    explicit NegDgCategory(Data data) : data_(std::move(data)) {}
    const HomComplex* hom(ObjectIndex a, ObjectIndex b) const;
    const IntMatrix* table(ObjectIndex a, ObjectIndex b, ObjectIndex c, int df, int dg) const;

    Data data_;
};

// Total report of every axiom violation (negativity, d^2, d(id), Leibniz,
// associativity, unitality, shapes) with witnesses.
ValidationReport validate_category(const NegDgCategory& category);

}  // namespace twisthom
