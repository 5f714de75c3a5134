#include "twisthom/dgcategory.hpp"

#include <sstream>

namespace twisthom {

namespace {
std::string el_str(const NegDgCategory& cat, const HomElement& e) {
    std::ostringstream os;
    os << "hom^" << e.degree << "(" << cat.object_name(e.source) << ", " << cat.object_name(e.target)
       << ") coords [";
    for (std::size_t i = 0; i < e.coords.size(); ++i) os << (i ? " " : "") << e.coords[i];
    os << "]";
    return os.str();
}
}  // namespace

NegDgCategory NegDgCategory::create(Data data) {
    NegDgCategory cat(std::move(data));
    ValidationReport report = cat.validate();
    if (!report.ok()) throw InvalidCategory(report.to_string());
    return cat;
}

std::optional<ObjectIndex> NegDgCategory::find_object(const std::string& name) const {
    for (ObjectIndex i = 0; i < data_.objects.size(); ++i)
        if (data_.objects[i] == name) return i;
    return std::nullopt;
}

const NegDgCategory::HomComplex* NegDgCategory::hom(ObjectIndex a, ObjectIndex b) const {
    auto it = data_.homs.find({a, b});
    return it == data_.homs.end() ? nullptr : &it->second;
}

const IntMatrix* NegDgCategory::table(ObjectIndex a, ObjectIndex b, ObjectIndex c, int df,
                                      int dg) const {
    auto it = data_.compositions.find({a, b, c, df, dg});
    return it == data_.compositions.end() ? nullptr : &it->second;
}

std::size_t NegDgCategory::hom_rank(ObjectIndex a, ObjectIndex b, int degree) const {
    const HomComplex* h = hom(a, b);
    if (!h) return 0;
    auto it = h->ranks.find(degree);
    return it == h->ranks.end() ? 0 : it->second;
}

IntMatrix NegDgCategory::hom_differential(ObjectIndex a, ObjectIndex b, int degree) const {
    const HomComplex* h = hom(a, b);
    if (h) {
        auto it = h->differentials.find(degree);
        if (it != h->differentials.end()) return it->second;
    }
    return IntMatrix(hom_rank(a, b, degree + 1), hom_rank(a, b, degree));
}

HomElement NegDgCategory::zero(ObjectIndex a, ObjectIndex b, int degree) const {
    return {a, b, degree, std::vector<Integer>(hom_rank(a, b, degree))};
}

HomElement NegDgCategory::element(ObjectIndex a, ObjectIndex b, int degree,
                                  std::vector<Integer> coords) const {
    if (coords.size() != hom_rank(a, b, degree))
        throw ShapeMismatch("element coords for hom^" + std::to_string(degree));
    return {a, b, degree, std::move(coords)};
}

HomElement NegDgCategory::identity(ObjectIndex x) const {
    if (x < data_.identities.size() && data_.identities[x].size() == hom_rank(x, x, 0))
        return {x, x, 0, data_.identities[x]};
    return zero(x, x, 0);
}

HomElement NegDgCategory::add(const HomElement& a, const HomElement& b) const {
    if (a.source != b.source || a.target != b.target || a.degree != b.degree ||
        a.coords.size() != b.coords.size())
        throw ShapeMismatch("hom element sum");
    HomElement out = a;
    for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
    return out;
}

HomElement NegDgCategory::scaled(const HomElement& a, const Integer& s) const {
    HomElement out = a;
    for (auto& c : out.coords) c *= s;
    return out;
}

HomElement NegDgCategory::compose(const HomElement& g, const HomElement& f) const {
    if (f.target != g.source)
        throw ObjectMismatch("compose: target(f) = " + object_name(f.target) + " vs source(g) = " +
                             object_name(g.source));
    int degree = f.degree + g.degree;
    HomElement out = zero(f.source, g.target, degree);
    if (degree > 0 || f.degree > 0 || g.degree > 0) return out;  // negativity
    const IntMatrix* t = table(f.source, f.target, g.target, f.degree, g.degree);
    if (!t) return out;
    std::size_t rank_f = hom_rank(f.source, f.target, f.degree);
    for (std::size_t ig = 0; ig < g.coords.size(); ++ig) {
        if (g.coords[ig] == 0) continue;
        for (std::size_t jf = 0; jf < f.coords.size(); ++jf) {
            if (f.coords[jf] == 0) continue;
            Integer c = g.coords[ig] * f.coords[jf];
            std::size_t col = ig * rank_f + jf;
            for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] += c * t->at(k, col);
        }
    }
    return out;
}

HomElement NegDgCategory::differential(const HomElement& f) const {
    IntMatrix d = hom_differential(f.source, f.target, f.degree);
    HomElement out = zero(f.source, f.target, f.degree + 1);
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (d.at(i, j) != 0) out.coords[i] += d.at(i, j) * f.coords[j];
    return out;
}

ValidationReport NegDgCategory::validate() const {
    ValidationReport rep;
    std::size_t n = data_.objects.size();

    for (const auto& [key, h] : data_.homs) {
        auto [a, b] = key;
        std::string homname = "hom(" + object_name(a) + ", " + object_name(b) + ")";
        if (a >= n || b >= n) {
            rep.add("shape", homname + " references unknown objects");
            continue;
        }
        for (const auto& [d, r] : h.ranks)
            if (d > 0 && r > 0)
                rep.add("negativity", homname + " has rank " + std::to_string(r) + " in degree +" +
                                          std::to_string(d));
        for (const auto& [d, m] : h.differentials) {
            if (m.rows() != hom_rank(a, b, d + 1) || m.cols() != hom_rank(a, b, d))
                rep.add("shape", homname + " differential at degree " + std::to_string(d));
        }
        for (const auto& [d, r] : h.ranks) {
            (void)r;
            IntMatrix dd = hom_differential(a, b, d + 1) * hom_differential(a, b, d);
            if (!dd.is_zero())
                rep.add("d_squared", homname + " d.d != 0 out of degree " + std::to_string(d));
        }
    }

    for (const auto& [key, t] : data_.compositions) {
        auto [a, b, c, df, dg] = key;
        if (a >= n || b >= n || c >= n) {
            rep.add("shape", "composition table references unknown objects");
            continue;
        }
        if (t.rows() != hom_rank(a, c, df + dg) ||
            t.cols() != hom_rank(a, b, df) * hom_rank(b, c, dg))
            rep.add("shape", "composition table (" + object_name(a) + ", " + object_name(b) + ", " +
                                 object_name(c) + ") degrees (" + std::to_string(df) + ", " +
                                 std::to_string(dg) + ")");
    }

    if (data_.identities.size() != n) {
        rep.add("unitality", "identities supplied for " + std::to_string(data_.identities.size()) +
                                 " of " + std::to_string(n) + " objects");
        return rep;  // element ops below assume identity shapes
    }
    for (ObjectIndex x = 0; x < n; ++x)
        if (data_.identities[x].size() != hom_rank(x, x, 0)) {
            rep.add("unitality", "identity coords of " + object_name(x) + " have wrong length");
            return rep;
        }
    if (!rep.ok()) return rep;  // degree/shape problems make the axiom checks unreliable

    // d(id) = 0
    for (ObjectIndex x = 0; x < n; ++x) {
        HomElement d_id = differential(identity(x));
        if (!d_id.is_zero()) rep.add("d_identity", "d(id_" + object_name(x) + ") != 0");
    }

    // generator enumeration helper
    auto generators = [&](ObjectIndex a, ObjectIndex b) {
        std::vector<HomElement> gens;
        const HomComplex* h = hom(a, b);
        if (!h) return gens;
        for (const auto& [d, r] : h->ranks)
            for (std::size_t k = 0; k < r; ++k) {
                HomElement e = zero(a, b, d);
                e.coords[k] = 1;
                gens.push_back(std::move(e));
            }
        return gens;
    };

    // unitality on generators
    for (const auto& [key, h] : data_.homs) {
        (void)h;
        auto [a, b] = key;
        for (const auto& f : generators(a, b)) {
            HomElement left = compose(identity(b), f);
            HomElement right = compose(f, identity(a));
            if (!(left.coords == f.coords))
                rep.add("unitality", "id . f != f for " + el_str(*this, f));
            if (!(right.coords == f.coords))
                rep.add("unitality", "f . id != f for " + el_str(*this, f));
        }
    }

    // Leibniz: d(g.f) = (dg).f + (-1)^{deg g} g.(df) on generator pairs
    for (const auto& [kf, hf] : data_.homs) {
        (void)hf;
        auto [a, b] = kf;
        for (const auto& [kg, hg] : data_.homs) {
            (void)hg;
            auto [b2, c] = kg;
            if (b2 != b) continue;
            for (const auto& f : generators(a, b))
                for (const auto& g : generators(b, c)) {
                    HomElement lhs = differential(compose(g, f));
                    HomElement rhs = add(compose(differential(g), f),
                                         scaled(compose(g, differential(f)),
                                                g.degree % 2 == 0 ? 1 : -1));
                    if (!(lhs.coords == rhs.coords))
                        rep.add("leibniz", "fails for f = " + el_str(*this, f) + ", g = " +
                                               el_str(*this, g));
                }
        }
    }

    // associativity on generator triples
    for (const auto& [kf, hf] : data_.homs) {
        (void)hf;
        auto [a, b] = kf;
        for (const auto& [kg, hg] : data_.homs) {
            (void)hg;
            auto [b2, c] = kg;
            if (b2 != b) continue;
            for (const auto& [kh, hh] : data_.homs) {
                (void)hh;
                auto [c2, d] = kh;
                if (c2 != c) continue;
                for (const auto& f : generators(a, b))
                    for (const auto& g : generators(b, c))
                        for (const auto& e : generators(c, d)) {
                            HomElement lhs = compose(e, compose(g, f));
                            HomElement rhs = compose(compose(e, g), f);
                            if (!(lhs.coords == rhs.coords))
                                rep.add("associativity",
                                        "fails for " + el_str(*this, f) + " ; " + el_str(*this, g) +
                                            " ; " + el_str(*this, e));
                        }
            }
        }
    }
    return rep;
}

ValidationReport validate_category(const NegDgCategory& category) { return category.validate(); }

}  // namespace twisthom
