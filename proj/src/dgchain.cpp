#include "twisthom/dgchain.hpp"

#include "twisthom/smith.hpp"

namespace twisthom {

DgChainInstance::GradedBasis DgChainInstance::graded_basis(ObjectIndex a, ObjectIndex b,
                                                           int degree) const {
    const Complex& p = objects_[a];
    const Complex& q = objects_[b];
    GradedBasis basis;
    for (const auto& [i, r] : p.ranks()) {
        std::size_t rows = q.rank(i + degree);
        if (!rows) continue;
        for (std::size_t row = 0; row < rows; ++row)
            for (std::size_t col = 0; col < r; ++col) {
                basis.index[{i, row, col}] = basis.positions.size();
                basis.positions.emplace_back(i, row, col);
            }
    }
    return basis;
}

IntMatrix DgChainInstance::graded_differential(ObjectIndex a, ObjectIndex b, int degree) const {
    // d_J(f) = d_Q . f - (-1)^degree f . d_P on elementary graded maps
    const Complex& p = objects_[a];
    const Complex& q = objects_[b];
    GradedBasis src = graded_basis(a, b, degree);
    GradedBasis tgt = graded_basis(a, b, degree + 1);
    IntMatrix m(tgt.positions.size(), src.positions.size());
    Integer sign = degree % 2 == 0 ? 1 : -1;
    for (std::size_t n = 0; n < src.positions.size(); ++n) {
        auto [i, row, col] = src.positions[n];
        IntMatrix dq = q.differential(i + degree);
        for (std::size_t r2 = 0; r2 < q.rank(i + degree + 1); ++r2)
            if (dq.at(r2, row) != 0) m.at(tgt.index.at({i, r2, col}), n) += dq.at(r2, row);
        IntMatrix dp = p.differential(i - 1);
        for (std::size_t c2 = 0; c2 < p.rank(i - 1); ++c2)
            if (dp.at(col, c2) != 0) {
                auto it = tgt.index.find({i - 1, row, c2});
                if (it != tgt.index.end()) m.at(it->second, n) -= sign * dp.at(col, c2);
            }
    }
    return m;
}

DgChainInstance DgChainInstance::build(std::vector<Complex> objects, std::vector<std::string> names) {
    for (const auto& c : objects) c.validate();
    DgChainInstance inst;
    inst.objects_ = std::move(objects);
    std::size_t n = inst.objects_.size();

    NegDgCategory::Data data;
    for (std::size_t i = 0; i < n; ++i)
        data.objects.push_back(i < names.size() ? names[i] : "C" + std::to_string(i));

    // hom complexes
    std::map<std::pair<ObjectIndex, ObjectIndex>, std::map<int, std::size_t>> ranks;
    for (ObjectIndex a = 0; a < n; ++a)
        for (ObjectIndex b = 0; b < n; ++b) {
            const Complex& p = inst.objects_[a];
            const Complex& q = inst.objects_[b];
            if (p.empty() || q.empty()) continue;
            int lo = q.min_degree() - p.max_degree();
            NegDgCategory::HomComplex hc;
            for (int d = lo; d < 0; ++d) {
                std::size_t r = inst.graded_basis(a, b, d).positions.size();
                if (r) hc.ranks[d] = r;
            }
            IntMatrix closed = kernel_basis(inst.graded_differential(a, b, 0));
            inst.chain_map_basis_[{a, b}] = closed;
            if (closed.cols()) hc.ranks[0] = closed.cols();
            for (int d = lo; d < 0; ++d) {
                if (!hc.ranks.count(d)) continue;
                IntMatrix dj = inst.graded_differential(a, b, d);
                if (d + 1 == 0) {
                    // express image inside the chain-map lattice
                    if (closed.cols() == 0) continue;
                    dj = solve_exact(closed, dj);
                }
                if (!dj.is_zero() && (d + 1 < 0 ? hc.ranks.count(d + 1) : closed.cols() > 0))
                    hc.differentials[d] = dj;
            }
            if (!hc.ranks.empty()) data.homs[{a, b}] = std::move(hc);
            ranks[{a, b}];  // touch
        }

    // identities: the identity graded map is a chain map
    for (ObjectIndex x = 0; x < n; ++x) {
        const IntMatrix& closed = inst.chain_map_basis_.count({x, x}) ? inst.chain_map_basis_[{x, x}]
                                                                      : IntMatrix(0, 0);
        GradedBasis basis = inst.graded_basis(x, x, 0);
        IntMatrix id_vec(basis.positions.size(), 1);
        for (std::size_t k = 0; k < basis.positions.size(); ++k) {
            auto [i, row, col] = basis.positions[k];
            (void)i;
            if (row == col) id_vec.at(k, 0) = 1;
        }
        std::vector<Integer> coords(closed.cols());
        if (closed.cols()) {
            IntMatrix sol = solve_exact(closed, id_vec);
            for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = sol.at(k, 0);
        }
        data.identities.push_back(std::move(coords));
    }

    // composition tables on generators
    auto graded_of_generator = [&](ObjectIndex a, ObjectIndex b, int d, std::size_t k) {
        GradedBasis basis = inst.graded_basis(a, b, d);
        IntMatrix vec(basis.positions.size(), 1);
        if (d == 0) {
            const IntMatrix& closed = inst.chain_map_basis_.at({a, b});
            for (std::size_t i = 0; i < closed.rows(); ++i) vec.at(i, 0) = closed.at(i, k);
        } else {
            vec.at(k, 0) = 1;
        }
        return vec;
    };
    for (ObjectIndex a = 0; a < n; ++a)
        for (ObjectIndex b = 0; b < n; ++b)
            for (ObjectIndex c = 0; c < n; ++c) {
                auto hab = data.homs.find({a, b});
                auto hbc = data.homs.find({b, c});
                if (hab == data.homs.end() || hbc == data.homs.end()) continue;
                for (const auto& [df, rf] : hab->second.ranks)
                    for (const auto& [dg, rg] : hbc->second.ranks) {
                        int d = df + dg;
                        std::size_t target_rank = 0;
                        auto hac = data.homs.find({a, c});
                        if (hac != data.homs.end()) {
                            auto it = hac->second.ranks.find(d);
                            if (it != hac->second.ranks.end()) target_rank = it->second;
                        }
                        if (!target_rank) continue;
                        GradedBasis fb = inst.graded_basis(a, b, df);
                        GradedBasis gb = inst.graded_basis(b, c, dg);
                        GradedBasis tb = inst.graded_basis(a, c, d);
                        IntMatrix tablem(target_rank, rf * rg);
                        bool nonzero = false;
                        for (std::size_t ig = 0; ig < rg; ++ig) {
                            IntMatrix gv = graded_of_generator(b, c, dg, ig);
                            for (std::size_t jf = 0; jf < rf; ++jf) {
                                IntMatrix fv = graded_of_generator(a, b, df, jf);
                                // composite graded map
                                IntMatrix comp(tb.positions.size(), 1);
                                for (std::size_t nf = 0; nf < fb.positions.size(); ++nf) {
                                    if (fv.at(nf, 0) == 0) continue;
                                    auto [i, r1, s1] = fb.positions[nf];
                                    for (std::size_t ng = 0; ng < gb.positions.size(); ++ng) {
                                        if (gv.at(ng, 0) == 0) continue;
                                        auto [i2, r2, s2] = gb.positions[ng];
                                        if (i2 == i + df && s2 == r1)
                                            comp.at(tb.index.at({i, r2, s1}), 0) +=
                                                gv.at(ng, 0) * fv.at(nf, 0);
                                    }
                                }
                                IntMatrix coords = comp;
                                if (d == 0) coords = solve_exact(inst.chain_map_basis_.at({a, c}), comp);
                                for (std::size_t k = 0; k < target_rank; ++k) {
                                    tablem.at(k, ig * rf + jf) = coords.at(k, 0);
                                    if (coords.at(k, 0) != 0) nonzero = true;
                                }
                            }
                        }
                        if (nonzero) data.compositions[{a, b, c, df, dg}] = std::move(tablem);
                    }
            }

    inst.category_ = NegDgCategory::create(std::move(data));
    return inst;
}

std::map<int, IntMatrix> DgChainInstance::graded_components(const HomElement& e) const {
    const Complex& p = objects_[e.source];
    const Complex& q = objects_[e.target];
    GradedBasis basis = graded_basis(e.source, e.target, e.degree);
    IntMatrix vec(basis.positions.size(), 1);
    if (e.degree == 0) {
        auto it = chain_map_basis_.find({e.source, e.target});
        if (it != chain_map_basis_.end())
            for (std::size_t i = 0; i < it->second.rows(); ++i)
                for (std::size_t k = 0; k < e.coords.size(); ++k)
                    vec.at(i, 0) += it->second.at(i, k) * e.coords[k];
    } else {
        for (std::size_t k = 0; k < e.coords.size(); ++k) vec.at(k, 0) = e.coords[k];
    }
    std::map<int, IntMatrix> out;
    for (std::size_t k = 0; k < basis.positions.size(); ++k) {
        if (vec.at(k, 0) == 0) continue;
        auto [i, row, col] = basis.positions[k];
        auto it = out.find(i);
        if (it == out.end())
            it = out.emplace(i, IntMatrix(q.rank(i + e.degree), p.rank(i))).first;
        it->second.at(row, col) = vec.at(k, 0);
    }
    return out;
}

HomElement DgChainInstance::element_from_graded(ObjectIndex a, ObjectIndex b, int degree,
                                                const std::map<int, IntMatrix>& components) const {
    GradedBasis basis = graded_basis(a, b, degree);
    IntMatrix vec(basis.positions.size(), 1);
    for (const auto& [i, m] : components)
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t c = 0; c < m.cols(); ++c) {
                if (m.at(r, c) == 0) continue;
                auto it = basis.index.find({i, r, c});
                if (it == basis.index.end()) throw ShapeMismatch("graded component at degree " + std::to_string(i));
                vec.at(it->second, 0) = m.at(r, c);
            }
    if (degree == 0) {
        auto it = chain_map_basis_.find({a, b});
        std::size_t rank0 = it == chain_map_basis_.end() ? 0 : it->second.cols();
        if (rank0 == 0) {
            if (!vec.is_zero()) throw NotChainMap("no nonzero chain maps here");
            return category_.zero(a, b, 0);
        }
        auto sol = try_solve_exact(it->second, vec);
        if (!sol) throw NotChainMap("graded map does not commute with the differentials");
        std::vector<Integer> coords(rank0);
        for (std::size_t k = 0; k < rank0; ++k) coords[k] = sol->at(k, 0);
        return category_.element(a, b, 0, std::move(coords));
    }
    std::vector<Integer> coords(vec.rows());
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = vec.at(k, 0);
    if (coords.size() != category_.hom_rank(a, b, degree)) {
        if (vec.is_zero()) return category_.zero(a, b, degree);
        throw ShapeMismatch("graded element in an absent hom degree");
    }
    return category_.element(a, b, degree, std::move(coords));
}

}  // namespace twisthom
