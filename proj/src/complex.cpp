#include "twisthom/complex.hpp"

namespace twisthom {

Complex::Complex(std::map<int, std::size_t> ranks, std::map<int, IntMatrix> differentials)
    : ranks_(std::move(ranks)), differentials_(std::move(differentials)) {
    for (auto it = ranks_.begin(); it != ranks_.end();) {
        if (it->second == 0) it = ranks_.erase(it);
        else ++it;
    }
    for (auto it = differentials_.begin(); it != differentials_.end();) {
        if (it->second.is_zero()) it = differentials_.erase(it);
        else ++it;
    }
    for (const auto& [i, d] : differentials_)
        if (d.rows() != rank(i + 1) || d.cols() != rank(i))
            throw ShapeMismatch("differential at degree " + std::to_string(i));
}

Complex Complex::concentrated(int degree, std::size_t rank_) {
    if (rank_ == 0) return {};
    return Complex({{degree, rank_}}, {});
}

std::size_t Complex::rank(int i) const {
    auto it = ranks_.find(i);
    return it == ranks_.end() ? 0 : it->second;
}

IntMatrix Complex::differential(int i) const {
    auto it = differentials_.find(i);
    if (it != differentials_.end()) return it->second;
    return IntMatrix(rank(i + 1), rank(i));
}

int Complex::min_degree() const { return ranks_.empty() ? 0 : ranks_.begin()->first; }
int Complex::max_degree() const { return ranks_.empty() ? 0 : ranks_.rbegin()->first; }

void Complex::validate() const {
    for (const auto& [i, r] : ranks_) {
        (void)r;
        if (!(differential(i + 1) * differential(i)).is_zero())
            throw NotAComplex("d^2 != 0 between degrees " + std::to_string(i) + " and " +
                              std::to_string(i + 2));
    }
}

FgAbGroup Complex::homology(int i, const Coefficient& coeff) const {
    return homology_at(differential(i - 1), differential(i), coeff);
}

std::map<int, FgAbGroup> Complex::homology(const Coefficient& coeff) const {
    std::map<int, FgAbGroup> out;
    for (const auto& [i, r] : ranks_) {
        (void)r;
        FgAbGroup h = homology(i, coeff);
        if (!h.is_trivial()) out[i] = h;
    }
    return out;
}

Complex Complex::shifted(int n) const {
    std::map<int, std::size_t> ranks;
    std::map<int, IntMatrix> diffs;
    for (const auto& [i, r] : ranks_) ranks[i - n] = r;
    for (const auto& [i, d] : differentials_) diffs[i - n] = (n % 2 == 0) ? d : -d;
    return Complex(std::move(ranks), std::move(diffs));
}

Complex Complex::direct_sum(const std::vector<Complex>& parts) {
    std::map<int, std::size_t> ranks;
    std::map<int, IntMatrix> diffs;
    int lo = 0, hi = -1;
    bool any = false;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        lo = any ? std::min(lo, p.min_degree()) : p.min_degree();
        hi = any ? std::max(hi, p.max_degree()) : p.max_degree();
        any = true;
    }
    if (!any) return {};
    for (int i = lo; i <= hi; ++i) {
        std::size_t r = 0;
        for (const auto& p : parts) r += p.rank(i);
        if (r) ranks[i] = r;
    }
    for (int i = lo; i < hi; ++i) {
        std::vector<IntMatrix> blocks;
        for (const auto& p : parts) blocks.push_back(p.differential(i));
        IntMatrix d = IntMatrix::diag_blocks(blocks);
        if (!d.is_zero()) diffs[i] = d;
    }
    return Complex(std::move(ranks), std::move(diffs));
}

void require_chain_map(const Complex& x, const Complex& y, const std::map<int, IntMatrix>& f,
                       const std::string& what) {
    auto component = [&](int i) {
        auto it = f.find(i);
        if (it != f.end()) {
            if (it->second.rows() != y.rank(i) || it->second.cols() != x.rank(i))
                throw ShapeMismatch(what + " component at degree " + std::to_string(i));
            return it->second;
        }
        return IntMatrix(y.rank(i), x.rank(i));
    };
    if (x.empty()) return;
    for (int i = x.min_degree() - 1; i <= x.max_degree(); ++i)
        if (component(i + 1) * x.differential(i) != y.differential(i) * component(i))
            throw NotChainMap(what + " at degree " + std::to_string(i));
}

Complex mapping_cone(const Complex& x, const Complex& y, const std::map<int, IntMatrix>& f) {
    require_chain_map(x, y, f, "cone input");
    auto component = [&](int i) {
        auto it = f.find(i);
        return it != f.end() ? it->second : IntMatrix(y.rank(i), x.rank(i));
    };
    std::map<int, std::size_t> ranks;
    std::map<int, IntMatrix> diffs;
    int lo = 0, hi = -1;
    bool any = false;
    auto widen = [&](int a, int b) {
        lo = any ? std::min(lo, a) : a;
        hi = any ? std::max(hi, b) : b;
        any = true;
    };
    if (!x.empty()) widen(x.min_degree() - 1, x.max_degree() - 1);
    if (!y.empty()) widen(y.min_degree(), y.max_degree());
    if (!any) return {};
    for (int i = lo; i <= hi; ++i) {
        std::size_t r = x.rank(i + 1) + y.rank(i);
        if (r) ranks[i] = r;
    }
    for (int i = lo; i < hi; ++i) {
        std::size_t rx = x.rank(i + 1), ry = y.rank(i);
        IntMatrix d(x.rank(i + 2) + y.rank(i + 1), rx + ry);
        IntMatrix dx = x.differential(i + 1), dy = y.differential(i), fi = component(i + 1);
        for (std::size_t a = 0; a < x.rank(i + 2); ++a)
            for (std::size_t b = 0; b < rx; ++b) d.at(a, b) = -dx.at(a, b);
        for (std::size_t a = 0; a < y.rank(i + 1); ++a)
            for (std::size_t b = 0; b < rx; ++b) d.at(x.rank(i + 2) + a, b) = fi.at(a, b);
        for (std::size_t a = 0; a < y.rank(i + 1); ++a)
            for (std::size_t b = 0; b < ry; ++b) d.at(x.rank(i + 2) + a, rx + b) = dy.at(a, b);
        if (!d.is_zero()) diffs[i] = d;
    }
    return Complex(std::move(ranks), std::move(diffs));
}

}  // namespace twisthom
