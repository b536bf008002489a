#include "schubert/bruhat.hpp"

#include "schubert/patterns.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schubert {

bool bruhat_leq(const Permutation& x, const Permutation& w) {
    if (x.size() == w.size()) return RankTable::dominates(RankTable(x), RankTable(w));
    const int n = std::max(x.size(), w.size());
    return RankTable::dominates(RankTable(x.embedded(n)), RankTable(w.embedded(n)));
}

std::vector<Permutation> covers_down(const Permutation& w) {
    std::vector<Permutation> out;
    const int n = w.size();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (w(i) < w(j)) continue;
            // w * t_ij drops length by exactly 1 iff no value between w(j)
            // and w(i) sits between positions i and j.
            bool cover = true;
            for (int k = i + 1; k < j && cover; ++k)
                cover = !(w(j) < w(k) && w(k) < w(i));
            if (cover) out.push_back(w.swap_positions(i, j));
        }
    return out;
}

BruhatInterval::BruhatInterval(const Permutation& x, const Permutation& w)
    : top_(w), bottom_(x) {
    if (x.size() != w.size() || !bruhat_leq(x, w))
        throw std::invalid_argument("interval: bottom is not below top");
    const bool from_identity = x.is_identity();
    set_.insert(w);
    std::vector<Permutation> frontier{w};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& v : frontier)
            for (auto& u : covers_down(v)) {
                if (set_.count(u)) continue;
                // Nothing below u can dominate x once u fails to.
                if (!from_identity && !bruhat_leq(x, u)) continue;
                set_.insert(u);
                next.push_back(std::move(u));
            }
        frontier = std::move(next);
    }
    elements_.assign(set_.begin(), set_.end());
    std::sort(elements_.begin(), elements_.end(), [](const Permutation& a, const Permutation& b) {
        const int la = a.length(), lb = b.length();
        return la != lb ? la < lb : a < b;
    });
    for (const auto& v : elements_)
        for (auto& u : covers_down(v))
            if (set_.count(u)) covers_.emplace_back(v, u);
}

std::vector<BigInt> BruhatInterval::rank_sizes() const {
    const int lo = bottom_.length();
    std::vector<BigInt> sizes(top_.length() - lo + 1, 0);
    for (const auto& v : elements_) ++sizes[v.length() - lo];
    return sizes;
}

IntPolynomial BruhatInterval::rank_generating_function() const {
    return IntPolynomial(rank_sizes());
}

std::string BruhatInterval::to_dot() const {
    std::ostringstream out;
    out << "digraph interval {\n  rankdir=BT;\n";
    for (const auto& v : elements_)
        out << "  \"" << v.to_string() << "\";\n";
    for (const auto& [v, u] : covers_)
        out << "  \"" << u.to_string() << "\" -> \"" << v.to_string() << "\";\n";
    out << "}\n";
    return out.str();
}

IntPolynomial poincare(const Permutation& w) {
    return BruhatInterval(Permutation::identity(w.size()), w).rank_generating_function();
}

int tangent_dimension(const Permutation& v, const Permutation& w) {
    if (!bruhat_leq(v, w)) throw std::invalid_argument("tangent_dimension: v is not below w");
    const BruhatInterval interval(Permutation::identity(w.size()), w);
    int dim = 0;
    for (int i = 1; i <= w.size(); ++i)
        for (int j = i + 1; j <= w.size(); ++j)
            if (interval.contains(v.swap_positions(i, j))) ++dim;
    return dim;
}

int BruhatGraph::degree(int vertex) const {
    int d = 0;
    for (auto [a, b] : edges)
        if (a == vertex || b == vertex) ++d;
    return d;
}

bool BruhatGraph::is_regular_of_degree(int d) const {
    std::vector<int> deg(vertices.size(), 0);
    for (auto [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return std::all_of(deg.begin(), deg.end(), [d](int x) { return x == d; });
}

std::string BruhatGraph::to_dot() const {
    std::ostringstream out;
    out << "graph bruhat {\n";
    for (const auto& v : vertices)
        out << "  \"" << v.to_string() << "\";\n";
    for (auto [a, b] : edges)
        out << "  \"" << vertices[a].to_string() << "\" -- \"" << vertices[b].to_string()
            << "\";\n";
    out << "}\n";
    return out.str();
}

BruhatGraph bruhat_graph(const Permutation& w) {
    const BruhatInterval interval(Permutation::identity(w.size()), w);
    BruhatGraph g;
    g.top = w;
    g.vertices = interval.elements();
    std::unordered_map<Permutation, int, PermutationHash> index;
    for (size_t k = 0; k < g.vertices.size(); ++k) index.emplace(g.vertices[k], k);
    for (size_t k = 0; k < g.vertices.size(); ++k) {
        const auto& v = g.vertices[k];
        for (int i = 1; i <= w.size(); ++i)
            for (int j = i + 1; j <= w.size(); ++j) {
                if (v(i) < v(j)) continue;  // count each edge once, from its upper end
                auto it = index.find(v.swap_positions(i, j));
                if (it != index.end()) g.edges.emplace_back(it->second, static_cast<int>(k));
            }
    }
    return g;
}

std::vector<Permutation> bruhat_maximal(std::vector<Permutation> elems) {
    std::sort(elems.begin(), elems.end(), [](const Permutation& a, const Permutation& b) {
        const int la = a.length(), lb = b.length();
        return la != lb ? la > lb : a < b;
    });
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<Permutation> maximal;
    for (const auto& v : elems) {
        bool below = false;
        for (const auto& m : maximal)
            if (bruhat_leq(v, m)) {
                below = true;
                break;
            }
        if (!below) maximal.push_back(v);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

std::vector<Permutation> singular_locus(const Permutation& w) {
    const BruhatInterval interval(Permutation::identity(w.size()), w);
    const int lw = w.length();
    std::vector<Permutation> singular;
    for (const auto& v : interval.elements()) {
        int dim = 0;
        for (int i = 1; i <= w.size(); ++i)
            for (int j = i + 1; j <= w.size(); ++j)
                if (interval.contains(v.swap_positions(i, j))) ++dim;
        if (dim > lw) singular.push_back(v);
    }
    return bruhat_maximal(std::move(singular));
}

namespace {

// Generic-singularity models: pairs (bottom, top) such that the Schubert
// variety of the top is singular exactly along the orbit of the bottom.  The
// irreducible components of the singular locus of any X_w arise from interval
// embeddings of these models.

struct Model {
    Permutation bottom, top;
};

// Decreasing run b, b-1, ..., a.
void push_run(std::vector<int>& out, int b, int a) {
    for (int v = b; v >= a; --v) out.push_back(v);
}

// Top (M, b_r..b_1, c_s..c_1, a), bottom (b_r..b_1, a, M, c_s..c_1) on values
// a=1 < b's < c's < M.
Model model_4231(int r, int s) {
    const int N = r + s + 2;
    std::vector<int> top, bottom;
    top.push_back(N);
    push_run(top, r + 1, 2);
    push_run(top, r + s + 1, r + 2);
    top.push_back(1);
    push_run(bottom, r + 1, 2);
    bottom.push_back(1);
    bottom.push_back(N);
    push_run(bottom, r + s + 1, r + 2);
    return {Permutation(std::move(bottom)), Permutation(std::move(top))};
}

// Top (y, d_k..d_1, M, m, e_l..e_1, x), bottom (d_k..d_1, m, y, x, M, e_l..e_1)
// on values m=1 < d's < x < y < e's < M.
Model model_3412(int k, int l) {
    const int N = k + l + 4;
    const int x = k + 2, y = k + 3;
    std::vector<int> top, bottom;
    top.push_back(y);
    push_run(top, k + 1, 2);
    top.push_back(N);
    top.push_back(1);
    push_run(top, k + 3 + l, k + 4);
    top.push_back(x);
    push_run(bottom, k + 1, 2);
    bottom.push_back(1);
    bottom.push_back(y);
    bottom.push_back(x);
    bottom.push_back(N);
    push_run(bottom, k + 3 + l, k + 4);
    return {Permutation(std::move(bottom)), Permutation(std::move(top))};
}

// Top (y, M, g_c..g_1, m, x), bottom (m, y, g_c..g_1, x, M) on values
// m=1 < x=2 < g's < y < M; the central run g descends.
Model model_45312(int c) {
    const int N = c + 4;
    const int y = c + 3;
    std::vector<int> top, bottom;
    top.push_back(y);
    top.push_back(N);
    push_run(top, c + 2, 3);
    top.push_back(1);
    top.push_back(2);
    bottom.push_back(1);
    bottom.push_back(y);
    push_run(bottom, c + 2, 3);
    bottom.push_back(2);
    bottom.push_back(N);
    return {Permutation(std::move(bottom)), Permutation(std::move(top))};
}

std::vector<Model> singular_models(int max_size) {
    std::vector<Model> models;
    for (int r = 1; r + 3 <= max_size; ++r)
        for (int s = 1; r + s + 2 <= max_size; ++s) models.push_back(model_4231(r, s));
    for (int k = 0; k + 4 <= max_size; ++k)
        for (int l = 0; k + l + 4 <= max_size; ++l) models.push_back(model_3412(k, l));
    for (int c = 1; c + 4 <= max_size; ++c) models.push_back(model_45312(c));
    return models;
}

}  // namespace

std::vector<Permutation> singular_locus_by_patterns(const Permutation& w) {
    const int n = w.size();
    const int lw = w.length();
    std::vector<Permutation> candidates;
    for (const auto& model : singular_models(n)) {
        const int drop = model.top.length() - model.bottom.length();
        const int m = model.top.size();
        for (const auto& occ : occurrences_classical(w, model.top)) {
            // Rearrange the occurrence's values per the model bottom; the
            // embedding is valid when the length drop matches.
            std::vector<int> values(m);
            for (int k = 0; k < m; ++k) values[k] = w(occ.positions[k]);
            std::vector<int> sorted = values;
            std::sort(sorted.begin(), sorted.end());
            std::vector<int> entries = w.one_line();
            for (int k = 0; k < m; ++k)
                entries[occ.positions[k] - 1] = sorted[model.bottom(k + 1) - 1];
            Permutation v(std::move(entries));
            if (lw - v.length() == drop) candidates.push_back(std::move(v));
        }
    }
    return bruhat_maximal(std::move(candidates));
}

std::vector<Permutation> essential_set_E(const Permutation& w, int ambient_n) {
    if (ambient_n != w.size()) throw std::invalid_argument("essential_set_E: ambient mismatch");
    std::vector<Permutation> out;
    for (const auto& v : all_permutations(ambient_n)) {
        if (bruhat_leq(v, w)) continue;
        bool minimal = true;
        for (const auto& u : covers_down(v))
            if (!bruhat_leq(u, w)) {
                minimal = false;
                break;
            }
        if (minimal) out.push_back(v);
    }
    return out;
}

bool is_bigrassmannian(const Permutation& w) {
    return w.right_descents().size() <= 1 && w.inverse().right_descents().size() <= 1;
}

}  // namespace schubert
