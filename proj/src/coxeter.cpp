#include "schubert/coxeter.hpp"

#include "schubert/patterns.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace schubert {

namespace {

long long weight_for_label(int m) {
    switch (m) {
        case 3: return 1;
        case 4: return 2;
        case 6: return 3;
        case CoxeterGraph::infinite_label: return 4;
        default:
            throw std::invalid_argument("unsupported edge label " + std::to_string(m) +
                                        " (expected 3, 4, 6 or inf)");
    }
}

}  // namespace

CoxeterGraph::CoxeterGraph(int rank, const std::vector<std::tuple<int, int, int>>& edges)
    : rank_(rank), adj_(rank) {
    for (auto [i, j, m] : edges) {
        if (i < 1 || i > rank_ || j < 1 || j > rank_ || i == j)
            throw std::invalid_argument("bad edge endpoints");
        if (labels_.count({std::min(i, j), std::max(i, j)}))
            throw std::invalid_argument("duplicate edge");
        labels_[{std::min(i, j), std::max(i, j)}] = m;
        weights_[{i, j}] = weight_for_label(m);
        weights_[{j, i}] = 1;
        adj_[i - 1].push_back(j);
        adj_[j - 1].push_back(i);
    }
}

CoxeterGraph CoxeterGraph::parse(const std::string& text, int rank) {
    std::vector<std::tuple<int, int, int>> edges;
    int max_vertex = rank;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        int i, j;
        std::string m;
        if (!(ls >> i >> j >> m)) {
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw std::invalid_argument("bad graph line: " + line);
        }
        const int label = (m == "inf" || m == "0") ? infinite_label : std::stoi(m);
        edges.emplace_back(i, j, label);
        max_vertex = std::max({max_vertex, i, j});
    }
    return CoxeterGraph(max_vertex, edges);
}

CoxeterGraph CoxeterGraph::type_a(int rank) {
    std::vector<std::tuple<int, int, int>> edges;
    for (int i = 1; i < rank; ++i) edges.emplace_back(i, i + 1, 3);
    return CoxeterGraph(rank, edges);
}

CoxeterGraph CoxeterGraph::type_b(int rank) {
    std::vector<std::tuple<int, int, int>> edges;
    if (rank >= 2) edges.emplace_back(1, 2, 4);
    for (int i = 2; i < rank; ++i) edges.emplace_back(i, i + 1, 3);
    return CoxeterGraph(rank, edges);
}

int CoxeterGraph::label(int i, int j) const {
    auto it = labels_.find({std::min(i, j), std::max(i, j)});
    return it == labels_.end() ? 2 : it->second;
}

long long CoxeterGraph::firing_weight(int from, int to) const {
    auto it = weights_.find({from, to});
    return it == weights_.end() ? 0 : it->second;
}

GameState numbers_game_fire(const GameState& state, int vertex, const CoxeterGraph& graph) {
    if (vertex < 1 || vertex > graph.rank()) throw std::invalid_argument("invalid vertex");
    GameState next = state;
    for (int j : graph.neighbors(vertex))
        next[j - 1] += graph.firing_weight(vertex, j) * state[vertex - 1];
    next[vertex - 1] = -state[vertex - 1];
    if (next[vertex - 1] == 0) throw std::logic_error("numbers game reached value 0");
    return next;
}

CoxeterElement::CoxeterElement(std::shared_ptr<const CoxeterGraph> graph, GameState values,
                               std::vector<int> word)
    : graph_(std::move(graph)), values_(std::move(values)), word_(std::move(word)) {}

CoxeterElement CoxeterElement::identity(std::shared_ptr<const CoxeterGraph> graph) {
    GameState ones(graph->rank(), 1);
    return CoxeterElement(std::move(graph), std::move(ones), {});
}

CoxeterElement CoxeterElement::times_generator(int i) const {
    auto word = word_;
    word.push_back(i);
    return CoxeterElement(graph_, numbers_game_fire(values_, i, *graph_), std::move(word));
}

std::vector<int> CoxeterElement::right_descents() const {
    std::vector<int> d;
    for (int i = 1; i <= graph_->rank(); ++i)
        if (values_[i - 1] < 0) d.push_back(i);
    return d;
}

std::vector<int> CoxeterElement::reduced_word(std::uint64_t max_steps) const {
    std::vector<int> word;
    GameState state = values_;
    std::uint64_t steps = 0;
    while (true) {
        int descent = 0;
        for (int i = 1; i <= graph_->rank(); ++i)
            if (state[i - 1] < 0) {
                descent = i;
                break;
            }
        if (descent == 0) break;
        if (++steps > max_steps) throw budget_error("descent stripping exceeded the step budget");
        word.push_back(descent);
        state = numbers_game_fire(state, descent, *graph_);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

int CoxeterElement::length(std::uint64_t max_steps) const {
    return static_cast<int>(reduced_word(max_steps).size());
}

CoxeterElement canonical_form(const std::vector<int>& word,
                              std::shared_ptr<const CoxeterGraph> graph) {
    GameState state(graph->rank(), 1);
    for (int i : word) state = numbers_game_fire(state, i, *graph);
    auto elem = CoxeterElement(graph, std::move(state), {});
    return CoxeterElement(graph, elem.values(), elem.reduced_word());
}

std::unordered_set<GameState, GameStateHash> lower_interval(const CoxeterElement& w) {
    const auto word = w.reduced_word();
    const auto& graph = w.graph();
    std::unordered_set<GameState, GameStateHash> elems;
    elems.insert(GameState(graph.rank(), 1));
    // Subword closure: after each letter, keep both the untouched elements and
    // the fired ones.
    for (int i : word) {
        std::vector<GameState> fired;
        for (const auto& s : elems) fired.push_back(numbers_game_fire(s, i, graph));
        for (auto& s : fired) elems.insert(std::move(s));
    }
    return elems;
}

std::tuple<int, int, bool> length_and_bruhat(const CoxeterElement& x, const CoxeterElement& w) {
    const int lx = x.length();
    const int lw = w.length();
    const auto below = lower_interval(w);
    return {lx, lw, below.count(x.values()) > 0};
}

std::vector<std::vector<int>> positive_roots(RootSystemType type, int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    std::vector<std::vector<int>> roots;
    const int dim = type == RootSystemType::A ? rank + 1 : rank;
    auto root = [dim]() { return std::vector<int>(dim, 0); };
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            auto r = root();
            r[i] = 1;
            r[j] = -1;
            roots.push_back(r);  // e_i - e_j
            if (type == RootSystemType::B || type == RootSystemType::C ||
                type == RootSystemType::D) {
                auto s = root();
                s[i] = 1;
                s[j] = 1;
                roots.push_back(s);  // e_i + e_j
            }
        }
    if (type == RootSystemType::B)
        for (int i = 0; i < dim; ++i) {
            auto r = root();
            r[i] = 1;
            roots.push_back(r);  // e_i
        }
    if (type == RootSystemType::C)
        for (int i = 0; i < dim; ++i) {
            auto r = root();
            r[i] = 2;
            roots.push_back(r);  // 2 e_i
        }
    return roots;
}

namespace {

std::vector<int> apply_ambient(const AmbientElement& w, const std::vector<int>& v) {
    std::vector<int> out(v.size(), 0);
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k] == 0) continue;
        const int image = w[k];
        const int idx = std::abs(image) - 1;
        out[idx] += (image > 0 ? 1 : -1) * v[k];
    }
    return out;
}

bool is_negative_root(const std::vector<int>& r) {
    for (int c : r) {
        if (c < 0) return true;
        if (c > 0) return false;
    }
    return false;
}

}  // namespace

AmbientElement ambient_from_permutation(const Permutation& w, int dim) {
    if (w.size() > dim) throw std::invalid_argument("ambient dimension too small");
    AmbientElement e(dim);
    for (int i = 1; i <= dim; ++i) e[i - 1] = i <= w.size() ? w(i) : i;
    return e;
}

AmbientElement ambient_from_signed(const SignedPermutation& w) {
    AmbientElement e(w.size());
    for (int i = 1; i <= w.size(); ++i) e[i - 1] = w(i);
    return e;
}

std::vector<std::vector<int>> inversion_roots(const Permutation& w, RootSystemType type) {
    if (type != RootSystemType::A) throw std::invalid_argument("unsigned input needs type A");
    std::vector<std::vector<int>> out;
    const AmbientElement e = ambient_from_permutation(w, w.size());
    for (const auto& r : positive_roots(type, w.size() - 1))
        if (is_negative_root(apply_ambient(e, r))) out.push_back(r);
    return out;
}

std::vector<std::vector<int>> inversion_roots(const SignedPermutation& w, RootSystemType type) {
    if (type == RootSystemType::A) throw std::invalid_argument("signed input needs type B, C or D");
    std::vector<std::vector<int>> out;
    const AmbientElement e = ambient_from_signed(w);
    for (const auto& r : positive_roots(type, w.size()))
        if (is_negative_root(apply_ambient(e, r))) out.push_back(r);
    return out;
}

namespace {

// Exact rational span membership via Gaussian elimination on the basis rows.
class RationalSpan {
public:
    explicit RationalSpan(const std::vector<std::vector<int>>& generators) {
        for (const auto& g : generators) {
            std::vector<BigRational> row(g.begin(), g.end());
            add_row(std::move(row));
        }
    }

    bool contains(const std::vector<int>& v) const {
        std::vector<BigRational> row(v.begin(), v.end());
        reduce(row);
        return std::all_of(row.begin(), row.end(),
                           [](const BigRational& x) { return x == 0; });
    }

private:
    void add_row(std::vector<BigRational> row) {
        reduce(row);
        for (size_t k = 0; k < row.size(); ++k)
            if (row[k] != 0) {
                const BigRational lead = row[k];
                for (auto& x : row) x /= lead;
                // Keep reduced row echelon form so reduce() is order-free.
                for (auto& [pivot, basis] : rows_) {
                    const BigRational f = basis[k];
                    if (f == 0) continue;
                    for (size_t c = 0; c < basis.size(); ++c) basis[c] -= f * row[c];
                }
                rows_.emplace_back(k, std::move(row));
                return;
            }
    }

    void reduce(std::vector<BigRational>& row) const {
        for (const auto& [pivot, basis] : rows_) {
            if (row[pivot] == 0) continue;
            const BigRational f = row[pivot];
            for (size_t k = 0; k < row.size(); ++k) row[k] -= f * basis[k];
        }
    }

    std::vector<std::pair<size_t, std::vector<BigRational>>> rows_;
};

// Reflection through alpha as a signed permutation of coordinates; valid for
// classical roots e_i - e_j, e_i + e_j, e_i and 2 e_i.
AmbientElement reflection_of_root(const std::vector<int>& alpha) {
    const int dim = static_cast<int>(alpha.size());
    std::vector<int> support;
    for (int k = 0; k < dim; ++k)
        if (alpha[k] != 0) support.push_back(k);
    AmbientElement e(dim);
    std::iota(e.begin(), e.end(), 1);
    if (support.size() == 1) {
        e[support[0]] = -(support[0] + 1);  // sign change
    } else if (support.size() == 2) {
        const int a = support[0], b = support[1];
        if (alpha[a] * alpha[b] < 0) {  // e_a - e_b: transposition
            e[a] = b + 1;
            e[b] = a + 1;
        } else {  // e_a + e_b: signed transposition
            e[a] = -(b + 1);
            e[b] = -(a + 1);
        }
    } else {
        throw std::invalid_argument("root is not of classical shape");
    }
    return e;
}

}  // namespace

AmbientElement ambient_compose(const AmbientElement& x, const AmbientElement& y) {
    AmbientElement out(x.size());
    for (size_t k = 0; k < x.size(); ++k) {
        const int m = y[k];
        const int img = x[std::abs(m) - 1];
        out[k] = m > 0 ? img : -img;
    }
    return out;
}

int RootSubsystem::length(const AmbientElement& x) const {
    int c = 0;
    for (const auto& alpha : positive)
        if (is_negative_root(apply_ambient(x, alpha))) ++c;
    return c;
}

RootSubsystem root_subsystem(const RootSubsystemSelector& selector) {
    RootSubsystem sub;
    const auto ambient = positive_roots(selector.ambient_type, selector.ambient_rank);
    sub.ambient_dim =
        selector.ambient_type == RootSystemType::A ? selector.ambient_rank + 1 : selector.ambient_rank;
    const RationalSpan span(selector.spanning_roots);
    for (const auto& r : ambient)
        if (span.contains(r)) sub.positive.push_back(r);

    // Simple roots: positive subsystem roots that are not a sum of two others.
    std::set<std::vector<int>> pos(sub.positive.begin(), sub.positive.end());
    for (const auto& r : sub.positive) {
        bool decomposable = false;
        for (const auto& a : sub.positive) {
            std::vector<int> diff(r.size());
            for (size_t k = 0; k < r.size(); ++k) diff[k] = r[k] - a[k];
            if (pos.count(diff)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) sub.simple.push_back(r);
    }
    for (const auto& alpha : sub.simple) sub.simple_reflections.push_back(reflection_of_root(alpha));
    return sub;
}

std::vector<AmbientElement> subsystem_elements(const RootSubsystem& sub, size_t budget) {
    AmbientElement id(sub.ambient_dim);
    std::iota(id.begin(), id.end(), 1);
    std::unordered_set<AmbientElement, AmbientElementHash> seen{id};
    std::vector<AmbientElement> frontier{id}, all{id};
    while (!frontier.empty()) {
        std::vector<AmbientElement> next;
        for (const auto& x : frontier)
            for (const auto& r : sub.simple_reflections) {
                AmbientElement y = ambient_compose(x, r);
                if (seen.insert(y).second) {
                    if (seen.size() > budget) throw budget_error("reflection subgroup too large");
                    all.push_back(y);
                    next.push_back(std::move(y));
                }
            }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end());
    return all;
}

AmbientElement flatten_parabolic(const AmbientElement& w, const RootSubsystem& sub) {
    if (static_cast<int>(w.size()) != sub.ambient_dim)
        throw std::invalid_argument("flatten_parabolic: dimension mismatch");
    std::set<std::vector<int>> target;
    for (const auto& alpha : sub.positive)
        if (is_negative_root(apply_ambient(w, alpha))) target.insert(alpha);
    for (const auto& x : subsystem_elements(sub)) {
        std::set<std::vector<int>> inv;
        for (const auto& alpha : sub.positive)
            if (is_negative_root(apply_ambient(x, alpha))) inv.insert(alpha);
        if (inv == target) return x;
    }
    throw std::invalid_argument(
        "flatten_parabolic: no subsystem element realizes the half-space "
        "(the reflection subgroup is not parabolic)");
}

AmbientElement ambient_inverse(const AmbientElement& w) {
    AmbientElement inv(w.size());
    for (size_t k = 0; k < w.size(); ++k) {
        const int m = w[k];
        inv[std::abs(m) - 1] = m > 0 ? static_cast<int>(k) + 1 : -(static_cast<int>(k) + 1);
    }
    return inv;
}

AmbientElement equivariant_pattern_map(const AmbientElement& w, const RootSubsystem& sub) {
    return ambient_inverse(flatten_parabolic(ambient_inverse(w), sub));
}

const std::vector<SignedPermutation>& bn_smooth_patterns() {
    static const std::vector<SignedPermutation> v = [] {
        const std::vector<std::vector<int>> raw = {
            {-2, -1},
            {1, 2, -3}, {1, -2, -3}, {-1, 2, -3}, {2, -1, -3}, {-2, 1, -3}, {3, -2, 1},
            {2, -4, 3, 1}, {-2, -4, 3, 1}, {3, 4, 1, 2}, {3, 4, -1, 2}, {-3, 4, 1, 2},
            {4, 1, 3, -2}, {4, -1, 3, -2}, {4, 2, 3, 1}, {4, 2, 3, -1}, {-4, 2, 3, 1},
        };
        std::vector<SignedPermutation> out;
        out.reserve(raw.size());
        for (const auto& e : raw) out.push_back(SignedPermutation(e));
        return out;
    }();
    return v;
}

bool bn_is_smooth(const SignedPermutation& w) { return signed_avoids_all(w, bn_smooth_patterns()); }

std::unordered_set<SignedPermutation, SignedPermutationHash> bn_lower_interval(
    const SignedPermutation& w) {
    std::unordered_set<SignedPermutation, SignedPermutationHash> elems;
    elems.insert(SignedPermutation::identity(w.size()));
    for (int i : w.reduced_word()) {
        std::vector<SignedPermutation> fired;
        fired.reserve(elems.size());
        for (const auto& s : elems) fired.push_back(s.apply_generator(i));
        for (auto& s : fired) elems.insert(std::move(s));
    }
    return elems;
}

IntPolynomial bn_rank_generating_function(const SignedPermutation& w) {
    std::vector<BigInt> coeffs(w.length() + 1, 0);
    for (const auto& v : bn_lower_interval(w)) coeffs[v.length()] += 1;
    return IntPolynomial(std::move(coeffs));
}

}  // namespace schubert
