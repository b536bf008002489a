#include "schubert/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace schubert {

Permutation::Permutation(std::vector<int> one_line) : entries_(std::move(one_line)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int x : entries_) {
        if (x < 1 || x > n)
            throw std::invalid_argument("permutation value out of range: " + std::to_string(x));
        if (seen[x]) throw std::invalid_argument("duplicate permutation value: " + std::to_string(x));
        seen[x] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    Permutation w;
    w.entries_ = std::move(e);
    return w;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(size());
    for (int i = 0; i < size(); ++i) inv[entries_[i] - 1] = i + 1;
    Permutation w;
    w.entries_ = std::move(inv);
    return w;
}

Permutation Permutation::operator*(const Permutation& v) const {
    if (size() != v.size()) {
        const int m = std::max(size(), v.size());
        return embedded(m) * v.embedded(m);
    }
    std::vector<int> r(size());
    for (int i = 0; i < size(); ++i) r[i] = entries_[v.entries_[i] - 1];
    Permutation w;
    w.entries_ = std::move(r);
    return w;
}

Permutation Permutation::swap_positions(int i, int j) const {
    Permutation w = *this;
    std::swap(w.entries_[i - 1], w.entries_[j - 1]);
    return w;
}

Permutation Permutation::embedded(int m) const {
    if (m < size()) throw std::invalid_argument("embedded: target size too small");
    Permutation w = *this;
    for (int x = size() + 1; x <= m; ++x) w.entries_.push_back(x);
    return w;
}

int Permutation::length() const {
    int c = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (entries_[i] > entries_[j]) ++c;
    return c;
}

std::vector<std::pair<int, int>> Permutation::inversions() const {
    std::vector<std::pair<int, int>> inv;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (entries_[i] > entries_[j]) inv.emplace_back(i + 1, j + 1);
    return inv;
}

std::vector<int> Permutation::right_descents() const {
    std::vector<int> d;
    for (int i = 1; i < size(); ++i)
        if (entries_[i - 1] > entries_[i]) d.push_back(i);
    return d;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (entries_[i] != i + 1) return false;
    return true;
}

std::string Permutation::to_string() const {
    std::ostringstream out;
    for (int i = 0; i < size(); ++i) {
        if (i) out << ' ';
        out << entries_[i];
    }
    return out.str();
}

Permutation parse_permutation(const std::string& text) {
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<std::string> tokens;
    for (std::string tok; in >> tok;) tokens.push_back(tok);
    if (tokens.empty()) throw std::invalid_argument("empty permutation input");

    std::vector<int> values;
    const bool compact = tokens.size() == 1 && tokens[0].size() > 1 &&
                         std::all_of(tokens[0].begin(), tokens[0].end(),
                                     [](char c) { return c >= '1' && c <= '9'; });
    if (compact) {
        for (char c : tokens[0]) values.push_back(c - '0');
    } else {
        for (const auto& tok : tokens) {
            size_t pos = 0;
            int v;
            try {
                v = std::stoi(tok, &pos);
            } catch (const std::exception&) {
                throw std::invalid_argument("not an integer: " + tok);
            }
            if (pos != tok.size()) throw std::invalid_argument("not an integer: " + tok);
            values.push_back(v);
        }
    }
    return Permutation(std::move(values));
}

RankTable::RankTable(const Permutation& w) : n_(w.size()), rk_(n_ * n_, 0) {
    for (int j = 1; j <= n_; ++j) {
        for (int i = 1; i <= n_; ++i) {
            int v = j > 1 ? at(i, j - 1) : 0;
            if (w(j) <= i) ++v;
            rk_[(i - 1) * n_ + (j - 1)] = v;
        }
    }
}

Permutation RankTable::to_permutation() const {
    std::vector<int> w(n_);
    for (int j = 1; j <= n_; ++j) {
        for (int i = 1; i <= n_; ++i) {
            const int left = j > 1 ? at(i, j - 1) : 0;
            const int up = i > 1 ? at(i - 1, j) : 0;
            const int diag = (i > 1 && j > 1) ? at(i - 1, j - 1) : 0;
            if (at(i, j) - left - up + diag == 1) {
                w[j - 1] = i;
                break;
            }
        }
    }
    return Permutation(std::move(w));
}

bool RankTable::dominates(const RankTable& x, const RankTable& w) {
    if (x.n_ != w.n_) throw std::invalid_argument("rank table size mismatch");
    for (size_t k = 0; k < x.rk_.size(); ++k)
        if (x.rk_[k] < w.rk_[k]) return false;
    return true;
}

bool Diagram::contains(int i, int j) const {
    return std::binary_search(cells.begin(), cells.end(), std::make_pair(i, j));
}

Diagram diagram(const Permutation& w) {
    const int n = w.size();
    const Permutation winv = w.inverse();
    Diagram d;
    d.n = n;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (w(i) > j && winv(j) > i) d.cells.emplace_back(i, j);
    for (auto [i, j] : d.cells)
        if (!d.contains(i, j + 1) && !d.contains(i + 1, j)) d.essential.emplace_back(i, j);
    return d;
}

Diagram diagram_transposed(const Permutation& w) { return diagram(w.inverse()); }

std::vector<int> shape_of_diagram(const Permutation& w) {
    const Diagram d = diagram(w);
    std::vector<int> rows(w.size() + 1, 0);
    for (auto [i, j] : d.cells) ++rows[i];
    std::vector<int> shape;
    for (int r : rows)
        if (r > 0) shape.push_back(r);
    std::sort(shape.rbegin(), shape.rend());
    return shape;
}

Permutation flatten(const std::vector<int>& values) {
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("flatten: duplicate values");
    std::vector<int> r(values.size());
    for (size_t i = 0; i < values.size(); ++i)
        r[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), values[i]) -
                                sorted.begin()) +
               1;
    return Permutation(std::move(r));
}

Permutation permutation_from_word(const ReducedWord& word, int n) {
    Permutation w = Permutation::identity(n);
    for (int i : word) {
        if (i < 1 || i >= n) throw std::invalid_argument("generator index out of range");
        w = w.swap_positions(i, i + 1);
    }
    return w;
}

namespace {

void collect_words(const Permutation& w, ReducedWord& suffix, std::vector<ReducedWord>& out,
                   std::uint64_t cap) {
    const auto descents = w.right_descents();
    if (descents.empty()) {
        out.emplace_back(suffix.rbegin(), suffix.rend());
        if (out.size() > cap) throw budget_error("reduced word cap exceeded");
        return;
    }
    for (int i : descents) {
        suffix.push_back(i);
        collect_words(w.swap_positions(i, i + 1), suffix, out, cap);
        suffix.pop_back();
    }
}

}  // namespace

std::vector<ReducedWord> reduced_words(const Permutation& w, std::uint64_t cap) {
    std::vector<ReducedWord> out;
    ReducedWord suffix;
    collect_words(w, suffix, out, cap);
    return out;
}

BigInt reduced_word_count(const Permutation& w) {
    std::unordered_map<Permutation, BigInt, PermutationHash> memo;
    std::function<BigInt(const Permutation&)> go = [&](const Permutation& v) -> BigInt {
        const auto descents = v.right_descents();
        if (descents.empty()) return 1;
        auto it = memo.find(v);
        if (it != memo.end()) return it->second;
        BigInt c = 0;
        for (int i : descents) c += go(v.swap_positions(i, i + 1));
        memo.emplace(v, c);
        return c;
    };
    return go(w);
}

ReducedWord first_reduced_word(const Permutation& w) {
    // Peel the smallest left descent each step; the first letter of a reduced
    // word must be a left descent, so the greedy choice is lex-minimal.
    ReducedWord word;
    Permutation u = w;
    while (!u.is_identity()) {
        const Permutation uinv = u.inverse();
        const int i = uinv.right_descents().front();
        word.push_back(i);
        u = u.swap_positions(uinv(i), uinv(i + 1));
    }
    return word;
}

BigInt syt_count(const std::vector<int>& shape) {
    int prev = 1 << 30;
    long long total = 0;
    for (int part : shape) {
        if (part <= 0 || part > prev) throw std::invalid_argument("not a partition");
        prev = part;
        total += part;
    }
    std::vector<int> conj(shape.empty() ? 0 : shape.front(), 0);
    for (int part : shape)
        for (int j = 0; j < part; ++j) ++conj[j];
    BigInt num = 1;
    for (long long k = 2; k <= total; ++k) num *= k;
    BigInt den = 1;
    for (size_t i = 0; i < shape.size(); ++i)
        for (int j = 0; j < shape[i]; ++j) {
            const int hook = (shape[i] - j) + (conj[j] - static_cast<int>(i)) - 1;
            den *= hook;
        }
    return num / den;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(e));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

}  // namespace schubert
