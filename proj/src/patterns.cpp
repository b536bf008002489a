#include "schubert/patterns.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace schubert {

PatternSpec PatternSpec::classical(Permutation p) {
    PatternSpec s;
    s.kind = PatternKind::classical;
    s.pattern = std::move(p);
    return s;
}

PatternSpec PatternSpec::adjacency(Permutation p, std::vector<std::pair<int, int>> pairs) {
    PatternSpec s;
    s.kind = PatternKind::adjacency;
    s.pattern = std::move(p);
    for (auto [a, b] : pairs)
        if (b != a + 1 || a < 1 || b > s.pattern.size())
            throw std::invalid_argument("malformed adjacency pair");
    s.adjacency_pairs = std::move(pairs);
    return s;
}

PatternSpec PatternSpec::bruhat_restricted(Permutation p, std::vector<std::pair<int, int>> ts) {
    PatternSpec s;
    s.kind = PatternKind::bruhat_restricted;
    s.pattern = std::move(p);
    for (auto [a, b] : ts)
        if (!(1 <= a && a < b && b <= s.pattern.size()))
            throw std::invalid_argument("malformed Bruhat restriction");
    s.restrictions = std::move(ts);
    return s;
}

PatternSpec PatternSpec::interval(Permutation u, Permutation v) {
    PatternSpec s;
    s.kind = PatternKind::interval;
    s.lower = std::move(u);
    s.pattern = std::move(v);
    return s;
}

PatternSpec PatternSpec::signed_pattern_of(SignedPermutation p) {
    PatternSpec s;
    s.kind = PatternKind::signed_kind;
    s.signed_pattern = std::move(p);
    return s;
}

namespace {

// Relative-order consistency of a new value against the chosen prefix.
bool order_compatible(const std::vector<int>& chosen, int value, const Permutation& pattern,
                      int k) {
    for (int a = 0; a < k; ++a) {
        const bool host_less = chosen[a] < value;
        const bool pat_less = pattern(a + 1) < pattern(k + 1);
        if (host_less != pat_less) return false;
    }
    return true;
}

struct MatchState {
    const Permutation& host;
    const Permutation& pattern;
    const std::vector<std::pair<int, int>>* adjacency = nullptr;
    std::optional<std::uint64_t> limit;
    std::vector<int> positions;
    std::vector<int> values;
    std::vector<Occurrence> found;
    bool done = false;

    void search(int k, int from) {
        if (done) return;
        const int m = pattern.size();
        if (k == m) {
            found.push_back(Occurrence{positions});
            if (limit && found.size() >= *limit) done = true;
            return;
        }
        int lo = from;
        int hi = host.size() - (m - k) + 1;
        if (adjacency) {
            for (auto [a, b] : *adjacency)
                if (b == k + 1) lo = hi = positions[a - 1] + 1;
        }
        for (int p = lo; p <= hi && !done; ++p) {
            const int v = host(p);
            if (!order_compatible(values, v, pattern, k)) continue;
            positions.push_back(p);
            values.push_back(v);
            search(k + 1, p + 1);
            positions.pop_back();
            values.pop_back();
        }
    }
};

// l(w * t_ij) - l(w) for i < j, computed in O(j - i).
int length_diff_transposition(const Permutation& w, int i, int j) {
    const int wi = w(i), wj = w(j);
    int between = 0;
    for (int k = i + 1; k < j; ++k) {
        const int v = w(k);
        if ((wi < v && v < wj) || (wj < v && v < wi)) ++between;
    }
    const int mag = 1 + 2 * between;
    return wi < wj ? mag : -mag;
}

}  // namespace

std::vector<Occurrence> occurrences_classical(const Permutation& host, const Permutation& pattern,
                                              std::optional<std::uint64_t> limit) {
    if (pattern.size() > host.size()) return {};
    MatchState st{host, pattern};
    st.limit = limit;
    st.search(0, 1);
    return st.found;
}

bool contains_classical(const Permutation& host, const Permutation& pattern) {
    return !occurrences_classical(host, pattern, 1).empty();
}

bool avoids_classical(const Permutation& host, const Permutation& pattern) {
    return !contains_classical(host, pattern);
}

bool avoids_all(const Permutation& host, const std::vector<Permutation>& patterns) {
    for (const auto& p : patterns)
        if (contains_classical(host, p)) return false;
    return true;
}

bool contains_adjacency(const Permutation& host, const PatternSpec& spec) {
    if (spec.kind != PatternKind::adjacency) throw std::invalid_argument("expected adjacency spec");
    return find_occurrence(host, spec).has_value();
}

bool contains_bruhat_restricted(const Permutation& host, const PatternSpec& spec) {
    if (spec.kind != PatternKind::bruhat_restricted)
        throw std::invalid_argument("expected Bruhat-restricted spec");
    return find_occurrence(host, spec).has_value();
}

std::optional<Occurrence> find_occurrence(const Permutation& host, const PatternSpec& spec) {
    if (spec.pattern.size() > host.size()) return std::nullopt;
    switch (spec.kind) {
        case PatternKind::classical: {
            auto occ = occurrences_classical(host, spec.pattern, 1);
            if (occ.empty()) return std::nullopt;
            return occ.front();
        }
        case PatternKind::adjacency: {
            MatchState st{host, spec.pattern};
            st.adjacency = &spec.adjacency_pairs;
            st.limit = 1;
            st.search(0, 1);
            if (st.found.empty()) return std::nullopt;
            return st.found.front();
        }
        case PatternKind::bruhat_restricted: {
            std::vector<int> expected;
            for (auto [a, b] : spec.restrictions)
                expected.push_back(length_diff_transposition(spec.pattern, a, b));
            // Occurrences in lex order; keep the first one passing every
            // length-difference restriction.
            for (const auto& occ : occurrences_classical(host, spec.pattern)) {
                bool ok = true;
                for (size_t r = 0; r < spec.restrictions.size() && ok; ++r) {
                    auto [a, b] = spec.restrictions[r];
                    ok = length_diff_transposition(host, occ.positions[a - 1],
                                                   occ.positions[b - 1]) == expected[r];
                }
                if (ok) return occ;
            }
            return std::nullopt;
        }
        default:
            throw std::invalid_argument("find_occurrence: unsupported pattern kind");
    }
}

std::optional<Occurrence> interval_embeds(const Permutation& u, const Permutation& v,
                                          const Permutation& x, const Permutation& y) {
    if (u.size() != v.size() || x.size() != y.size())
        throw std::invalid_argument("interval_embeds: size mismatch");
    if (!RankTable::dominates(RankTable(u), RankTable(v)))
        throw std::invalid_argument("interval_embeds: u is not below v");
    if (!RankTable::dominates(RankTable(x), RankTable(y)))
        throw std::invalid_argument("interval_embeds: x is not below y");
    if (u.size() > x.size()) return std::nullopt;
    if (v.length() - u.length() != y.length() - x.length()) return std::nullopt;

    const int m = u.size();
    for (const auto& occ : occurrences_classical(y, v)) {
        bool agree = true;
        size_t next = 0;
        for (int p = 1; p <= x.size() && agree; ++p) {
            if (next < occ.positions.size() && occ.positions[next] == p) {
                ++next;
                continue;
            }
            agree = x(p) == y(p);
        }
        if (!agree) continue;
        std::vector<int> xvals(m);
        for (int k = 0; k < m; ++k) xvals[k] = x(occ.positions[k]);
        if (flatten(xvals) == u) return occ;
    }
    return std::nullopt;
}

bool signed_contains(const SignedPermutation& host, const SignedPermutation& pattern) {
    const int n = host.size(), m = pattern.size();
    if (m > n) return false;
    std::vector<int> positions;
    std::function<bool(int, int)> search = [&](int k, int from) -> bool {
        if (k == m) return true;
        for (int p = from; p <= n - (m - k) + 1; ++p) {
            const int hv = host(p), pv = pattern(k + 1);
            if ((hv < 0) != (pv < 0)) continue;
            bool ok = true;
            for (int a = 0; a < k && ok; ++a) {
                const bool host_less = std::abs(host(positions[a])) < std::abs(hv);
                const bool pat_less = std::abs(pattern(a + 1)) < std::abs(pv);
                ok = host_less == pat_less;
            }
            if (!ok) continue;
            positions.push_back(p);
            if (search(k + 1, p + 1)) return true;
            positions.pop_back();
        }
        return false;
    };
    return search(0, 1);
}

bool signed_avoids_all(const SignedPermutation& host, const std::vector<SignedPermutation>& ps) {
    for (const auto& p : ps)
        if (signed_contains(host, p)) return false;
    return true;
}

namespace {

std::vector<int> digits_of(const std::string& s) {
    std::vector<int> out;
    for (char c : s) {
        if (c < '1' || c > '9') throw std::invalid_argument("expected digits 1..9: " + s);
        out.push_back(c - '0');
    }
    return out;
}

}  // namespace

PatternSpec parse_pattern_spec(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty pattern");
    if (text.front() == '(') return PatternSpec::signed_pattern_of(parse_signed_permutation(text));
    if (text.front() == '[') {
        if (text.back() != ']') throw std::invalid_argument("unterminated interval pattern");
        const std::string body = text.substr(1, text.size() - 2);
        const auto comma = body.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("interval pattern needs two permutations");
        return PatternSpec::interval(parse_permutation(body.substr(0, comma)),
                                     parse_permutation(body.substr(comma + 1)));
    }
    const auto bang = text.find('!');
    if (bang != std::string::npos) {
        Permutation p(digits_of(text.substr(0, bang)));
        std::vector<std::pair<int, int>> ts;
        std::string rest = text.substr(bang + 1);
        std::replace(rest.begin(), rest.end(), ',', ' ');
        std::istringstream in(rest);
        for (std::string tok; in >> tok;) {
            if (tok.size() != 3 || tok[0] != 't')
                throw std::invalid_argument("expected t<a><b> restriction: " + tok);
            ts.emplace_back(tok[1] - '0', tok[2] - '0');
        }
        return PatternSpec::bruhat_restricted(std::move(p), std::move(ts));
    }
    if (text.find('_') != std::string::npos) {
        std::vector<int> values;
        std::vector<int> run_ids;
        std::vector<std::pair<int, int>> pairs;
        bool in_run = false;
        int current_run = 0;
        for (char c : text) {
            if (c == '_') {
                in_run = !in_run;
                if (in_run) ++current_run;
                continue;
            }
            if (c < '1' || c > '9') throw std::invalid_argument("expected digits 1..9");
            values.push_back(c - '0');
            run_ids.push_back(in_run ? current_run : 0);
            const int k = static_cast<int>(values.size());
            if (k >= 2 && run_ids[k - 1] != 0 && run_ids[k - 1] == run_ids[k - 2])
                pairs.emplace_back(k - 1, k);
        }
        if (in_run) throw std::invalid_argument("unterminated adjacency run");
        return PatternSpec::adjacency(Permutation(std::move(values)), std::move(pairs));
    }
    return PatternSpec::classical(Permutation(digits_of(text)));
}

}  // namespace schubert
