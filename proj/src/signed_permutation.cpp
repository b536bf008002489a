#include "schubert/signed_permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubert {

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int x : entries_) {
        const int a = std::abs(x);
        if (a < 1 || a > n)
            throw std::invalid_argument("signed permutation value out of range: " +
                                        std::to_string(x));
        if (seen[a])
            throw std::invalid_argument("duplicate signed permutation value: " + std::to_string(x));
        seen[a] = 1;
    }
}

SignedPermutation SignedPermutation::identity(int n) {
    std::vector<int> e(n);
    std::iota(e.begin(), e.end(), 1);
    return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::apply_generator(int i) const {
    if (i < 1 || i > size()) throw std::invalid_argument("generator index out of range");
    SignedPermutation w = *this;
    if (i == 1)
        w.entries_[0] = -w.entries_[0];
    else
        std::swap(w.entries_[i - 2], w.entries_[i - 1]);
    return w;
}

int SignedPermutation::length() const {
    int c = 0;
    for (int i = 0; i < size(); ++i) {
        if (entries_[i] < 0) c += -entries_[i];
        for (int j = i + 1; j < size(); ++j)
            if (entries_[i] > entries_[j]) ++c;
    }
    return c;
}

std::vector<int> SignedPermutation::right_descents() const {
    std::vector<int> d;
    if (!entries_.empty() && entries_[0] < 0) d.push_back(1);
    for (int i = 2; i <= size(); ++i)
        if (entries_[i - 2] > entries_[i - 1]) d.push_back(i);
    return d;
}

std::vector<int> SignedPermutation::reduced_word() const {
    std::vector<int> word;
    SignedPermutation w = *this;
    auto descents = w.right_descents();
    while (!descents.empty()) {
        word.push_back(descents.front());
        w = w.apply_generator(descents.front());
        descents = w.right_descents();
    }
    std::reverse(word.begin(), word.end());
    return word;
}

std::string SignedPermutation::to_string() const {
    std::ostringstream out;
    out << '(';
    for (int i = 0; i < size(); ++i) {
        if (i) out << ',';
        out << entries_[i];
    }
    out << ')';
    return out.str();
}

SignedPermutation parse_signed_permutation(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != '(' && c != ')' && c != ' ') s.push_back(c);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    std::vector<int> values;
    for (std::string tok; in >> tok;) {
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
    if (values.empty()) throw std::invalid_argument("empty signed permutation input");
    return SignedPermutation(std::move(values));
}

std::vector<SignedPermutation> all_signed_permutations(int n) {
    std::vector<int> abs(n);
    std::iota(abs.begin(), abs.end(), 1);
    std::vector<SignedPermutation> out;
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> e(abs);
            for (int i = 0; i < n; ++i)
                if (mask & (1u << i)) e[i] = -e[i];
            out.push_back(SignedPermutation(std::move(e)));
        }
    } while (std::next_permutation(abs.begin(), abs.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace schubert
