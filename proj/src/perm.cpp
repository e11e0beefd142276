/// @file perm.cpp
/// @brief Symmetric group tables, canonical words, compositions and cosets.

#include "qh/perm.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qh {

PermTable::PermTable(int n) : n_(n) {
    if (n < 1 || n > 9) throw std::invalid_argument("PermTable supports 1 <= n <= 9");
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    do {
        index_[w] = static_cast<int>(img_.size());
        img_.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));

    std::iota(w.begin(), w.end(), 0);
    id_of_identity_ = index_.at(w);

    len_.resize(img_.size());
    cword_.resize(img_.size());
    for (std::size_t id = 0; id < img_.size(); ++id) {
        const auto& u = img_[id];
        int inv = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (u[a] > u[b]) ++inv;
        len_[id] = inv;
    }
    // Canonical word: repeatedly strip the smallest left descent.
    for (std::size_t id = 0; id < img_.size(); ++id) {
        Word word;
        int cur = static_cast<int>(id);
        while (cur != id_of_identity_) {
            int a = 0;
            while (!left_descent(cur, a)) ++a;
            word.push_back(a);
            cur = lmul_s(a, cur);
        }
        cword_[id] = word;
    }
    // Deterministic basis order: by length, then canonical word lex.
    by_rank_.resize(img_.size());
    std::iota(by_rank_.begin(), by_rank_.end(), 0);
    std::sort(by_rank_.begin(), by_rank_.end(), [&](int a, int b) {
        if (len_[a] != len_[b]) return len_[a] < len_[b];
        return cword_[a] < cword_[b];
    });
    rank_.resize(img_.size());
    for (std::size_t r = 0; r < by_rank_.size(); ++r) rank_[by_rank_[r]] = static_cast<int>(r);
}

int PermTable::id_of(const std::vector<int>& oneline) const {
    auto it = index_.find(oneline);
    if (it == index_.end()) throw std::invalid_argument("not a permutation of 0..n-1");
    return it->second;
}

int PermTable::mul(int a, int b) const {
    const auto& u = img_[a];
    const auto& v = img_[b];
    std::vector<int> w(n_);
    for (int x = 0; x < n_; ++x) w[x] = u[v[x]];
    return index_.at(w);
}

int PermTable::inverse(int id) const {
    const auto& u = img_[id];
    std::vector<int> w(n_);
    for (int x = 0; x < n_; ++x) w[u[x]] = x;
    return index_.at(w);
}

int PermTable::lmul_s(int a, int id) const {
    auto w = img_[id];
    for (auto& x : w) {
        if (x == a) x = a + 1;
        else if (x == a + 1) x = a;
    }
    return index_.at(w);
}

int PermTable::rmul_s(int id, int a) const {
    auto w = img_[id];
    std::swap(w[a], w[a + 1]);
    return index_.at(w);
}

bool PermTable::left_descent(int id, int a) const {
    // l(s_a w) < l(w) iff the value a appears to the right of the value a+1.
    const auto& w = img_[id];
    int pa = -1, pb = -1;
    for (int x = 0; x < n_; ++x) {
        if (w[x] == a) pa = x;
        if (w[x] == a + 1) pb = x;
    }
    return pa > pb;
}

bool PermTable::right_descent(int id, int a) const {
    return img_[id][a] > img_[id][a + 1];
}

int PermTable::eval_word(const Word& w) const {
    int cur = id_of_identity_;
    for (auto it = w.rbegin(); it != w.rend(); ++it) cur = lmul_s(*it, cur);
    return cur;
}

bool PermTable::is_reduced(const Word& w) const {
    return static_cast<int>(w.size()) == length(eval_word(w));
}

std::vector<Word> PermTable::reduced_words(int id) const {
    std::set<Word> seen;
    std::vector<Word> queue{canonical_word(id)};
    seen.insert(queue[0]);
    for (std::size_t h = 0; h < queue.size(); ++h) {
        Word w = queue[h];
        for (std::size_t m = 0; m + 1 < w.size(); ++m) {
            if (std::abs(w[m] - w[m + 1]) > 1) {
                Word v = w;
                std::swap(v[m], v[m + 1]);
                if (seen.insert(v).second) queue.push_back(v);
            }
            if (m + 2 < w.size() && w[m] == w[m + 2] && std::abs(w[m] - w[m + 1]) == 1) {
                Word v = w;
                std::swap(v[m], v[m + 1]);
                v[m + 2] = v[m];
                if (seen.insert(v).second) queue.push_back(v);
            }
        }
    }
    return queue;
}

int Composition::n() const {
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Composition::cum(int j) const {
    return std::accumulate(parts.begin(), parts.begin() + j, 0);
}

std::vector<Composition> all_compositions(int d, int n) {
    std::vector<Composition> out;
    std::vector<int> parts(d, 0);
    auto rec = [&](auto&& self, int j, int rem) -> void {
        if (j == d - 1) {
            parts[j] = rem;
            out.push_back(Composition{parts});
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            parts[j] = v;
            self(self, j + 1, rem - v);
        }
    };
    if (d > 0) rec(rec, 0, n);
    return out;
}

Composition shape_of(const std::vector<int>& t, int d) {
    Composition lam;
    lam.parts.assign(d, 0);
    for (int j : t) ++lam.parts.at(j);
    return lam;
}

std::vector<int> t_lambda(const Composition& lambda) {
    std::vector<int> t;
    for (int j = 0; j < lambda.d(); ++j)
        t.insert(t.end(), lambda.parts[j], j);
    return t;
}

std::uint64_t m_lambda(const Composition& lambda) {
    // Build the multinomial incrementally as a product of binomials.
    std::uint64_t m = 1;
    int placed = 0;
    for (int part : lambda.parts) {
        for (int s = 1; s <= part; ++s) {
            m = m * static_cast<std::uint64_t>(placed + s) / s;
        }
        placed += part;
    }
    return m;
}

std::vector<int> min_coset_rep_one_line(const std::vector<int>& t, int d) {
    Composition lam = shape_of(t, d);
    std::vector<int> offset(d);
    for (int j = 0; j < d; ++j) offset[j] = lam.cum(j);
    std::vector<int> pi(t.size());
    std::vector<int> count(d, 0);
    for (std::size_t a = 0; a < t.size(); ++a) pi[a] = offset[t[a]] + count[t[a]]++;
    return pi;
}

CosetStep coset_step(const std::vector<int>& t, int a, int d) {
    CosetStep step;
    step.same_coset = (t.at(a) == t.at(a + 1));
    step.b = step.same_coset ? min_coset_rep_one_line(t, d)[a] : -1;
    return step;
}

Word canonical_reduced_word(const PermTable& St, int id) {
    return St.canonical_word(id);
}

Word canonical_reduced_word(const PermTable& St, int id, const Composition& lambda) {
    const auto& w = St.one_line(id);
    Word out;
    for (int j = 0; j < lambda.d(); ++j) {
        int lo = lambda.cum(j), hi = lambda.cum(j + 1);
        if (lo == hi) continue;
        std::vector<int> block(w.begin() + lo, w.begin() + hi);
        for (int& x : block) {
            if (x < lo || x >= hi)
                throw std::invalid_argument("permutation is not in the Young subgroup");
            x -= lo;
        }
        PermTable sub(hi - lo);
        for (int a : sub.canonical_word(sub.id_of(block))) out.push_back(a + lo);
    }
    return out;
}

std::vector<std::vector<int>> all_tuples(int base, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(n, 0);
    while (true) {
        out.push_back(t);
        int c = n - 1;
        while (c >= 0 && t[c] == base - 1) t[c--] = 0;
        if (c < 0) break;
        ++t[c];
    }
    return out;
}

}  // namespace qh
