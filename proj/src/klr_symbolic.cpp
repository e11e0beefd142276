/// @file klr_symbolic.cpp
/// @brief Straightening engine for the symbolic quiver Hecke algebra.

#include "qh/klr_symbolic.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace qh {

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::constant(PrimeField F, std::uint32_t v) {
    BiPoly p{F, {}};
    if (v % F.modulus() != 0) p.c[{0, 0}] = v % F.modulus();
    return p;
}

BiPoly BiPoly::monomial(PrimeField F, std::uint32_t coeff, int a, int b) {
    BiPoly p{F, {}};
    if (coeff % F.modulus() != 0) p.c[{a, b}] = coeff % F.modulus();
    return p;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [e, v] : o.c) {
        std::uint32_t s = F.add(out.c.count(e) ? out.c[e] : 0, v);
        if (s == 0) out.c.erase(e);
        else out.c[e] = s;
    }
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly neg{F, {}};
    for (const auto& [e, v] : o.c) neg.c[e] = F.neg(v);
    return *this + neg;
}

BiPoly BiPoly::flipped() const {
    BiPoly out{F, {}};
    for (const auto& [e, v] : c) out.c[{e.second, e.first}] = v;
    return out;
}

int BiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, v] : c) {
        (void)v;
        deg = std::max(deg, e.first + e.second);
    }
    return deg;
}

// ---------------------------------------------------------------------------
// QuiverSpec

void QuiverSpec::validate() const {
    if (nverts <= 0 || static_cast<int>(part.size()) != nverts ||
        static_cast<int>(Q.size()) != nverts)
        throw AlgebraError("InvalidQuiver", "inconsistent vertex data");
    for (int j : part)
        if (j < 0 || j >= d) throw AlgebraError("InvalidQuiver", "part index out of range");
    for (int k = 0; k < nverts; ++k) {
        if (static_cast<int>(Q[k].size()) != nverts)
            throw AlgebraError("InvalidQuiver", "Q matrix not square");
        if (!Q[k][k].c.empty())
            throw AlgebraError("InvalidQuiver", "Q_{k,k} must vanish");
        for (int k2 = 0; k2 < nverts; ++k2) {
            if (!(Q[k][k2] == Q[k2][k].flipped()))
                throw AlgebraError("InvalidQuiver", "Q_{k,k'}(u,v) != Q_{k',k}(v,u)");
            if (k != k2 && part[k] != part[k2] && !(Q[k][k2] == BiPoly::constant(F, 1)))
                throw AlgebraError("InvalidQuiver", "cross-part entries must equal 1");
        }
    }
}

QuiverSpec make_disjoint_cyclic_quiver(PrimeField F, int e, int d) {
    QuiverSpec spec;
    spec.F = F;
    spec.d = d;
    spec.nverts = e * d;
    spec.part.resize(spec.nverts);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < e; ++i) spec.part[j * e + i] = j;
    spec.Q.assign(spec.nverts, std::vector<BiPoly>(spec.nverts, BiPoly::zero(F)));
    for (int k1 = 0; k1 < spec.nverts; ++k1)
        for (int k2 = 0; k2 < spec.nverts; ++k2) {
            int i1 = k1 % e, j1 = k1 / e, i2 = k2 % e, j2 = k2 / e;
            BiPoly& q = spec.Q[k1][k2];
            if (k1 == k2) continue;  // zero
            if (j1 != j2) {
                q = BiPoly::constant(F, 1);
                continue;
            }
            bool to = (i2 == (i1 + 1) % e);
            bool from = (i1 == (i2 + 1) % e);
            if (to && from) {
                // -(u - v)^2 = -u^2 + 2uv - v^2
                q = BiPoly::monomial(F, F.neg(1), 2, 0) + BiPoly::monomial(F, 2, 1, 1) +
                    BiPoly::monomial(F, F.neg(1), 0, 2);
            } else if (to) {
                q = BiPoly::monomial(F, 1, 0, 1) + BiPoly::monomial(F, F.neg(1), 1, 0);
            } else if (from) {
                q = BiPoly::monomial(F, 1, 1, 0) + BiPoly::monomial(F, F.neg(1), 0, 1);
            } else {
                q = BiPoly::constant(F, 1);
            }
        }
    spec.validate();
    return spec;
}

// ---------------------------------------------------------------------------
// SymAlg basics

SymAlg::SymAlg(QuiverSpec spec, int n, int kcap) : spec_(std::move(spec)), n_(n), St_(n) {
    spec_.validate();
    if (n < 1 || n > 5)
        throw AlgebraError("InfeasibleSize", "the symbolic engine supports 1 <= n <= 5");
    if (spec_.nverts > kcap)
        throw AlgebraError("InfeasibleSize",
                           "vertex set exceeds the cap " + std::to_string(kcap));
}

void SymAlg::bump_steps() const {
    if (++steps_ > 400'000'000ULL)
        throw AlgebraError("NonTerminating", "symbolic rewriting exceeded the step budget");
}

SymKey SymAlg::make_key(int w, std::vector<int> r, std::vector<int> k) const {
    return SymKey{St_.rank(w), w, std::move(r), std::move(k)};
}

void SymAlg::add_term(SymElem& x, const SymKey& key, std::uint32_t c) const {
    if (c == 0) return;
    auto it = x.find(key);
    std::uint32_t s = spec_.F.add(it == x.end() ? 0 : it->second, c);
    if (s == 0) {
        if (it != x.end()) x.erase(it);
    } else {
        x[key] = s;
    }
}

SymElem SymAlg::unit() const {
    SymElem out;
    for (const auto& k : all_tuples(spec_.nverts, n_))
        add_term(out, make_key(St_.identity(), std::vector<int>(n_, 0), k), 1);
    return out;
}

SymElem SymAlg::e_of(const std::vector<int>& k) const {
    SymElem out;
    add_term(out, make_key(St_.identity(), std::vector<int>(n_, 0), k), 1);
    return out;
}

SymElem SymAlg::add(SymElem x, const SymElem& y) const {
    for (const auto& [key, c] : y) add_term(x, key, c);
    return x;
}

SymElem SymAlg::scaled(SymElem x, std::uint32_t c) const {
    SymElem out;
    for (const auto& [key, v] : x) add_term(out, key, spec_.F.mul(v, c));
    return out;
}

std::vector<int> SymAlg::act(int w, const std::vector<int>& k) const {
    return St_.act(w, k);
}

std::vector<int> SymAlg::act_word(const Word& word, std::vector<int> k) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) k = act_s(*it, std::move(k));
    return k;
}

// ---------------------------------------------------------------------------
// Straightening core

namespace {
/// Neighbours of a reduced word under commutation and 3-braid moves, together
/// with the braid position (-1 for commutation moves).
std::vector<std::pair<Word, int>> word_moves(const Word& w) {
    std::vector<std::pair<Word, int>> out;
    for (std::size_t m = 0; m + 1 < w.size(); ++m) {
        if (std::abs(w[m] - w[m + 1]) > 1) {
            Word v = w;
            std::swap(v[m], v[m + 1]);
            out.push_back({std::move(v), -1});
        }
        if (m + 2 < w.size() && w[m] == w[m + 2] && std::abs(w[m] - w[m + 1]) == 1) {
            Word v = w;
            std::swap(v[m], v[m + 1]);
            v[m + 2] = v[m];
            out.push_back({std::move(v), static_cast<int>(m)});
        }
    }
    return out;
}

/// Shortest path in the reduced-word graph from `from` to `to`.
std::vector<Word> bfs_word_path(const Word& from, const Word& to) {
    std::map<Word, Word> parent;
    std::deque<Word> queue{from};
    parent[from] = from;
    while (!queue.empty()) {
        Word cur = queue.front();
        queue.pop_front();
        if (cur == to) break;
        for (auto& [next, mp] : word_moves(cur)) {
            (void)mp;
            if (parent.emplace(next, cur).second) queue.push_back(next);
        }
    }
    std::vector<Word> path{to};
    while (path.back() != from) path.push_back(parent.at(path.back()));
    std::reverse(path.begin(), path.end());
    return path;
}
}  // namespace

SymElem SymAlg::apply_prefix(const Word& prefix, SymElem x) const {
    for (auto it = prefix.rbegin(); it != prefix.rend(); ++it) x = lmul_psi(*it, x);
    return x;
}

SymElem SymAlg::resolve_word(const Word& word, const std::vector<int>& k) const {
    bump_steps();
    auto memo_key = std::make_pair(word, k);
    if (auto it = memo_.find(memo_key); it != memo_.end()) return it->second;

    // Scan from the right for the first length drop.
    const int m = static_cast<int>(word.size());
    std::vector<int> su(m + 1);
    su[m] = St_.identity();
    int bad = -1;
    for (int pos = m - 1; pos >= 0; --pos) {
        int a = word[pos];
        if (St_.left_descent(su[pos + 1], a)) {
            bad = pos;
            break;
        }
        su[pos] = St_.lmul_s(a, su[pos + 1]);
    }

    SymElem result;
    if (bad < 0) {
        // Reduced word; rewrite to the canonical word along a braid path,
        // collecting divided-difference corrections.
        int w = su[0];
        const Word& cw = St_.canonical_word(w);
        add_term(result, make_key(w, std::vector<int>(n_, 0), k), 1);
        if (word != cw) {
            std::vector<Word> path = bfs_word_path(word, cw);
            for (std::size_t step = 0; step + 1 < path.size(); ++step) {
                const Word& cur = path[step];
                const Word& next = path[step + 1];
                // Locate the move.
                int mp = -1;
                for (std::size_t x = 0; x < cur.size(); ++x)
                    if (cur[x] != next[x]) {
                        mp = static_cast<int>(x);
                        break;
                    }
                bool is_braid = (mp + 2 < static_cast<int>(cur.size()) &&
                                 cur[mp] == cur[mp + 2] &&
                                 std::abs(cur[mp] - cur[mp + 1]) == 1);
                if (!is_braid) continue;  // commutation, no correction
                int a = std::min(cur[mp], cur[mp + 1]);
                Word suffix(cur.begin() + mp + 3, cur.end());
                std::vector<int> tS = act_word(suffix, k);
                if (tS[a] != tS[a + 2]) continue;
                // psi_{a+1} psi_a psi_{a+1} e = psi_a psi_{a+1} psi_a e + DD e;
                // replacing the decreasing pattern adds +DD, the reverse -DD.
                std::uint32_t sign =
                    (cur[mp] == a + 1) ? 1u : spec_.F.neg(1);
                const BiPoly& q = spec_.Q[tS[a]][tS[a + 1]];
                SymElem base = resolve_word(suffix, k);
                SymElem dd;
                for (const auto& [expo, coeff] : q.c) {
                    int alpha = expo.first, beta = expo.second;
                    for (int s = 0; s < alpha; ++s) {
                        SymElem t = scaled(base, coeff);
                        for (int rep = 0; rep < beta; ++rep) t = lmul_y(a + 1, t);
                        for (int rep = 0; rep < alpha - 1 - s; ++rep) t = lmul_y(a + 2, t);
                        for (int rep = 0; rep < s; ++rep) t = lmul_y(a, t);
                        dd = add(std::move(dd), t);
                    }
                }
                Word prefix(cur.begin(), cur.begin() + mp);
                result = add(std::move(result), scaled(apply_prefix(prefix, dd), sign));
            }
        }
    } else {
        // word = P + [a] + S with a a left descent of the suffix permutation.
        int a = word[bad];
        Word S(word.begin() + bad + 1, word.end());
        int u = su[bad + 1];
        int u2 = St_.lmul_s(a, u);
        Word target{a};
        const Word& cw2 = St_.canonical_word(u2);
        target.insert(target.end(), cw2.begin(), cw2.end());
        // psi_S e(k) = psi_target e(k) + C (both reduced words of u).
        SymElem s_elem = resolve_word(S, k);
        SymElem t_elem = resolve_word(target, k);
        // C expressed in PBW form:
        SymElem corr = add(s_elem, scaled(t_elem, spec_.F.neg(1)));
        // psi_a psi_target e(k) = Q_{k''_a, k''_{a+1}}(y_a, y_{a+1})
        //                         psi_{cw(u2)} e(k), with k'' = u2 . k.
        std::vector<int> k2 = act(u2, k);
        SymElem base;
        add_term(base, make_key(u2, std::vector<int>(n_, 0), k), 1);
        SymElem inner;
        const BiPoly& q = spec_.Q[k2[a]][k2[a + 1]];
        for (const auto& [expo, coeff] : q.c) {
            SymElem t = scaled(base, coeff);
            for (int rep = 0; rep < expo.second; ++rep) t = lmul_y(a + 1, t);
            for (int rep = 0; rep < expo.first; ++rep) t = lmul_y(a, t);
            inner = add(std::move(inner), t);
        }
        inner = add(std::move(inner), lmul_psi(a, corr));
        Word P(word.begin(), word.begin() + bad);
        result = apply_prefix(P, inner);
    }
    memo_[memo_key] = result;
    return result;
}

SymElem SymAlg::lmul_e(const std::vector<int>& k0, const SymElem& x) const {
    SymElem out;
    for (const auto& [key, c] : x)
        if (act(key.w, key.k) == k0) add_term(out, key, c);
    return out;
}

SymElem SymAlg::lmul_psi(int a, const SymElem& x) const {
    SymElem out;
    for (const auto& [key, c] : x) {
        Word word{a};
        const Word& cw = St_.canonical_word(key.w);
        word.insert(word.end(), cw.begin(), cw.end());
        for (const auto& [key2, c2] : resolve_word(word, key.k)) {
            std::vector<int> r = key2.r;
            for (int b = 0; b < n_; ++b) r[b] += key.r[b];
            add_term(out, make_key(key2.w, std::move(r), key2.k), spec_.F.mul(c, c2));
        }
    }
    return out;
}

SymElem SymAlg::y_push(int b, const Word& word, const std::vector<int>& k) const {
    bump_steps();
    auto memo_key = std::make_tuple(b, word, k);
    if (auto it = ymemo_.find(memo_key); it != ymemo_.end()) return it->second;
    SymElem out;
    if (word.empty()) {
        std::vector<int> r(n_, 0);
        r[b] = 1;
        add_term(out, make_key(St_.identity(), std::move(r), k), 1);
    } else {
        int a = word.front();
        Word rest(word.begin() + 1, word.end());
        std::vector<int> k1 = act_word(rest, k);
        int b2 = (b == a) ? a + 1 : (b == a + 1) ? a : b;
        out = lmul_psi(a, y_push(b2, rest, k));
        if ((b == a || b == a + 1) && k1[a] == k1[a + 1]) {
            std::uint32_t sign = (b == a + 1) ? 1u : spec_.F.neg(1);
            out = add(std::move(out), scaled(resolve_word(rest, k), sign));
        }
    }
    ymemo_[memo_key] = out;
    return out;
}

SymElem SymAlg::lmul_y(int b, const SymElem& x) const {
    SymElem out;
    for (const auto& [key, c] : x) {
        for (const auto& [key2, c2] : y_push(b, St_.canonical_word(key.w), key.k)) {
            std::vector<int> r = key2.r;
            for (int p = 0; p < n_; ++p) r[p] += key.r[p];
            add_term(out, make_key(key2.w, std::move(r), key2.k), spec_.F.mul(c, c2));
        }
    }
    return out;
}

SymElem SymAlg::product(const SymElem& A, const SymElem& B) const {
    SymElem out;
    for (const auto& [key, c] : A) {
        SymElem x = lmul_e(key.k, B);
        for (int b = 0; b < n_; ++b)
            for (int rep = 0; rep < key.r[b]; ++rep) x = lmul_y(b, x);
        const Word& cw = St_.canonical_word(key.w);
        for (auto it = cw.rbegin(); it != cw.rend(); ++it) x = lmul_psi(*it, x);
        out = add(std::move(out), scaled(std::move(x), c));
    }
    return out;
}

SymElem SymAlg::straighten(const std::vector<SymLetter>& word) const {
    SymElem x = unit();
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        switch (it->kind) {
            case SymLetter::Kind::E: x = lmul_e(it->k, x); break;
            case SymLetter::Kind::Y: x = lmul_y(it->pos, x); break;
            case SymLetter::Kind::PSI: x = lmul_psi(it->pos, x); break;
        }
    }
    return x;
}

int SymAlg::cartan_of(int k1, int k2) const {
    if (k1 == k2) return 2;
    int deg = spec_.Q[k1][k2].total_degree();
    return deg < 0 ? 0 : -deg;
}

int SymAlg::term_degree(const SymKey& key) const {
    int deg = 0;
    for (int b = 0; b < n_; ++b) deg += 2 * key.r[b];
    std::vector<int> cur = key.k;
    const Word& cw = St_.canonical_word(key.w);
    for (auto it = cw.rbegin(); it != cw.rend(); ++it) {
        deg -= cartan_of(cur[*it], cur[*it + 1]);
        cur = act_s(*it, std::move(cur));
    }
    return deg;
}

// ---------------------------------------------------------------------------
// Coset elements and block idempotents

std::vector<int> SymAlg::part_tuple(const std::vector<int>& k) const {
    std::vector<int> t(k.size());
    for (std::size_t a = 0; a < k.size(); ++a) t[a] = spec_.part[k[a]];
    return t;
}

std::vector<std::vector<int>> SymAlg::tuples_over(const std::vector<int>& t) const {
    std::vector<std::vector<int>> out{{}};
    for (int a = 0; a < n_; ++a) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : out)
            for (int v = 0; v < spec_.nverts; ++v)
                if (spec_.part[v] == t[a]) {
                    auto p = prefix;
                    p.push_back(v);
                    next.push_back(std::move(p));
                }
        out = std::move(next);
    }
    return out;
}

SymElem SymAlg::psi_pi(const std::vector<int>& t) const {
    int pi = St_.id_of(min_coset_rep_one_line(t, spec_.d));
    return psi_pi(t, St_.canonical_word(pi));
}

SymElem SymAlg::psi_pi(const std::vector<int>& t, const Word& word) const {
    int pi = St_.id_of(min_coset_rep_one_line(t, spec_.d));
    if (!St_.is_reduced(word) || St_.eval_word(word) != pi)
        throw AlgebraError("NotReduced", "word is not a reduced expression of pi_t");
    SymElem out;
    for (const auto& k : tuples_over(t)) out = add(std::move(out), resolve_word(word, k));
    return out;
}

SymElem SymAlg::psi_pi_inverse(const std::vector<int>& t) const {
    int pi = St_.id_of(min_coset_rep_one_line(t, spec_.d));
    const Word& cw = St_.canonical_word(St_.inverse(pi));
    std::vector<int> tlam = t_lambda(shape_of(t, spec_.d));
    SymElem out;
    for (const auto& k : tuples_over(tlam)) out = add(std::move(out), resolve_word(cw, k));
    return out;
}

SymElem SymAlg::psi_perm_full(int w) const {
    SymElem out;
    for (const auto& k : all_tuples(spec_.nverts, n_))
        out = add(std::move(out), resolve_word(St_.canonical_word(w), k));
    return out;
}

SymElem SymAlg::block_idempotent_lambda(const Composition& lambda) const {
    SymElem out;
    for (const auto& k : all_tuples(spec_.nverts, n_))
        if (shape_of(part_tuple(k), spec_.d) == lambda)
            out = add(std::move(out), e_of(k));
    return out;
}

// ---------------------------------------------------------------------------
// Decomposition maps

SymDecompMaps::SymDecompMaps(const SymAlg& alg, Composition lambda)
    : alg_(alg), lambda_(std::move(lambda)) {
    for (const auto& t : all_tuples(lambda_.d(), alg_.n()))
        if (shape_of(t, lambda_.d()) == lambda_) jtuples_.push_back(t);
}

std::vector<std::vector<SymElem>> SymDecompMaps::Psi(const SymElem& x) const {
    const PermTable& St = alg_.perms();
    for (const auto& [key, c] : x) {
        (void)c;
        if (!(shape_of(alg_.part_tuple(key.k), lambda_.d()) == lambda_))
            throw AlgebraError("SupportOutsideBlock",
                               "element is not supported on e(lambda)");
    }
    const std::size_t m = jtuples_.size();
    std::vector<std::vector<SymElem>> M(m, std::vector<SymElem>(m));
    for (std::size_t row = 0; row < m; ++row) {
        for (std::size_t col = 0; col < m; ++col) {
            // e(t') x e(t): keep the terms mapping K^t into K^{t'}.
            SymElem slice;
            for (const auto& [key, c] : x) {
                if (alg_.part_tuple(key.k) != jtuples_[col]) continue;
                if (alg_.part_tuple(alg_.act(key.w, key.k)) != jtuples_[row]) continue;
                slice[key] = c;
            }
            if (slice.empty()) continue;
            int pi_row = St.id_of(min_coset_rep_one_line(jtuples_[row], lambda_.d()));
            int pi_col = St.id_of(min_coset_rep_one_line(jtuples_[col], lambda_.d()));
            M[row][col] = alg_.product(
                alg_.psi_perm_full(pi_row),
                alg_.product(slice, alg_.psi_perm_full(St.inverse(pi_col))));
        }
    }
    return M;
}

SymElem SymDecompMaps::Phi(const std::vector<std::vector<SymElem>>& M) const {
    const PermTable& St = alg_.perms();
    SymElem out;
    for (std::size_t row = 0; row < jtuples_.size(); ++row)
        for (std::size_t col = 0; col < jtuples_.size(); ++col) {
            if (M[row][col].empty()) continue;
            int pi_row = St.id_of(min_coset_rep_one_line(jtuples_[row], lambda_.d()));
            int pi_col = St.id_of(min_coset_rep_one_line(jtuples_[col], lambda_.d()));
            out = alg_.add(
                std::move(out),
                alg_.product(alg_.psi_perm_full(St.inverse(pi_row)),
                             alg_.product(M[row][col], alg_.psi_perm_full(pi_col))));
        }
    return out;
}

}  // namespace qh
