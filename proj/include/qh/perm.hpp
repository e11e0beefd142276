/// @file perm.hpp
/// @brief Symmetric group combinatorics: reduced words, canonical (lex-minimal)
///        reduced expressions, d-compositions, Young subgroups and minimal-length
///        coset representatives.
///
/// Conventions (0-based throughout):
///   * permutations of {0..n-1} are stored in one-line notation, w[x] = w(x);
///   * s_a (a in 0..n-2) is the adjacent transposition of a and a+1;
///   * products compose as functions: (v w)(x) = v(w(x));
///   * the left action on length-n tuples places entry a at position w(a):
///     (w . t)[w(a)] = t[a], i.e. (w . t)[b] = t[w^{-1}(b)];
///   * a word (a_1, ..., a_r) spells the product s_{a_1} s_{a_2} ... s_{a_r}.
///
/// The canonical reduced word of w is the lexicographically smallest one; it is
/// computed greedily by always taking the smallest left descent.  For an element
/// of a Young subgroup this canonical word is the concatenation of the canonical
/// words of its components (block letters are disjoint and increase with the
/// block), a fact the straightening engine relies on and the tests verify.

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qh/field.hpp"

namespace qh {

using Word = std::vector<int>;

/// All permutations of S_n with lengths, canonical reduced words, and the
/// deterministic basis rank (sorted by length, then canonical word lex order).
class PermTable {
public:
    explicit PermTable(int n);

    int n() const { return n_; }
    std::size_t size() const { return img_.size(); }

    const std::vector<int>& one_line(int id) const { return img_[id]; }
    int id_of(const std::vector<int>& oneline) const;
    int identity() const { return id_of_identity_; }

    int length(int id) const { return len_[id]; }
    const Word& canonical_word(int id) const { return cword_[id]; }

    int mul(int a, int b) const;           ///< (a b)(x) = a(b(x))
    int inverse(int id) const;
    int lmul_s(int a, int id) const;       ///< s_a * w (swap the values a, a+1)
    int rmul_s(int id, int a) const;       ///< w * s_a (swap the entries a, a+1)
    bool left_descent(int id, int a) const;   ///< l(s_a w) < l(w)
    bool right_descent(int id, int a) const;  ///< l(w s_a) < l(w)

    /// Basis rank: position of id when S_n is sorted by (length, canonical word).
    int rank(int id) const { return rank_[id]; }
    int id_at_rank(int r) const { return by_rank_[r]; }

    /// Evaluate a word to a permutation id.
    int eval_word(const Word& w) const;
    /// True iff the word is reduced (its length equals the length of its product).
    bool is_reduced(const Word& w) const;
    /// All reduced words of w (BFS over commutation and braid moves).
    std::vector<Word> reduced_words(int id) const;

    /// Apply the left action: out[w(a)] = t[a].
    template <class T>
    std::vector<T> act(int id, const std::vector<T>& t) const {
        const auto& w = img_[id];
        std::vector<T> out(t.size());
        for (std::size_t a = 0; a < t.size(); ++a) out[w[a]] = t[a];
        return out;
    }

private:
    int n_;
    int id_of_identity_;
    std::vector<std::vector<int>> img_;
    std::vector<int> len_;
    std::vector<Word> cword_;
    std::vector<int> rank_, by_rank_;
    std::map<std::vector<int>, int> index_;
};

/// Swap positions a, a+1 of a tuple (the action of s_a).
template <class T>
std::vector<T> act_s(int a, std::vector<T> t) {
    std::swap(t.at(a), t.at(a + 1));
    return t;
}

/// A d-composition of n: an ordered tuple of d nonnegative parts summing to n.
struct Composition {
    std::vector<int> parts;

    int d() const { return static_cast<int>(parts.size()); }
    int n() const;
    /// cum(j) = parts[0] + ... + parts[j-1] (so cum(0) = 0, cum(d) = n).
    int cum(int j) const;
    bool operator<(const Composition& o) const { return parts < o.parts; }
    bool operator==(const Composition& o) const { return parts == o.parts; }
};

/// All d-compositions of n, in lexicographic order of parts.
std::vector<Composition> all_compositions(int d, int n);

/// The shape of a J-tuple: part j counts the entries equal to j.
Composition shape_of(const std::vector<int>& t, int d);

/// The row-reading tuple of shape lambda: parts[0] copies of 0, then parts[1]
/// copies of 1, and so on.
std::vector<int> t_lambda(const Composition& lambda);

/// The multinomial n! / (parts[0]! ... parts[d-1]!) = #{tuples of shape lambda}.
std::uint64_t m_lambda(const Composition& lambda);

/// One-line form of the minimal-length permutation pi with pi . t = t_lambda:
/// pi(a) = cum(t[a]) + #{b < a : t[b] = t[a]}.
std::vector<int> min_coset_rep_one_line(const std::vector<int>& t, int d);

/// How pi_t changes under a right adjacent transposition.  If t[a] = t[a+1]
/// then pi_t s_a = s_b pi_t with b = pi_t(a) (and pi_t(a+1) = b + 1); otherwise
/// pi_t s_a is the minimal representative of the coset of s_a . t.
struct CosetStep {
    bool same_coset;
    int b;  ///< valid when same_coset: pi_t s_a = s_b pi_t
};
CosetStep coset_step(const std::vector<int>& t, int a, int d);

/// Canonical reduced word of w; when lambda is supplied and w lies in the Young
/// subgroup S_lambda, the word is assembled block by block (which coincides with
/// the global lexicographic minimum).
Word canonical_reduced_word(const PermTable& St, int id);
Word canonical_reduced_word(const PermTable& St, int id, const Composition& lambda);

/// All tuples in {0..base-1}^n, in lexicographic order.
std::vector<std::vector<int>> all_tuples(int base, int n);

}  // namespace qh
