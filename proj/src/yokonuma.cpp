/// @file yokonuma.cpp
/// @brief Normal-form engine for the cyclotomic wreath Hecke algebra.

#include "qh/yokonuma.hpp"

#include <random>

#include "qh/relations.hpp"

namespace qh {

namespace {
constexpr int kDimCap = 4096;
constexpr std::uint64_t kStepCap = 200'000'000ULL;

std::uint64_t ipow(std::uint64_t b, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}
}  // namespace

YContext::YContext(FieldCfg cfg, int n, Weight weight, bool degenerate)
    : cfg_(cfg), wt_(std::move(weight)), n_(n), degenerate_(degenerate), St_(n) {
    if (static_cast<std::uint32_t>(wt_.mult.size()) != cfg_.e)
        throw ConfigError("weight must have one multiplicity per residue in Z/eZ");
    ell_ = static_cast<int>(wt_.level());
    if (ell_ == 0) throw ConfigError("the weight must have positive level");
    if (degenerate_ && cfg_.q != 1)
        throw ConfigError("the degenerate presentation requires q = 1");

    std::uint64_t dim = ipow(ell_, n) * ipow(cfg_.d, n);
    for (int a = 2; a <= n; ++a) dim *= a;
    if (dim > kDimCap)
        throw AlgebraError("InfeasibleSize",
                           "regular representation of dimension " + std::to_string(dim) +
                               " exceeds the desk-scale cap " + std::to_string(kDimCap));
    dim_ = static_cast<int>(dim);

    inv_d_ = cfg_.F.inv(cfg_.d % cfg_.p);
    inv_q_ = cfg_.F.inv(cfg_.q);

    // Expand the monic cyclotomic polynomial and record
    // X_1^l = sum_m red[m] X_1^m.
    FpPoly cyc = FpPoly::constant(cfg_.F, 1);
    for (std::uint32_t i = 0; i < cfg_.e; ++i) {
        std::uint32_t eig = degenerate_ ? (i % cfg_.p) : cfg_.F.pow(cfg_.q, i);
        for (std::uint32_t m = 0; m < wt_.at(i); ++m)
            cyc = cyc * FpPoly::linear_root(cfg_.F, eig);
    }
    red_.assign(ell_, 0);
    for (int m = 0; m < ell_; ++m)
        red_[m] = cfg_.F.neg(m < static_cast<int>(cyc.c.size()) ? cyc.c[m] : 0);
}

int YContext::basis_index(const BasisLabel& b) const {
    int idx = St_.rank(b.w);
    for (int a = 0; a < n_; ++a) idx = idx * ell_ + b.u[a];
    for (int a = 0; a < n_; ++a) idx = idx * static_cast<int>(cfg_.d) + b.v[a];
    return idx;
}

BasisLabel YContext::basis_label(int idx) const {
    BasisLabel b;
    b.u.assign(n_, 0);
    b.v.assign(n_, 0);
    for (int a = n_ - 1; a >= 0; --a) {
        b.v[a] = idx % static_cast<int>(cfg_.d);
        idx /= static_cast<int>(cfg_.d);
    }
    for (int a = n_ - 1; a >= 0; --a) {
        b.u[a] = idx % ell_;
        idx /= ell_;
    }
    b.w = St_.id_at_rank(idx);
    return b;
}

GenWord YContext::basis_word(int idx) const {
    BasisLabel b = basis_label(idx);
    GenWord word;
    for (int a : St_.canonical_word(b.w)) word.push_back({GenLetter::Kind::G, a, 1});
    for (int a = 0; a < n_; ++a)
        for (int k = 0; k < b.u[a]; ++k) word.push_back({GenLetter::Kind::X, a, 1});
    for (int a = 0; a < n_; ++a)
        if (b.v[a]) word.push_back({GenLetter::Kind::T, a, b.v[a]});
    return word;
}

Elem YContext::one() const {
    Elem x = zero();
    x[0] = 1;  // identity monomial: empty word, u = v = 0, rank 0
    return x;
}

Elem YContext::basis_elem(int idx) const {
    Elem x = zero();
    x[idx] = 1;
    return x;
}

Elem YContext::gen_g(int a) const {
    BasisLabel b{St_.eval_word({a}), std::vector<int>(n_, 0), std::vector<int>(n_, 0)};
    return basis_elem(basis_index(b));
}

Elem YContext::gen_t(int a) const {
    BasisLabel b{St_.identity(), std::vector<int>(n_, 0), std::vector<int>(n_, 0)};
    b.v[a] = 1 % static_cast<int>(cfg_.d);
    return basis_elem(basis_index(b));
}

Elem YContext::gen_x(int a) const {
    return mul_letter(one(), {GenLetter::Kind::X, a, 1});
}

Elem YContext::idem_e(int a) const {
    Elem acc = zero();
    for (int j = 0; j < static_cast<int>(cfg_.d); ++j) {
        BasisLabel b{St_.identity(), std::vector<int>(n_, 0), std::vector<int>(n_, 0)};
        b.v[a] = j;
        b.v[a + 1] = (static_cast<int>(cfg_.d) - j) % static_cast<int>(cfg_.d);
        acc[basis_index(b)] = cfg_.F.add(acc[basis_index(b)], inv_d_);
    }
    return acc;
}

Elem YContext::add(const Elem& x, const Elem& y) const {
    Elem r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = cfg_.F.add(x[i], y[i]);
    return r;
}

Elem YContext::sub(const Elem& x, const Elem& y) const {
    Elem r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = cfg_.F.sub(x[i], y[i]);
    return r;
}

Elem YContext::scaled(const Elem& x, std::uint32_t c) const {
    Elem r(dim_);
    for (int i = 0; i < dim_; ++i) r[i] = cfg_.F.mul(x[i], c);
    return r;
}

std::uint64_t YContext::letter_key(int idx, GenLetter L) const {
    std::uint64_t lid = 0;
    switch (L.kind) {
        case GenLetter::Kind::G: lid = L.pos; break;
        case GenLetter::Kind::X: lid = (n_ - 1) + L.pos; break;
        case GenLetter::Kind::T:
            lid = (2 * n_ - 1) + static_cast<std::uint64_t>(L.pos) * cfg_.d +
                  (L.exp % static_cast<int>(cfg_.d));
            break;
    }
    return lid * static_cast<std::uint64_t>(dim_) + idx;
}

void YContext::bump_steps() const {
    if (++steps_ > kStepCap)
        throw AlgebraError("NonTerminating",
                           "rewriting step cap exceeded; the exchange rules did not terminate");
}

Elem YContext::mul_letter(const Elem& x, GenLetter L) const {
    Elem out = zero();
    for (int i = 0; i < dim_; ++i) {
        if (!x[i]) continue;
        const Elem& prod = basis_letter(i, L);
        for (int k = 0; k < dim_; ++k)
            if (prod[k]) out[k] = cfg_.F.add(out[k], cfg_.F.mul(x[i], prod[k]));
    }
    return out;
}

Elem YContext::mul_word(Elem x, const GenWord& w) const {
    for (const auto& L : w) x = mul_letter(x, L);
    return x;
}

const Elem& YContext::basis_letter(int idx, GenLetter L) const {
    if (L.kind == GenLetter::Kind::T) L.exp = ((L.exp % static_cast<int>(cfg_.d)) +
                                               static_cast<int>(cfg_.d)) % static_cast<int>(cfg_.d);
    std::uint64_t key = letter_key(idx, L);
    auto it = memo_.find(key);
    if (it != memo_.end()) {
        if (it->second.empty())
            throw AlgebraError("NonTerminating", "cyclic dependency in the exchange rules");
        return it->second;
    }
    memo_[key] = Elem{};  // in-progress sentinel
    bump_steps();

    const PrimeField& F = cfg_.F;
    const int d = static_cast<int>(cfg_.d);
    BasisLabel b = basis_label(idx);
    Elem out = zero();

    auto emit = [&](const BasisLabel& lab, std::uint32_t c) {
        int k = basis_index(lab);
        out[k] = F.add(out[k], c);
    };
    auto emit_elem = [&](const Elem& e, std::uint32_t c) {
        for (int k = 0; k < dim_; ++k)
            if (e[k]) out[k] = F.add(out[k], F.mul(c, e[k]));
    };

    switch (L.kind) {
        case GenLetter::Kind::T: {
            BasisLabel nb = b;
            nb.v[L.pos] = (nb.v[L.pos] + L.exp) % d;
            emit(nb, 1);
            break;
        }
        case GenLetter::Kind::X: {
            const int c = L.pos;
            if (b.u[c] + 1 < ell_) {
                BasisLabel nb = b;
                ++nb.u[c];
                emit(nb, 1);
            } else if (c == 0) {
                // Cyclotomic reduction: X_1^l = sum_m red[m] X_1^m.
                for (int m = 0; m < ell_; ++m) {
                    if (!red_[m]) continue;
                    BasisLabel nb = b;
                    nb.u[0] = m;
                    emit(nb, red_[m]);
                }
            } else if (!degenerate_) {
                // X_c = q^{-1} g_{c-1} X_{c-1} g_{c-1}.
                Elem r = mul_word(basis_elem(idx), {{GenLetter::Kind::G, c - 1, 1},
                                                    {GenLetter::Kind::X, c - 1, 1},
                                                    {GenLetter::Kind::G, c - 1, 1}});
                emit_elem(r, inv_q_);
            } else {
                // x_c = f_{c-1} x_{c-1} f_{c-1} + f_{c-1} e_{c-1}.
                Elem r = mul_word(basis_elem(idx), {{GenLetter::Kind::G, c - 1, 1},
                                                    {GenLetter::Kind::X, c - 1, 1},
                                                    {GenLetter::Kind::G, c - 1, 1}});
                emit_elem(r, 1);
                for (int j = 0; j < d; ++j) {
                    Elem s = mul_word(basis_elem(idx), {{GenLetter::Kind::G, c - 1, 1},
                                                        {GenLetter::Kind::T, c - 1, j},
                                                        {GenLetter::Kind::T, c, d - j}});
                    emit_elem(s, inv_d_);
                }
            }
            break;
        }
        case GenLetter::Kind::G: {
            const int c = L.pos;
            const int beta = b.u[c], gamma = b.u[c + 1];
            const std::uint32_t qm1 = F.sub(cfg_.q, 1);
            if (gamma > 0) {
                // X_{c+1} g_c = g_c X_c + (q-1) X_{c+1} e_c   (degenerate: + e_c).
                BasisLabel low = b;
                --low.u[c + 1];
                Elem r = mul_word(basis_elem(basis_index(low)),
                                  {{GenLetter::Kind::G, c, 1}, {GenLetter::Kind::X, c, 1}});
                emit_elem(r, 1);
                for (int j = 0; j < d; ++j) {
                    BasisLabel nb = degenerate_ ? low : b;  // X_{c+1} restored unless degenerate
                    nb.v[c] = (nb.v[c] + j) % d;
                    nb.v[c + 1] = (nb.v[c + 1] + d - j) % d;
                    emit(nb, degenerate_ ? inv_d_ : F.mul(qm1, inv_d_));
                }
            } else if (beta > 0) {
                // X_c g_c = g_c X_{c+1} - (q-1) X_{c+1} e_c   (degenerate: - e_c).
                BasisLabel low = b;
                --low.u[c];
                Elem r = mul_word(basis_elem(basis_index(low)),
                                  {{GenLetter::Kind::G, c, 1}, {GenLetter::Kind::X, c + 1, 1}});
                emit_elem(r, 1);
                std::uint32_t coeff = F.neg(F.mul(degenerate_ ? 1 : qm1, inv_d_));
                for (int j = 0; j < d; ++j) {
                    BasisLabel nb = low;
                    if (!degenerate_) nb.u[c + 1] = 1;  // the explicit X_{c+1} of the correction
                    nb.v[c] = (nb.v[c] + j) % d;
                    nb.v[c + 1] = (nb.v[c + 1] + d - j) % d;
                    emit(nb, coeff);
                }
            } else {
                BasisLabel nb = b;
                std::swap(nb.v[c], nb.v[c + 1]);  // t^v g_c = g_c t^{s_c v}
                if (!St_.right_descent(b.w, c)) {
                    nb.w = St_.rmul_s(b.w, c);
                    emit(nb, 1);
                } else if (degenerate_) {
                    nb.w = St_.rmul_s(b.w, c);  // f_w f_c = f_{w s_c}, f_c^2 = 1
                    emit(nb, 1);
                } else {
                    // g_w g_c = q g_{w s_c} + (q-1) g_w e_c.
                    BasisLabel down = nb;
                    down.w = St_.rmul_s(b.w, c);
                    emit(down, cfg_.q);
                    for (int j = 0; j < d; ++j) {
                        BasisLabel ej = nb;
                        ej.v[c] = (ej.v[c] + j) % d;
                        ej.v[c + 1] = (ej.v[c + 1] + d - j) % d;
                        emit(ej, F.mul(qm1, inv_d_));
                    }
                }
            }
            break;
        }
    }
    memo_[key] = std::move(out);
    return memo_[key];
}

Elem YContext::mul(const Elem& x, const Elem& y) const {
    Elem out = zero();
    for (int j = 0; j < dim_; ++j) {
        if (!y[j]) continue;
        Elem part = mul_word(x, basis_word(j));
        for (int k = 0; k < dim_; ++k)
            if (part[k]) out[k] = cfg_.F.add(out[k], cfg_.F.mul(y[j], part[k]));
    }
    return out;
}

FpMat YContext::rep(const Elem& x) const {
    FpMat M(cfg_.F, dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Elem colv = mul_word(x, basis_word(j));
        for (int r = 0; r < dim_; ++r) M.at(r, j) = colv[r];
    }
    return M;
}

namespace {
/// Matrix carrier for the generic relation checker.
struct MatAlg {
    using E = FpMat;
    PrimeField F;
    int dim;
    E mul(const E& a, const E& b) const { return a * b; }
    E add(const E& a, const E& b) const { return a + b; }
    E sub(const E& a, const E& b) const { return a - b; }
    E scaled(const E& a, std::uint32_t c) const { return a.scaled(c); }
    E one() const { return FpMat::identity(F, dim); }
    bool is_zero(const E& a) const { return a.is_zero(); }
    bool eq(const E& a, const E& b) const { return a == b; }
};
}  // namespace

Report check_presentation(const YContext& ctx) {
    MatAlg alg{ctx.cfg().F, ctx.dim()};
    std::vector<FpMat> G, T, X;
    for (int a = 0; a + 1 < ctx.n(); ++a) G.push_back(ctx.rep(ctx.gen_g(a)));
    for (int a = 0; a < ctx.n(); ++a) T.push_back(ctx.rep(ctx.gen_t(a)));
    for (int a = 0; a < ctx.n(); ++a) X.push_back(ctx.rep(ctx.gen_x(a)));
    Report rep = check_yh_relations(alg, ctx.cfg(), ctx.weight(), ctx.degenerate(), G, T, X);

    Suite& s = rep.suite("dimension = l^n d^n n!");
    std::uint64_t expect = 1;
    for (int a = 1; a <= ctx.n(); ++a)
        expect *= static_cast<std::uint64_t>(a) * ctx.level() * ctx.cfg().d;
    s.check(static_cast<std::uint64_t>(ctx.dim()) == expect,
            "dim " + std::to_string(ctx.dim()) + " != " + std::to_string(expect));
    return rep;
}

Report associativity_probe(const YContext& ctx, std::uint64_t seed, int samples) {
    Report rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, ctx.dim() - 1);
    Suite& s = rep.suite("associativity on random basis triples");
    for (int t = 0; t < samples; ++t) {
        int i = pick(rng), j = pick(rng), k = pick(rng);
        Elem lhs = ctx.mul(ctx.mul(ctx.basis_elem(i), ctx.basis_elem(j)), ctx.basis_elem(k));
        Elem rhs = ctx.mul(ctx.basis_elem(i), ctx.mul(ctx.basis_elem(j), ctx.basis_elem(k)));
        s.check(lhs == rhs, "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ")");
    }
    Suite& h = rep.suite("regular representation is multiplicative");
    for (int t = 0; t < samples / 10 + 1; ++t) {
        int i = pick(rng), j = pick(rng);
        Elem prod = ctx.mul(ctx.basis_elem(i), ctx.basis_elem(j));
        bool ok = ctx.rep(prod) == ctx.rep(ctx.basis_elem(i)) * ctx.rep(ctx.basis_elem(j));
        h.check(ok, "pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    return rep;
}

}  // namespace qh
