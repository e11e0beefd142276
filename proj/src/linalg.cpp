/// @file linalg.cpp
/// @brief Dense exact linear algebra over F_p.

#include "qh/linalg.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

namespace qh {

FpMat FpMat::identity(PrimeField F, int n) {
    FpMat I(F, n, n);
    for (int i = 0; i < n; ++i) I.at(i, i) = 1;
    return I;
}

bool FpMat::is_zero() const {
    for (auto x : a_)
        if (x) return false;
    return true;
}

FpMat FpMat::operator+(const FpMat& o) const {
    FpMat r(F_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.add(a_[i], o.a_[i]);
    return r;
}

FpMat FpMat::operator-(const FpMat& o) const {
    FpMat r(F_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.sub(a_[i], o.a_[i]);
    return r;
}

FpMat FpMat::operator*(const FpMat& o) const {
    FpMat r(F_, rows_, o.cols_);
    const std::uint64_t p = F_.modulus();
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            std::uint64_t v = at(i, k);
            if (!v) continue;
            const std::uint32_t* orow = &o.a_[static_cast<std::size_t>(k) * o.cols_];
            std::uint32_t* rrow = &r.a_[static_cast<std::size_t>(i) * o.cols_];
            for (int j = 0; j < o.cols_; ++j)
                rrow[j] = static_cast<std::uint32_t>((rrow[j] + v * orow[j]) % p);
        }
    }
    return r;
}

FpMat FpMat::scaled(std::uint32_t c) const {
    FpMat r(F_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = F_.mul(a_[i], c);
    return r;
}

FpMat FpMat::pow(std::uint64_t k) const {
    FpMat r = identity(F_, rows_);
    FpMat b = *this;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> FpMat::col(int c) const {
    std::vector<std::uint32_t> v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

int FpMat::rank() const {
    FpMat m = *this;
    int rk = 0;
    for (int c = 0; c < cols_ && rk < rows_; ++c) {
        int piv = -1;
        for (int r = rk; r < rows_; ++r)
            if (m.at(r, c)) { piv = r; break; }
        if (piv < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(rk, j));
        std::uint32_t ipv = F_.inv(m.at(rk, c));
        for (int j = c; j < cols_; ++j) m.at(rk, j) = F_.mul(m.at(rk, j), ipv);
        for (int r = 0; r < rows_; ++r) {
            if (r == rk || !m.at(r, c)) continue;
            std::uint32_t f = m.at(r, c);
            for (int j = c; j < cols_; ++j)
                m.at(r, j) = F_.sub(m.at(r, j), F_.mul(f, m.at(rk, j)));
        }
        ++rk;
    }
    return rk;
}

FpMat FpMat::inverse() const {
    if (rows_ != cols_) throw LinalgError("Singular", "inverse of a non-square matrix");
    FpMat m = *this;
    FpMat inv = identity(F_, rows_);
    for (int c = 0; c < cols_; ++c) {
        int piv = -1;
        for (int r = c; r < rows_; ++r)
            if (m.at(r, c)) { piv = r; break; }
        if (piv < 0) throw LinalgError("Singular", "matrix is singular over F_p");
        for (int j = 0; j < cols_; ++j) {
            std::swap(m.at(piv, j), m.at(c, j));
            std::swap(inv.at(piv, j), inv.at(c, j));
        }
        std::uint32_t ipv = F_.inv(m.at(c, c));
        for (int j = 0; j < cols_; ++j) {
            m.at(c, j) = F_.mul(m.at(c, j), ipv);
            inv.at(c, j) = F_.mul(inv.at(c, j), ipv);
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == c || !m.at(r, c)) continue;
            std::uint32_t f = m.at(r, c);
            for (int j = 0; j < cols_; ++j) {
                m.at(r, j) = F_.sub(m.at(r, j), F_.mul(f, m.at(c, j)));
                inv.at(r, j) = F_.sub(inv.at(r, j), F_.mul(f, inv.at(c, j)));
            }
        }
    }
    return inv;
}

void FpPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

FpPoly FpPoly::constant(PrimeField F, std::uint32_t v) {
    FpPoly p{F, {v % F.modulus()}};
    p.trim();
    return p;
}

FpPoly FpPoly::linear_root(PrimeField F, std::uint32_t r) {
    return FpPoly{F, {F.neg(r % F.modulus()), 1}};
}

FpPoly FpPoly::operator+(const FpPoly& o) const {
    FpPoly r{F, {}};
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = F.add(i < c.size() ? c[i] : 0, i < o.c.size() ? o.c[i] : 0);
    r.trim();
    return r;
}

FpPoly FpPoly::operator-(const FpPoly& o) const {
    FpPoly r{F, {}};
    r.c.resize(std::max(c.size(), o.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = F.sub(i < c.size() ? c[i] : 0, i < o.c.size() ? o.c[i] : 0);
    r.trim();
    return r;
}

FpPoly FpPoly::operator*(const FpPoly& o) const {
    FpPoly r{F, {}};
    if (c.empty() || o.c.empty()) return r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < o.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(c[i], o.c[j]));
    r.trim();
    return r;
}

std::pair<FpPoly, FpPoly> FpPoly::divmod(const FpPoly& o) const {
    if (o.c.empty()) throw std::domain_error("polynomial division by zero");
    FpPoly q{F, {}}, r = *this;
    r.trim();
    if (r.degree() >= o.degree()) q.c.assign(r.degree() - o.degree() + 1, 0);
    std::uint32_t lead_inv = F.inv(o.c.back());
    while (r.degree() >= o.degree() && !r.c.empty()) {
        int shift = r.degree() - o.degree();
        std::uint32_t f = F.mul(r.c.back(), lead_inv);
        q.c[shift] = f;
        for (std::size_t i = 0; i < o.c.size(); ++i)
            r.c[i + shift] = F.sub(r.c[i + shift], F.mul(f, o.c[i]));
        r.trim();
    }
    q.trim();
    return {q, r};
}

FpMat FpPoly::eval(const FpMat& M) const {
    FpMat r(F, M.rows(), M.cols());
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        r = r * M;
        for (int i = 0; i < M.rows(); ++i) r.at(i, i) = F.add(r.at(i, i), *it);
    }
    return r;
}

std::uint32_t FpPoly::eval(std::uint32_t x) const {
    std::uint32_t r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = F.add(F.mul(r, x), *it);
    return r;
}

std::tuple<FpPoly, FpPoly, FpPoly> poly_ext_gcd(const FpPoly& a, const FpPoly& b) {
    PrimeField F = a.F;
    FpPoly r0 = a, r1 = b;
    FpPoly u0 = FpPoly::constant(F, 1), u1 = FpPoly::constant(F, 0);
    FpPoly v0 = FpPoly::constant(F, 0), v1 = FpPoly::constant(F, 1);
    while (!r1.c.empty()) {
        auto [q, r2] = r0.divmod(r1);
        FpPoly u2 = u0 - q * u1;
        FpPoly v2 = v0 - q * v1;
        r0 = r1; r1 = r2;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (!r0.c.empty() && r0.c.back() != 1) {
        std::uint32_t s = F.inv(r0.c.back());
        r0 = r0 * FpPoly::constant(F, s);
        u0 = u0 * FpPoly::constant(F, s);
        v0 = v0 * FpPoly::constant(F, s);
    }
    return {r0, u0, v0};
}

std::vector<FpMat> generalized_eigenprojections(const FpMat& M,
                                                const std::vector<std::uint32_t>& spectrum,
                                                int N) {
    PrimeField F = M.field();
    for (std::size_t i = 0; i < spectrum.size(); ++i)
        for (std::size_t j = i + 1; j < spectrum.size(); ++j)
            if (spectrum[i] % F.modulus() == spectrum[j] % F.modulus())
                throw LinalgError("DuplicateEigenvalue",
                                  "spectrum entry " + std::to_string(spectrum[i]) + " repeats");

    std::vector<FpPoly> factors;
    FpPoly full = FpPoly::constant(F, 1);
    for (auto s : spectrum) {
        FpPoly f = FpPoly::constant(F, 1);
        FpPoly lin = FpPoly::linear_root(F, s);
        for (int k = 0; k < N; ++k) f = f * lin;
        factors.push_back(f);
        full = full * f;
    }
    if (!full.eval(M).is_zero())
        throw LinalgError("SpectrumIncomplete",
                          "the candidate spectrum does not annihilate the operator");

    std::vector<FpMat> proj;
    FpMat sum(F, M.rows(), M.cols());
    for (std::size_t s = 0; s < spectrum.size(); ++s) {
        FpPoly G = FpPoly::constant(F, 1);
        for (std::size_t t = 0; t < spectrum.size(); ++t)
            if (t != s) G = G * factors[t];
        auto [g, u, v] = poly_ext_gcd(G, factors[s]);
        (void)v;
        if (g.degree() != 0)
            throw LinalgError("DuplicateEigenvalue", "spectrum factors are not coprime");
        // u*G = 1 mod (x - s)^N, and u*G is divisible by every other factor:
        // evaluated at M it is the projection onto the generalized s-eigenspace.
        proj.push_back((u * G).eval(M));
        sum = sum + proj.back();
    }
    if (sum != FpMat::identity(F, M.rows()))
        throw LinalgError("SpectrumIncomplete", "projections do not sum to the identity");
    return proj;
}

FpMat corner_inverse(const FpMat& A, const FpMat& E) {
    PrimeField F = A.field();
    FpMat I = FpMat::identity(F, A.rows());
    FpMat B;
    try {
        B = (A + I - E).inverse();
    } catch (const LinalgError&) {
        throw LinalgError("SingularInCorner", "corner element is not invertible");
    }
    FpMat Binv = E * B * E;
    if (A * Binv != E || Binv * A != E)
        throw LinalgError("SingularInCorner", "corner element is not invertible in the corner");
    return Binv;
}

int nilpotency_index(const FpMat& M) {
    FpMat pw = FpMat::identity(M.field(), M.rows());
    for (int k = 0; k <= M.rows(); ++k) {
        if (pw.is_zero()) return k;
        pw = pw * M;
    }
    throw LinalgError("NotNilpotent", "no power up to the dimension vanishes");
}

TruncSeries::TruncSeries(PrimeField F, int nv, int cap) : F_(F), nv_(nv), cap_(cap) {}

TruncSeries TruncSeries::constant(PrimeField F, int nv, int cap, std::uint32_t v) {
    TruncSeries s(F, nv, cap);
    if (v % F.modulus()) s.terms_.push_back({std::vector<int>(nv, 0), v % F.modulus()});
    return s;
}

TruncSeries TruncSeries::variable(PrimeField F, int nv, int cap, int which) {
    TruncSeries s(F, nv, cap);
    std::vector<int> e(nv, 0);
    e.at(which) = 1;
    if (cap >= 1) s.terms_.push_back({e, 1});
    return s;
}

std::uint32_t TruncSeries::constant_term() const {
    for (const auto& [e, v] : terms_)
        if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) return v;
    return 0;
}

void TruncSeries::normalize() {
    std::sort(terms_.begin(), terms_.end());
    std::vector<std::pair<std::vector<int>, std::uint32_t>> out;
    for (auto& [e, v] : terms_) {
        if (!out.empty() && out.back().first == e)
            out.back().second = F_.add(out.back().second, v);
        else
            out.push_back({e, v});
    }
    terms_.clear();
    for (auto& [e, v] : out)
        if (v) terms_.push_back({e, v});
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
    TruncSeries r = *this;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.normalize();
    return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
    return *this + o.scaled(F_.neg(1));
}

TruncSeries TruncSeries::scaled(std::uint32_t c) const {
    TruncSeries r = *this;
    for (auto& [e, v] : r.terms_) v = F_.mul(v, c);
    r.normalize();
    return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
    TruncSeries r(F_, nv_, cap_);
    std::map<std::vector<int>, std::uint32_t> acc;
    for (const auto& [ea, va] : terms_) {
        for (const auto& [eb, vb] : o.terms_) {
            std::vector<int> e(nv_);
            int tot = 0;
            for (int i = 0; i < nv_; ++i) tot += (e[i] = ea[i] + eb[i]);
            if (tot > cap_) continue;
            auto& slot = acc[e];
            slot = F_.add(slot, F_.mul(va, vb));
        }
    }
    for (auto& [e, v] : acc)
        if (v) r.terms_.push_back({e, v});
    return r;
}

TruncSeries TruncSeries::inverse() const {
    std::uint32_t c0 = constant_term();
    if (!c0) throw std::domain_error("TruncSeries::inverse with zero constant term");
    // 1/S = (1/c0) * sum_m R^m  with  R = 1 - S/c0 (no constant term).
    TruncSeries R = constant(F_, nv_, cap_, 1) - scaled(F_.inv(c0));
    TruncSeries acc = constant(F_, nv_, cap_, 1);
    TruncSeries pw = constant(F_, nv_, cap_, 1);
    for (int m = 1; m <= cap_; ++m) {
        pw = pw * R;
        acc = acc + pw;
    }
    return acc.scaled(F_.inv(c0));
}

bool TruncSeries::operator==(const TruncSeries& o) const {
    return terms_ == o.terms_;
}

void TruncSeries::set_coeff(const std::vector<int>& expo, std::uint32_t v) {
    for (auto& [e, c] : terms_) {
        if (e == expo) {
            c = v % F_.modulus();
            normalize();
            return;
        }
    }
    if (v % F_.modulus()) terms_.push_back({expo, v % F_.modulus()});
    normalize();
}

FpMat TruncSeries::eval(const std::vector<FpMat>& vars, const FpMat& E) const {
    // Precompute the needed powers of each argument.
    std::vector<int> maxdeg(nv_, 0);
    for (const auto& [e, v] : terms_) {
        (void)v;
        for (int i = 0; i < nv_; ++i) maxdeg[i] = std::max(maxdeg[i], e[i]);
    }
    std::vector<std::vector<FpMat>> powers(nv_);
    for (int i = 0; i < nv_; ++i) {
        powers[i].push_back(FpMat::identity(F_, E.rows()));
        for (int k = 1; k <= maxdeg[i]; ++k) powers[i].push_back(powers[i].back() * vars[i]);
    }
    FpMat out(F_, E.rows(), E.cols());
    for (const auto& [e, v] : terms_) {
        FpMat m = E.scaled(v);
        for (int i = 0; i < nv_; ++i)
            if (e[i]) m = powers[i][e[i]] * m;
        out = out + m;
    }
    return out;
}

bool RowSpan::add(std::vector<std::uint32_t> v) {
    std::vector<std::uint32_t> combo(rows_.size() + 1, 0);
    combo.back() = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t a = v[pivot_[i]];
        if (!a) continue;
        for (int j = 0; j < width_; ++j) v[j] = F_.sub(v[j], F_.mul(a, rows_[i][j]));
        for (std::size_t j = 0; j < combo_[i].size(); ++j)
            combo[j] = F_.sub(combo[j], F_.mul(a, combo_[i][j]));
    }
    int piv = -1;
    for (int j = 0; j < width_; ++j)
        if (v[j]) { piv = j; break; }
    if (piv < 0) return false;
    std::uint32_t s = F_.inv(v[piv]);
    for (int j = 0; j < width_; ++j) v[j] = F_.mul(v[j], s);
    for (auto& x : combo) x = F_.mul(x, s);
    rows_.push_back(std::move(v));
    combo_.push_back(std::move(combo));
    pivot_.push_back(piv);
    return true;
}

std::optional<std::vector<std::uint32_t>> RowSpan::solve(std::vector<std::uint32_t> v) const {
    std::vector<std::uint32_t> coords(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::uint32_t a = v[pivot_[i]];
        if (!a) continue;
        coords[i] = a;
        for (int j = 0; j < width_; ++j) v[j] = F_.sub(v[j], F_.mul(a, rows_[i][j]));
    }
    for (int j = 0; j < width_; ++j)
        if (v[j]) return std::nullopt;
    // Translate row coordinates into inserted-vector coordinates.
    std::vector<std::uint32_t> out(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (!coords[i]) continue;
        for (std::size_t j = 0; j < combo_[i].size(); ++j)
            out[j] = F_.add(out[j], F_.mul(coords[i], combo_[i][j]));
    }
    return out;
}

}  // namespace qh
