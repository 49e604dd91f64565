#include "wqa/quotient.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace wqa {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

} // namespace

QuotientAlgebra::QuotientAlgebra(int d)
    : d_(d), field_(d), w_(field_, Flavor::W), dim_(static_cast<std::size_t>(d) * d * (d + 1)) {
    table_.resize(dim_ * dim_);
    std::vector<Element<Cyclotomic>> monos;
    for (std::size_t a = 0; a < dim_; ++a) monos.push_back(w_.monomial(monomial(a)));
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b) {
            const QVec p = reduce(w_.mul(monos[a], monos[b]));
            table_[a * dim_ + b].assign(p.begin(), p.end());
        }
}

std::size_t QuotientAlgebra::index(int i, int j, int l) const {
    if (i < 0 || i >= d_ || j < 0 || j >= d_ || l < 0 || l > d_)
        throw Error(ErrorCode::IndexOutOfRange, "no quotient basis element E^" + std::to_string(i) + " F^" +
                                                    std::to_string(j) + " K^" + std::to_string(l));
    return (static_cast<std::size_t>(i) * d_ + j) * (d_ + 1) + l;
}

QIndex QuotientAlgebra::decode(std::size_t idx) const {
    if (idx >= dim_) throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(idx));
    const int l = static_cast<int>(idx % (d_ + 1));
    const std::size_t ij = idx / (d_ + 1);
    return {static_cast<int>(ij / d_), static_cast<int>(ij % d_), l};
}

std::vector<std::size_t> QuotientAlgebra::basis() const {
    std::vector<std::size_t> out(dim_);
    for (std::size_t a = 0; a < dim_; ++a) out[a] = a;
    return out;
}

std::vector<std::size_t> QuotientAlgebra::w_basis() const {
    std::vector<std::size_t> out;
    for (std::size_t a = 0; a < dim_; ++a)
        if (in_w(a)) out.push_back(a);
    return out;
}

Monomial QuotientAlgebra::monomial(std::size_t idx) const {
    const QIndex x = decode(idx);
    const Tail t = x.l == 0 ? Tail::one() : x.l == d_ ? Tail::j() : Tail::k(x.l);
    return Monomial{x.i, x.j, t};
}

QVec QuotientAlgebra::reduce(const Element<Cyclotomic>& x) const {
    QVec out;
    for (const auto& [m, c] : x.terms()) {
        if (m.i >= d_ || m.j >= d_) continue;
        int l = 0;
        if (m.tail.kind != Tail::One) {
            // K^d = J and Kb = K^{d-1}
            l = static_cast<int>(mod(m.tail.weight(), d_));
            if (l == 0) l = d_;
        }
        const std::size_t idx = index(static_cast<int>(m.i), static_cast<int>(m.j), l);
        auto [it, inserted] = out.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

Element<Cyclotomic> QuotientAlgebra::lift(const QVec& x) const {
    Element<Cyclotomic> out;
    for (const auto& [idx, c] : x) out.add(monomial(idx), c);
    return out;
}

QVec QuotientAlgebra::mul(const QVec& x, const QVec& y) const {
    QVec out;
    for (const auto& [a, ca] : x)
        for (const auto& [b, cb] : y) {
            const Cyclotomic cab = ca * cb;
            for (const auto& [idx, c] : product(a, b)) {
                auto [it, inserted] = out.try_emplace(idx, cab * c);
                if (!inserted) {
                    it->second += cab * c;
                    if (it->second.is_zero()) out.erase(it);
                }
            }
        }
    return out;
}

std::string QuotientAlgebra::basis_name(std::size_t idx) const {
    const QIndex x = decode(idx);
    auto power = [](const char* name, int n) {
        return n == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(n);
    };
    std::string out;
    auto put = [&](const std::string& s) { out += (out.empty() ? "" : "*") + s; };
    if (x.i > 0) put(power("E", x.i));
    if (x.j > 0) put(power("F", x.j));
    if (x.l == d_)
        put("J");
    else if (x.l > 0)
        put(power("K", x.l));
    return out.empty() ? "1" : out;
}

std::string QuotientAlgebra::to_string(const QVec& x) const {
    if (x.empty()) return "0";
    const Cyclotomic one = field_.one();
    std::string out;
    for (const auto& [idx, c] : x) {
        const std::string name = basis_name(idx);
        std::string term;
        if (name == "1")
            term = c.to_string();
        else if (c == one)
            term = name;
        else if (c == -one)
            term = "-" + name;
        else if (c.needs_parens())
            term = "(" + c.to_string() + ")*" + name;
        else
            term = c.to_string() + "*" + name;
        if (out.empty())
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

// ---------------------------------------------------------------------------

QTensor::Key QTensor::key(const std::vector<std::size_t>& legs) const {
    if (static_cast<int>(legs.size()) != rank_) throw Error(ErrorCode::InvalidArgument, "wrong number of legs");
    Key k = 0;
    for (std::size_t a : legs) k = k * q_->dim() + a;
    return k;
}

std::vector<std::size_t> QTensor::legs(Key k) const {
    std::vector<std::size_t> out(static_cast<std::size_t>(rank_));
    for (int p = rank_ - 1; p >= 0; --p) {
        out[static_cast<std::size_t>(p)] = static_cast<std::size_t>(k % q_->dim());
        k /= q_->dim();
    }
    return out;
}

void QTensor::add(Key k, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QTensor& QTensor::operator+=(const QTensor& o) {
    if (o.rank_ != rank_) throw Error(ErrorCode::InvalidArgument, "tensor ranks differ");
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

QTensor& QTensor::operator-=(const QTensor& o) {
    if (o.rank_ != rank_) throw Error(ErrorCode::InvalidArgument, "tensor ranks differ");
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

QTensor& QTensor::operator*=(const Cyclotomic& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::vector<std::pair<std::vector<std::size_t>, Cyclotomic>> QTensor::sorted() const {
    std::vector<Key> keys;
    for (const auto& [k, c] : terms_) keys.push_back(k);
    std::sort(keys.begin(), keys.end());
    std::vector<std::pair<std::vector<std::size_t>, Cyclotomic>> out;
    for (Key k : keys) out.emplace_back(legs(k), terms_.at(k));
    return out;
}

std::string QTensor::to_string() const {
    if (terms_.empty()) return "0";
    const Cyclotomic one = q_->field().one();
    std::string out;
    for (const auto& [legs, c] : sorted()) {
        std::string name;
        for (std::size_t a : legs) name += (name.empty() ? "" : " ⊗ ") + q_->basis_name(a);
        std::string term;
        if (c == one)
            term = name;
        else if (c == -one)
            term = "-" + name;
        else if (c.needs_parens())
            term = "(" + c.to_string() + ")*" + name;
        else
            term = c.to_string() + "*" + name;
        if (out.empty())
            out = term;
        else if (term.front() == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

QTensor tensor(const QuotientAlgebra& q, const QVec& a, const QVec& b) {
    QTensor t(q, 2);
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b) t.add({x, y}, cx * cy);
    return t;
}

QTensor tensor(const QuotientAlgebra& q, const QVec& a, const QVec& b, const QVec& c) {
    QTensor t(q, 3);
    for (const auto& [x, cx] : a)
        for (const auto& [y, cy] : b)
            for (const auto& [z, cz] : c) t.add({x, y, z}, cx * cy * cz);
    return t;
}

QTensor tensor_mul(const QTensor& a, const QTensor& b) {
    if (a.rank() != b.rank()) throw Error(ErrorCode::InvalidArgument, "tensor ranks differ");
    if (&a.algebra() != &b.algebra()) throw Error(ErrorCode::InvalidArgument, "tensors over different algebras");
    const auto& q = a.algebra();
    const std::size_t n = q.dim();
    QTensor out(q, a.rank());
    if (a.rank() == 2) {
        for (const auto& [ka, ca] : a.terms()) {
            const std::size_t a0 = ka / n, a1 = ka % n;
            for (const auto& [kb, cb] : b.terms()) {
                const auto& p0 = q.product(a0, kb / n);
                if (p0.empty()) continue;
                const auto& p1 = q.product(a1, kb % n);
                if (p1.empty()) continue;
                const Cyclotomic c = ca * cb;
                for (const auto& [x, cx] : p0) {
                    const Cyclotomic c0 = c * cx;
                    for (const auto& [y, cy] : p1) out.add(x * n + y, c0 * cy);
                }
            }
        }
        return out;
    }
    for (const auto& [ka, ca] : a.terms()) {
        const std::size_t a0 = ka / (n * n), a1 = ka / n % n, a2 = ka % n;
        for (const auto& [kb, cb] : b.terms()) {
            const auto& p0 = q.product(a0, kb / (n * n));
            if (p0.empty()) continue;
            const auto& p1 = q.product(a1, kb / n % n);
            if (p1.empty()) continue;
            const auto& p2 = q.product(a2, kb % n);
            if (p2.empty()) continue;
            const Cyclotomic c = ca * cb;
            for (const auto& [x, cx] : p0) {
                const Cyclotomic c0 = c * cx;
                for (const auto& [y, cy] : p1) {
                    const Cyclotomic c1 = c0 * cy;
                    for (const auto& [z, cz] : p2) out.add((x * n + y) * n + z, c1 * cz);
                }
            }
        }
    }
    return out;
}

QTensor flip(const QTensor& t) {
    if (t.rank() != 2) throw Error(ErrorCode::InvalidArgument, "flip needs a rank two tensor");
    QTensor out(t.algebra(), 2);
    for (const auto& [k, c] : t.terms()) {
        const auto l = t.legs(k);
        out.add({l[1], l[0]}, c);
    }
    return out;
}

QTensor embed(const QTensor& r, int first, int second, std::size_t spare) {
    if (r.rank() != 2 || first < 1 || second > 3 || first >= second)
        throw Error(ErrorCode::InvalidArgument, "embedding needs legs 1 <= first < second <= 3");
    QTensor out(r.algebra(), 3);
    for (const auto& [k, c] : r.terms()) {
        const auto l = r.legs(k);
        std::vector<std::size_t> legs(3, spare);
        legs[static_cast<std::size_t>(first - 1)] = l[0];
        legs[static_cast<std::size_t>(second - 1)] = l[1];
        out.add(legs, c);
    }
    return out;
}

namespace {

// D of the generators E, F, K.
struct GenCoproducts {
    QTensor e, f, k;
};

GenCoproducts gen_coproducts(const QuotientAlgebra& q, CoproductKind kind) {
    const int d = q.d();
    const QVec one = q.basis_vec(kind == CoproductKind::W ? q.j_unit() : q.unit());
    const QVec e = q.basis_vec(q.index(1, 0, kind == CoproductKind::W ? d : 0));
    const QVec f = q.basis_vec(q.index(0, 1, kind == CoproductKind::W ? d : 0));
    const QVec k = q.basis_vec(q.index(0, 0, 1));
    const QVec kb = q.basis_vec(q.index(0, 0, d - 1));
    return {tensor(q, one, e) + tensor(q, e, k), tensor(q, f, one) + tensor(q, kb, f), tensor(q, k, k)};
}

QTensor basis_coproduct(const QuotientAlgebra& q, std::size_t idx, const GenCoproducts& g, CoproductKind kind) {
    const QIndex x = q.decode(idx);
    if (kind == CoproductKind::W && x.l == 0)
        throw Error(ErrorCode::InvalidArgument, "D^W is defined on the W-part only, not on " + q.basis_name(idx));
    const std::size_t u = kind == CoproductKind::W ? q.j_unit() : q.unit();
    QTensor r(q, 2);
    r.add({u, u}, q.field().one());
    for (int s = 0; s < x.i; ++s) r = tensor_mul(r, g.e);
    for (int s = 0; s < x.j; ++s) r = tensor_mul(r, g.f);
    for (int s = 0; s < x.l; ++s) r = tensor_mul(r, g.k);
    return r;
}

} // namespace

QTensor coproduct(const QuotientAlgebra& q, const QVec& x, CoproductKind kind) {
    const auto g = gen_coproducts(q, kind);
    QTensor out(q, 2);
    for (const auto& [idx, c] : x) {
        QTensor t = basis_coproduct(q, idx, g, kind);
        t *= c;
        out += t;
    }
    return out;
}

QTensor coproduct_leg(const QTensor& t, int leg, CoproductKind kind) {
    if (t.rank() != 2 || leg < 0 || leg > 1) throw Error(ErrorCode::InvalidArgument, "coproduct of leg 0 or 1 of a rank two tensor");
    const auto& q = t.algebra();
    const auto g = gen_coproducts(q, kind);
    std::map<std::size_t, QTensor> cache;
    QTensor out(q, 3);
    for (const auto& [k, c] : t.terms()) {
        const auto l = t.legs(k);
        const std::size_t a = l[static_cast<std::size_t>(leg)];
        auto it = cache.find(a);
        if (it == cache.end()) it = cache.emplace(a, basis_coproduct(q, a, g, kind)).first;
        for (const auto& [dk, dc] : it->second.terms()) {
            const auto dl = it->second.legs(dk);
            if (leg == 0)
                out.add({dl[0], dl[1], l[1]}, c * dc);
            else
                out.add({l[0], dl[0], dl[1]}, c * dc);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

// (1/d) (q - q^-1)^k / [k]! q^{k(k-1)/2 + 2k(i-j) - 2ij}
Cyclotomic r_coefficient(const CyclotomicField& f, int d, long k, long i, long j) {
    Cyclotomic c = f.from_rational(mpq_class(1, d));
    const Cyclotomic s = f.q_pow(1) - f.q_pow(-1);
    for (long t = 0; t < k; ++t) c *= s;
    c /= quantum_factorial(k, f);
    return c * f.q_pow(k * (k - 1) / 2 + 2 * k * (i - j) - 2 * i * j);
}

} // namespace

QTensor build_R(const QuotientAlgebra& q) {
    const int d = q.d();
    QTensor r(q, 2);
    for (int k = 0; k < d; ++k)
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j)
                r.add({q.index(k, 0, i), q.index(0, k, j)}, r_coefficient(q.field(), d, k, i, j));
    return r;
}

QTensor build_R_tilde(const QuotientAlgebra& q) {
    const int d = q.d();
    QTensor r(q, 2);
    // rho(1) = J, rho(K^i) = K^i
    auto rho = [d](int i) { return i == 0 ? d : i; };
    for (int k = 0; k < d; ++k)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                r.add({q.index(k, 0, rho(i)), q.index(0, k, rho(j))}, r_coefficient(q.field(), d, k, i, j));
    return r;
}

QTensor compute_Rhat(const QuotientAlgebra& q, const QTensor& r) {
    const int d = q.d();
    const auto& f = q.field();
    // unknowns: coefficients of E^k K^i (x) F^k K^j
    std::vector<QTensor::Key> unknowns;
    QTensor probe(q, 2);
    for (int k = 0; k < d; ++k)
        for (int i = 1; i <= d; ++i)
            for (int j = 1; j <= d; ++j) unknowns.push_back(probe.key({q.index(k, 0, i), q.index(0, k, j)}));
    const std::size_t n = unknowns.size();

    // columns R * basis tensor, rows indexed by result keys
    std::map<QTensor::Key, std::size_t> row_of;
    std::vector<std::vector<std::pair<std::size_t, Cyclotomic>>> cols(n);
    for (std::size_t u = 0; u < n; ++u) {
        QTensor b(q, 2);
        b.add(unknowns[u], f.one());
        const QTensor prod = tensor_mul(r, b);
        for (const auto& [k, c] : prod.terms()) {
            auto it = row_of.try_emplace(k, row_of.size()).first;
            cols[u].emplace_back(it->second, c);
        }
    }
    const QTensor::Key target = probe.key({q.j_unit(), q.j_unit()});
    auto trow = row_of.try_emplace(target, row_of.size()).first->second;
    const std::size_t m = row_of.size();

    // dense augmented matrix m x (n + 1)
    std::vector<std::vector<Cyclotomic>> a(m, std::vector<Cyclotomic>(n + 1, f.zero()));
    for (std::size_t u = 0; u < n; ++u)
        for (const auto& [row, c] : cols[u]) a[row][u] = c;
    a[trow][n] = f.one();

    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t p = rank;
        while (p < m && a[p][col].is_zero()) ++p;
        if (p == m) continue;
        std::swap(a[p], a[rank]);
        const Cyclotomic inv = a[rank][col].inverse();
        for (std::size_t c = col; c <= n; ++c) a[rank][c] *= inv;
        for (std::size_t row = 0; row < m; ++row) {
            if (row == rank || a[row][col].is_zero()) continue;
            const Cyclotomic factor = a[row][col];
            for (std::size_t c = col; c <= n; ++c)
                if (!a[rank][c].is_zero()) a[row][c] -= factor * a[rank][c];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t row = rank; row < m; ++row)
        if (!a[row][n].is_zero()) throw Error(ErrorCode::Singular, "R X = J (x) J has no solution");

    QTensor x(q, 2);
    for (std::size_t p = 0; p < rank; ++p) x.add(unknowns[pivot_col[p]], a[p][n]);

    QTensor jj(q, 2);
    jj.add(target, f.one());
    if (!(tensor_mul(r, x) == jj) || !(tensor_mul(x, r) == jj))
        throw Error(ErrorCode::Singular, "no two-sided inverse of R with respect to J (x) J");
    return x;
}

// ---------------------------------------------------------------------------

TensorCheck compare_tensors(int d, const std::string& name, const QTensor& lhs, const QTensor& rhs, double ms) {
    TensorCheck c;
    c.d = d;
    c.check = name;
    c.lhs_terms = lhs.size();
    c.rhs_terms = rhs.size();
    c.equal = lhs == rhs;
    c.elapsed_ms = ms;
    if (!c.equal) {
        const QTensor diff = lhs - rhs;
        const auto s = diff.sorted();
        if (!s.empty()) {
            std::string legs;
            for (std::size_t a : s.front().first) legs += (legs.empty() ? "" : " ⊗ ") + lhs.algebra().basis_name(a);
            c.detail = "lhs - rhs has " + std::to_string(s.size()) + " terms, first " + s.front().second.to_string() +
                       " at " + legs;
        }
    }
    return c;
}

std::vector<TensorCheck> check_regularity(const QuotientAlgebra& q, const QTensor& r, const QTensor& rhat) {
    std::vector<TensorCheck> out;
    const int d = q.d();
    auto t0 = Clock::now();
    const QTensor rr = tensor_mul(r, rhat);
    const QTensor rrr = tensor_mul(rr, r);
    double ms = ms_since(t0);
    out.push_back(compare_tensors(d, "R Rhat R = R", rrr, r, ms));
    t0 = Clock::now();
    const QTensor hr = tensor_mul(rhat, r);
    const QTensor hrh = tensor_mul(hr, rhat);
    ms = ms_since(t0);
    out.push_back(compare_tensors(d, "Rhat R Rhat = Rhat", hrh, rhat, ms));
    QTensor jj(q, 2);
    jj.add({q.j_unit(), q.j_unit()}, q.field().one());
    out.push_back(compare_tensors(d, "R Rhat = J (x) J", rr, jj, 0));
    out.push_back(compare_tensors(d, "Rhat R = J (x) J", hr, jj, 0));
    QTensor ones(q, 2);
    ones.add({q.unit(), q.unit()}, q.field().one());
    TensorCheck singular = compare_tensors(d, "R Rhat != 1 (x) 1", rr, ones, 0);
    singular.expect_equal = false;
    singular.detail.clear();
    out.push_back(singular);
    return out;
}

std::vector<TensorCheck> check_intertwine(const QuotientAlgebra& q, const QTensor& r) {
    std::vector<TensorCheck> out;
    const int d = q.d();
    auto run = [&](const std::string& label, const QVec& x, CoproductKind kind) {
        const auto t0 = Clock::now();
        const QTensor dx = coproduct(q, x, kind);
        const QTensor lhs = tensor_mul(flip(dx), r);
        const QTensor rhs = tensor_mul(r, dx);
        const double ms = ms_since(t0);
        out.push_back(compare_tensors(d, label, lhs, rhs, ms));
    };
    run("intertwine rho(E) = E*J", q.basis_vec(q.index(1, 0, d)), CoproductKind::W);
    run("intertwine rho(F) = F*J", q.basis_vec(q.index(0, 1, d)), CoproductKind::W);
    run("intertwine rho(K) = K", q.basis_vec(q.index(0, 0, 1)), CoproductKind::W);
    // whole quotient, full coproduct
    run("intertwine E (full coproduct)", q.basis_vec(q.index(1, 0, 0)), CoproductKind::Full);
    run("intertwine F (full coproduct)", q.basis_vec(q.index(0, 1, 0)), CoproductKind::Full);
    run("intertwine K (full coproduct)", q.basis_vec(q.index(0, 0, 1)), CoproductKind::Full);
    run("intertwine Kb (full coproduct)", q.basis_vec(q.index(0, 0, d - 1)), CoproductKind::Full);
    run("intertwine J (full coproduct)", q.basis_vec(q.j_unit()), CoproductKind::Full);
    run("intertwine 1 (full coproduct)", q.basis_vec(q.unit()), CoproductKind::Full);
    return out;
}

std::vector<TensorCheck> check_quasitriangular(const QuotientAlgebra& q, const QTensor& r) {
    std::vector<TensorCheck> out;
    const int d = q.d();
    const std::size_t j = q.j_unit();
    auto t0 = Clock::now();
    const QTensor r13 = embed(r, 1, 3, j);
    QTensor lhs = coproduct_leg(r, 0, CoproductKind::W);
    QTensor rhs = tensor_mul(r13, embed(r, 2, 3, j));
    double ms = ms_since(t0);
    out.push_back(compare_tensors(d, "(D (x) id)(R) = R13 R23", lhs, rhs, ms));
    t0 = Clock::now();
    lhs = coproduct_leg(r, 1, CoproductKind::W);
    rhs = tensor_mul(r13, embed(r, 1, 2, j));
    ms = ms_since(t0);
    out.push_back(compare_tensors(d, "(id (x) D)(R) = R13 R12", lhs, rhs, ms));
    return out;
}

TensorCheck check_qybe(const QuotientAlgebra& q, const QTensor& r) {
    const std::size_t j = q.j_unit();
    const auto t0 = Clock::now();
    const QTensor r12 = embed(r, 1, 2, j);
    const QTensor r13 = embed(r, 1, 3, j);
    const QTensor r23 = embed(r, 2, 3, j);
    const QTensor lhs = tensor_mul(tensor_mul(r12, r13), r23);
    const QTensor rhs = tensor_mul(tensor_mul(r23, r13), r12);
    const double ms = ms_since(t0);
    return compare_tensors(q.d(), "R12 R13 R23 = R23 R13 R12", lhs, rhs, ms);
}

Report to_report(const std::string& name, const std::vector<TensorCheck>& checks) {
    Report rep;
    rep.name = name;
    for (const auto& c : checks) {
        const std::string want = c.expect_equal ? "equal" : "not equal";
        std::string got = c.equal ? "equal" : "not equal";
        got += " (" + std::to_string(c.lhs_terms) + " vs " + std::to_string(c.rhs_terms) + " terms)";
        if (!c.detail.empty()) got += "; " + c.detail;
        rep.add("d=" + std::to_string(c.d) + ": " + c.check, want, got, c.pass());
    }
    return rep;
}

std::string check_json(const std::vector<TensorCheck>& checks, bool timing, int indent) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json j;
        j["d"] = c.d;
        j["check"] = c.check;
        j["lhs_terms"] = c.lhs_terms;
        j["rhs_terms"] = c.rhs_terms;
        j["equal"] = c.equal;
        j["elapsed_ms"] = timing ? std::round(c.elapsed_ms * 1000.0) / 1000.0 : 0.0;
        if (!c.expect_equal) j["expected_equal"] = false;
        j["pass"] = c.pass();
        arr.push_back(std::move(j));
    }
    return arr.dump(indent);
}

std::string check_text(const std::vector<TensorCheck>& checks, bool timing) {
    std::string out;
    for (const auto& c : checks) {
        char ms[32];
        std::snprintf(ms, sizeof ms, "%.3f", timing ? c.elapsed_ms : 0.0);
        out += std::string(c.pass() ? "PASS" : "FAIL") + " [d=" + std::to_string(c.d) + "] " + c.check +
               ": equal: " + (c.equal ? "true" : "false") + " (lhs_terms " + std::to_string(c.lhs_terms) +
               ", rhs_terms " + std::to_string(c.rhs_terms) + ", elapsed_ms " + ms + ")";
        if (!c.detail.empty()) out += "; " + c.detail;
        out += "\n";
    }
    return out;
}

std::string export_R(const QuotientAlgebra& q, const QTensor& r, const std::string& format, const QTensor* rhat) {
    if (format != "json" && format != "text") throw Error(ErrorCode::UnsupportedFormat, "unknown format '" + format + "'");
    struct Record {
        int k, i, j;
        std::string coeff, left, right;
    };
    auto records = [&](const QTensor& t) {
        std::vector<Record> out;
        for (const auto& [legs, c] : t.sorted()) {
            const QIndex a = q.decode(legs[0]);
            const QIndex b = q.decode(legs[1]);
            if (a.j != 0 || b.i != 0 || a.i != b.j)
                throw Error(ErrorCode::InvalidArgument, "term outside span{E^k K^i (x) F^k K^j}");
            out.push_back({a.i, a.l, b.l, c.to_string(), q.basis_name(legs[0]), q.basis_name(legs[1])});
        }
        std::sort(out.begin(), out.end(), [](const Record& x, const Record& y) {
            return std::tie(x.k, x.i, x.j) < std::tie(y.k, y.i, y.j);
        });
        return out;
    };
    const auto rr = records(r);
    std::vector<Record> hr;
    if (rhat) hr = records(*rhat);
    if (format == "json") {
        auto arr = [](const std::vector<Record>& v) {
            nlohmann::ordered_json a = nlohmann::ordered_json::array();
            for (const auto& x : v) {
                nlohmann::ordered_json j;
                j["k"] = x.k;
                j["i"] = x.i;
                j["j"] = x.j;
                j["coefficient"] = x.coeff;
                j["basis"] = {x.left, x.right};
                a.push_back(std::move(j));
            }
            return a;
        };
        nlohmann::ordered_json doc;
        doc["d"] = q.d();
        doc["R"] = arr(rr);
        if (rhat) doc["Rhat"] = arr(hr);
        return doc.dump(2);
    }
    std::string out;
    auto lines = [&](const std::string& title, const std::vector<Record>& v) {
        out += title + " (d=" + std::to_string(q.d()) + ", " + std::to_string(v.size()) + " terms)\n";
        for (const auto& x : v)
            out += "  k=" + std::to_string(x.k) + " i=" + std::to_string(x.i) + " j=" + std::to_string(x.j) + "  " +
                   x.coeff + "  " + x.left + " ⊗ " + x.right + "\n";
    };
    lines("R", rr);
    if (rhat) lines("Rhat", hr);
    return out;
}

} // namespace wqa
