#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "wqa/algebra.hpp"

namespace wqa {

// Basis element E^i F^j K^l of the root-of-unity quotient, 0 <= i, j < d and
// 0 <= l <= d, where l = 0 is the One tail and l = d stands for J = K^d.
struct QIndex {
    int i = 0;
    int j = 0;
    int l = 0;
    auto operator<=>(const QIndex&) const = default;
};

// Sparse element of the quotient, keyed by basis index.
using QVec = std::map<std::size_t, Cyclotomic>;

class QuotientAlgebra {
public:
    using Row = std::vector<std::pair<std::size_t, Cyclotomic>>;

    // Throws InvalidOrder unless d is odd and d > 1.
    explicit QuotientAlgebra(int d);

    int d() const noexcept { return d_; }
    const CyclotomicField& field() const noexcept { return field_; }
    const Algebra<CyclotomicField>& w() const noexcept { return w_; }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t w_dim() const noexcept { return static_cast<std::size_t>(d_) * d_ * d_; }
    std::size_t index(int i, int j, int l) const;
    QIndex decode(std::size_t idx) const;
    bool in_w(std::size_t idx) const { return decode(idx).l > 0; }
    std::size_t unit() const { return index(0, 0, 0); }
    std::size_t j_unit() const { return index(0, 0, d_); }
    std::vector<std::size_t> basis() const;
    std::vector<std::size_t> w_basis() const;
    Monomial monomial(std::size_t idx) const;

    // Image of a normal-form element modulo (E^d, F^d, K^d - J).
    QVec reduce(const Element<Cyclotomic>& x) const;
    Element<Cyclotomic> lift(const QVec& x) const;
    QVec parse(const std::string& text) const { return reduce(w_.eval(text)); }
    QVec basis_vec(std::size_t idx) const { return QVec{{idx, field_.one()}}; }

    // Structure constants of basis products.
    const Row& product(std::size_t a, std::size_t b) const { return table_[a * dim_ + b]; }
    QVec mul(const QVec& x, const QVec& y) const;

    std::string basis_name(std::size_t idx) const;
    std::string to_string(const QVec& x) const;

private:
    int d_;
    CyclotomicField field_;
    Algebra<CyclotomicField> w_;
    std::size_t dim_;
    std::vector<Row> table_;
};

// Rank-2 or rank-3 tensor over quotient basis indices.
class QTensor {
public:
    using Key = std::uint64_t;

    QTensor(const QuotientAlgebra& q, int rank) : q_(&q), rank_(rank) {}

    const QuotientAlgebra& algebra() const noexcept { return *q_; }
    int rank() const noexcept { return rank_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::unordered_map<Key, Cyclotomic>& terms() const noexcept { return terms_; }

    Key key(const std::vector<std::size_t>& legs) const;
    std::vector<std::size_t> legs(Key k) const;

    void add(Key k, const Cyclotomic& c);
    void add(const std::vector<std::size_t>& legs, const Cyclotomic& c) { add(key(legs), c); }
    QTensor& operator+=(const QTensor& o);
    QTensor& operator-=(const QTensor& o);
    QTensor& operator*=(const Cyclotomic& c);
    friend QTensor operator-(QTensor a, const QTensor& b) { return a -= b; }
    friend QTensor operator+(QTensor a, const QTensor& b) { return a += b; }
    bool operator==(const QTensor& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

    // Terms in canonical (leg index) order.
    std::vector<std::pair<std::vector<std::size_t>, Cyclotomic>> sorted() const;
    std::string to_string() const;

private:
    const QuotientAlgebra* q_;
    int rank_;
    std::unordered_map<Key, Cyclotomic> terms_;
};

QTensor tensor(const QuotientAlgebra& q, const QVec& a, const QVec& b);
QTensor tensor(const QuotientAlgebra& q, const QVec& a, const QVec& b, const QVec& c);
QTensor tensor_mul(const QTensor& a, const QTensor& b);
// Flip of a rank-2 tensor.
QTensor flip(const QTensor& t);
// R_12, R_13 or R_23 with `spare` in the remaining leg.
QTensor embed(const QTensor& r, int first, int second, std::size_t spare);

// Full coproduct D_w (unit legs 1) or the W-restricted D^W (unit legs J).
enum class CoproductKind { Full, W };
QTensor coproduct(const QuotientAlgebra& q, const QVec& x, CoproductKind kind);
// D applied to one leg of a rank-2 tensor.
QTensor coproduct_leg(const QTensor& t, int leg, CoproductKind kind);

// The quasi-R-matrix with tail exponents 1..d, the printed R-matrix of the
// restricted quantum group carried over by rho (exponents 0..d-1, K^0 -> J),
// and the inverse with respect to the unit J (x) J.
QTensor build_R(const QuotientAlgebra& q);
QTensor build_R_tilde(const QuotientAlgebra& q);
// Solves R X = J (x) J over span{E^k K^i (x) F^k K^j}, then checks X R = J (x) J. Throws Singular.
QTensor compute_Rhat(const QuotientAlgebra& q, const QTensor& r);

struct TensorCheck {
    int d = 0;
    std::string check;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    bool equal = false;
    double elapsed_ms = 0;
    std::string detail;        // first differing term when unequal
    bool expect_equal = true;  // false for non-identities such as R Rhat != 1 (x) 1
    bool pass() const noexcept { return equal == expect_equal; }
};

TensorCheck compare_tensors(int d, const std::string& name, const QTensor& lhs, const QTensor& rhs, double ms);

std::vector<TensorCheck> check_regularity(const QuotientAlgebra& q, const QTensor& r, const QTensor& rhat);
// Scope W/I with D^W on rho(E), rho(F), rho(K); then the whole quotient with D_w on E, F, K, Kb, J, 1.
std::vector<TensorCheck> check_intertwine(const QuotientAlgebra& q, const QTensor& r);
std::vector<TensorCheck> check_quasitriangular(const QuotientAlgebra& q, const QTensor& r);
TensorCheck check_qybe(const QuotientAlgebra& q, const QTensor& r);

Report to_report(const std::string& name, const std::vector<TensorCheck>& checks);
// timing = false writes elapsed_ms as 0, for byte-identical output.
std::string check_json(const std::vector<TensorCheck>& checks, bool timing = true, int indent = 2);
// One line per check.
std::string check_text(const std::vector<TensorCheck>& checks, bool timing = true);

// Records {k, i, j, coefficient, basis pair} of R (and of R-hat when given),
// sorted by (k, i, j). Formats: json, text. Throws UnsupportedFormat.
std::string export_R(const QuotientAlgebra& q, const QTensor& r, const std::string& format,
                     const QTensor* rhat = nullptr);

} // namespace wqa
