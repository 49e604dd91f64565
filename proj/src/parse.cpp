#include <cctype>

#include "wqa/algebra.hpp"

namespace wqa {

namespace {

template <class S>
bool is_scalar_expr(const FreeExpr<S>& x) {
    return x.empty() || (x.size() == 1 && x.begin()->first.empty());
}

template <class S>
void add_into(FreeExpr<S>& acc, const Word& w, const S& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

template <class Field>
class Parser {
public:
    using S = typename Field::value_type;
    using Expr = FreeExpr<S>;

    Parser(const std::string& text, const Field& field, Flavor flavor, bool allow_l)
        : s_(text), field_(field), flavor_(flavor), allow_l_(allow_l) {}

    Expr run() {
        skip_ws();
        if (pos_ == s_.size()) throw SyntaxError(pos_, "empty expression");
        Expr e = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return e;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Expr scalar(const S& c) {
        Expr e;
        add_into(e, Word{}, c);
        return e;
    }

    Expr word(Word w) {
        Expr e;
        e.emplace(std::move(w), field_.one());
        return e;
    }

    static Expr negate(Expr e) {
        for (auto& [w, c] : e) c = -c;
        return e;
    }

    static Expr product(const Expr& a, const Expr& b) {
        Expr out;
        for (const auto& [wa, ca] : a)
            for (const auto& [wb, cb] : b) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                add_into(out, w, ca * cb);
            }
        return out;
    }

    S scalar_value(const Expr& e) const { return e.empty() ? field_.zero() : e.begin()->second; }

    Expr expr() {
        Expr lhs = term();
        for (;;) {
            if (accept('+')) {
                for (const auto& [w, c] : term()) add_into(lhs, w, c);
            } else if (accept('-')) {
                for (const auto& [w, c] : term()) add_into(lhs, w, -c);
            } else {
                return lhs;
            }
        }
    }

    Expr term() {
        Expr lhs = unary();
        for (;;) {
            if (accept('*')) {
                lhs = product(lhs, unary());
            } else if (accept('/')) {
                skip_ws();
                const std::size_t at = pos_;
                Expr rhs = unary();
                if (!is_scalar_expr(rhs)) throw SyntaxError(at, "division by a non-scalar");
                if (rhs.empty()) throw Error(ErrorCode::DivisionByZero, "division by zero at position " + std::to_string(at));
                const S inv = scalar_value(rhs).inverse();
                for (auto& [w, c] : lhs) c *= inv;
            } else {
                return lhs;
            }
        }
    }

    Expr unary() {
        if (accept('-')) return negate(unary());
        if (accept('+')) return unary();
        return power();
    }

    long exponent() {
        skip_ws();
        const bool paren = accept('(');
        bool neg = accept('-');
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError(start, "expected an integer exponent");
        if (pos_ - start > 9) throw SyntaxError(start, "exponent too large");
        long n = std::stol(s_.substr(start, pos_ - start));
        if (paren && !accept(')')) throw SyntaxError(pos_, "expected ')'");
        return neg ? -n : n;
    }

    Expr power() {
        Expr base = primary();
        if (!accept('^')) return base;
        const std::size_t at = pos_;
        const long n = exponent();
        if (is_scalar_expr(base)) {
            S b = scalar_value(base);
            if (n < 0) {
                if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
                b = b.inverse();
            }
            S r = field_.one();
            for (long k = std::abs(n); k > 0; k >>= 1) {
                if (k & 1) r *= b;
                if (k > 1) b *= b;
            }
            return scalar(r);
        }
        if (n < 0) throw SyntaxError(at, "negative power of a non-scalar");
        if (n > 1000) throw SyntaxError(at, "exponent too large for a non-scalar");
        Expr r = scalar(field_.one());
        for (long k = 0; k < n; ++k) r = product(r, base);
        return r;
    }

    Expr primary() {
        skip_ws();
        if (pos_ == s_.size()) throw SyntaxError(pos_, "unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Expr e = expr();
            if (!accept(')')) throw SyntaxError(pos_, "expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return scalar(field_.from_rational(mpq_class(mpz_class(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return identifier(s_.substr(start, pos_ - start), start);
        }
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    Expr identifier(const std::string& id, std::size_t at) {
        if (id == "q") return scalar(field_.q_pow(1));
        if (id == "Eh") return word({Gen::J, Gen::E, Gen::J});
        if (id == "Fh") return word({Gen::J, Gen::F, Gen::J});
        if (id == "L" && allow_l_) return word({Gen::L});
        static const std::pair<const char*, Gen> plain[] = {
            {"E", Gen::E}, {"F", Gen::F}, {"K", Gen::K}, {"Kb", Gen::Kb}, {"J", Gen::J}};
        for (const auto& [name, g] : plain) {
            if (id == name) return word({g});
            if (id == std::string(name) + "v") {
                if (flavor_ != Flavor::V)
                    throw Error(ErrorCode::UnknownSymbol,
                                "'" + id + "' is a v-flavor generator (position " + std::to_string(at) + ")");
                return word({g});
            }
        }
        throw Error(ErrorCode::UnknownSymbol, "unknown symbol '" + id + "' at position " + std::to_string(at));
    }

    const std::string& s_;
    const Field& field_;
    Flavor flavor_;
    bool allow_l_;
    std::size_t pos_ = 0;
};

template <class Field>
typename Field::value_type parse_scalar_impl(const std::string& text, const Field& field) {
    auto e = Parser<Field>(text, field, Flavor::W, false).run();
    if (!is_scalar_expr(e)) throw Error(ErrorCode::InvalidArgument, "'" + text + "' is not a scalar");
    return e.empty() ? field.zero() : e.begin()->second;
}

} // namespace

template <class Field>
typename Algebra<Field>::Expr Algebra<Field>::parse(const std::string& text, bool allow_l) const {
    return Parser<Field>(text, field_, flavor_, allow_l).run();
}

template FreeExpr<RationalFunction> Algebra<RationalFunctionField>::parse(const std::string&, bool) const;
template FreeExpr<Cyclotomic> Algebra<CyclotomicField>::parse(const std::string&, bool) const;

RationalFunction parse_scalar(const std::string& text, const RationalFunctionField& field) {
    return parse_scalar_impl(text, field);
}

Cyclotomic parse_scalar(const std::string& text, const CyclotomicField& field) {
    return parse_scalar_impl(text, field);
}

} // namespace wqa
