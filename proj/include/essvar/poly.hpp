#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace essvar {

// letter (letter | digit)* with an optional [natural] suffix, e.g. x, z2, y[10]
inline bool is_valid_identifier(std::string_view name) {
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (name.empty() || !alpha(name[0])) {
        return false;
    }
    std::size_t i = 1;
    while (i < name.size() && (alpha(name[i]) || digit(name[i]))) {
        ++i;
    }
    if (i == name.size()) {
        return true;
    }
    if (name[i] != '[' || i + 1 >= name.size()) {
        return false;
    }
    std::size_t j = i + 1;
    while (j < name.size() && digit(name[j])) {
        ++j;
    }
    return j > i + 1 && j == name.size() - 1 && name[j] == ']';
}

// Ordered list of variable names; position is the index and the list order
// is the term order x1 > x2 > ... > xn.
class VarContext {
public:
    VarContext() = default;
    explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (!is_valid_identifier(names_[i])) {
                throw Error("invalid variable name: '" + names_[i] + "'");
            }
            for (std::size_t j = i + 1; j < names_.size(); ++j) {
                if (names_[i] == names_[j]) {
                    throw Error("duplicate variable name: '" + names_[i] + "'");
                }
            }
        }
    }

    std::size_t size() const { return names_.size(); }
    bool empty() const { return names_.empty(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<std::size_t> index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i] == name) {
                return i;
            }
        }
        return std::nullopt;
    }
    bool contains(std::string_view name) const { return index_of(name).has_value(); }

    VarContext extended(const std::string& newvar) const {
        if (contains(newvar)) {
            throw VariableClash("variable '" + newvar + "' already in context");
        }
        std::vector<std::string> names = names_;
        names.push_back(newvar);
        return VarContext(std::move(names));
    }

    VarContext without(std::size_t index) const {
        std::vector<std::string> names = names_;
        names.erase(names.begin() + static_cast<std::ptrdiff_t>(index));
        return VarContext(std::move(names));
    }

    friend bool operator==(const VarContext&, const VarContext&) = default;

private:
    std::vector<std::string> names_;
};

// Exponent vector sized to a context.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}
    static Monomial one(std::size_t nvars) { return Monomial(std::vector<int>(nvars, 0)); }
    static Monomial variable(std::size_t nvars, std::size_t index) {
        Monomial m = one(nvars);
        m.exponents[index] = 1;
        return m;
    }

    int degree() const {
        int d = 0;
        for (int e : exponents) {
            d += e;
        }
        return d;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// lex descending with x1 > x2 > ... > xn: larger exponent vector first
struct MonomialLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return a.exponents > b.exponents; }
};

// All monomials of total degree d in n variables, lex descending.
inline std::vector<Monomial> monomial_basis(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) {
            out.emplace_back();
        }
        return out;
    }
    std::vector<int> current(nvars, 0);
    auto rec = [&](auto&& self, std::size_t pos, int remaining) -> void {
        if (pos == nvars - 1) {
            current[pos] = remaining;
            out.push_back(Monomial(current));
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            current[pos] = e;
            self(self, pos + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

// Sparse multivariate polynomial with exact rational coefficients.
// Terms are kept normalized (no zero coefficients) and iterate in
// lex-descending order, which is also the printing order.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLexGreater>;

    explicit Polynomial(VarContext ctx) : ctx_(std::move(ctx)) {}

    static Polynomial zero(VarContext ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(VarContext ctx, const Rational& c) {
        Polynomial p(std::move(ctx));
        p.add_term(Monomial::one(p.ctx_.size()), c);
        return p;
    }
    static Polynomial variable(VarContext ctx, std::size_t index) {
        if (index >= ctx.size()) {
            throw UnknownVariable("variable index out of range");
        }
        Polynomial p(std::move(ctx));
        p.add_term(Monomial::variable(p.ctx_.size(), index), 1);
        return p;
    }

    const VarContext& context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    Rational constant_term() const { return coefficient(Monomial::one(ctx_.size())); }

    // The zero polynomial has no degree (the "minus infinity" marker).
    std::optional<int> degree() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            const int md = m.degree();
            if (!d || md > *d) {
                d = md;
            }
        }
        return d;
    }

    bool is_homogeneous() const {
        std::optional<int> d;
        for (const auto& [m, c] : terms_) {
            const int md = m.degree();
            if (d && md != *d) {
                return false;
            }
            d = md;
        }
        return true;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.exponents.size() != ctx_.size()) {
            throw ContextMismatch("monomial sized to a different context");
        }
        if (c.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    Polynomial operator-() const {
        Polynomial out(ctx_);
        for (const auto& [m, c] : terms_) {
            out.terms_.emplace(m, -c);
        }
        return out;
    }

    Polynomial& operator+=(const Polynomial& o) {
        require_same_context(o);
        for (const auto& [m, c] : o.terms_) {
            add_term(m, c);
        }
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        require_same_context(o);
        for (const auto& [m, c] : o.terms_) {
            add_term(m, -c);
        }
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.require_same_context(b);
        Polynomial out(a.ctx_);
        const std::size_t n = a.ctx_.size();
        for (const auto& [ma, ca] : a.terms_) {
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (std::size_t i = 0; i < n; ++i) {
                    m.exponents[i] += mb.exponents[i];
                }
                out.add_term(m, ca * cb);
            }
        }
        return out;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& f) {
        Polynomial out(f.ctx_);
        if (c.is_zero()) {
            return out;
        }
        for (const auto& [m, coeff] : f.terms_) {
            out.terms_.emplace(m, c * coeff);
        }
        return out;
    }
    friend Polynomial operator*(const Polynomial& f, const Rational& c) { return c * f; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void require_same_context(const Polynomial& o) const {
        if (ctx_ != o.ctx_) {
            throw ContextMismatch("polynomials over different variable contexts");
        }
    }

    VarContext ctx_;
    TermMap terms_;
};

inline Polynomial pow(const Polynomial& f, int exponent) {
    Polynomial result = Polynomial::constant(f.context(), 1);
    for (int i = 0; i < exponent; ++i) {
        result = result * f;
    }
    return result;
}

inline Polynomial partial(const Polynomial& f, std::size_t var_index) {
    if (var_index >= f.context().size()) {
        throw UnknownVariable("partial: variable index out of range");
    }
    Polynomial out(f.context());
    for (const auto& [m, c] : f.terms()) {
        const int e = m.exponents[var_index];
        if (e == 0) {
            continue;
        }
        Monomial d = m;
        d.exponents[var_index] = e - 1;
        out.add_term(d, c * Rational(e));
    }
    return out;
}

// Action of the monomial differential operator with exponent vector alpha:
// each term x^beta maps to prod_i beta_i!/(beta_i - alpha_i)! x^(beta-alpha),
// and dies when beta is not componentwise >= alpha.
inline Polynomial apply_diff(const Polynomial& f, const Monomial& alpha) {
    const std::size_t n = f.context().size();
    if (alpha.exponents.size() != n) {
        throw ContextMismatch("apply_diff: operator sized to a different context");
    }
    Polynomial out(f.context());
    for (const auto& [m, c] : f.terms()) {
        bool vanishes = false;
        BigInt factor = 1;
        Monomial d = m;
        for (std::size_t i = 0; i < n; ++i) {
            const int b = m.exponents[i], a = alpha.exponents[i];
            if (b < a) {
                vanishes = true;
                break;
            }
            for (int k = b; k > b - a; --k) {
                factor *= k;
            }
            d.exponents[i] = b - a;
        }
        if (!vanishes) {
            out.add_term(d, c * Rational(factor));
        }
    }
    return out;
}

// Ring homomorphism x_i -> images[i], by exact expansion. The target context
// is taken from the images; pass it explicitly when images is empty.
inline Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images,
                             std::optional<VarContext> target = std::nullopt) {
    const std::size_t n = f.context().size();
    if (images.size() != n) {
        throw ContextMismatch("substitute: one image per variable required");
    }
    if (!images.empty()) {
        for (const auto& img : images) {
            if (img.context() != images[0].context()) {
                throw ContextMismatch("substitute: images over different contexts");
            }
        }
        if (target && *target != images[0].context()) {
            throw ContextMismatch("substitute: target context disagrees with images");
        }
        target = images[0].context();
    } else if (!target) {
        throw ContextMismatch("substitute: empty image list needs an explicit target context");
    }

    // cache images[i]^k as needed
    std::vector<std::vector<Polynomial>> powers(n);
    auto power = [&](std::size_t i, int e) -> const Polynomial& {
        auto& cache = powers[i];
        if (cache.empty()) {
            cache.push_back(Polynomial::constant(*target, 1));
        }
        while (static_cast<int>(cache.size()) <= e) {
            cache.push_back(cache.back() * images[i]);
        }
        return cache[static_cast<std::size_t>(e)];
    };

    Polynomial out(*target);
    for (const auto& [m, c] : f.terms()) {
        Polynomial prod = Polynomial::constant(*target, c);
        for (std::size_t i = 0; i < n; ++i) {
            if (m.exponents[i] > 0) {
                prod = prod * power(i, m.exponents[i]);
            }
        }
        out += prod;
    }
    return out;
}

// Multiplies each term by newvar^(d - term degree); newvar goes last in the
// extended context. The zero polynomial maps to zero over the extended context.
inline Polynomial homogenize(const Polynomial& f, const std::string& newvar) {
    if (!is_valid_identifier(newvar)) {
        throw Error("invalid variable name: '" + newvar + "'");
    }
    const VarContext extended = f.context().extended(newvar);
    Polynomial out(extended);
    const int d = f.degree().value_or(0);
    for (const auto& [m, c] : f.terms()) {
        Monomial lifted = m;
        lifted.exponents.push_back(d - m.degree());
        out.add_term(lifted, c);
    }
    return out;
}

// Sets var = 1 and removes it from the context.
inline Polynomial dehomogenize(const Polynomial& f, const std::string& var) {
    const auto index = f.context().index_of(var);
    if (!index) {
        throw UnknownVariable("dehomogenize: no variable '" + var + "'");
    }
    Polynomial out(f.context().without(*index));
    for (const auto& [m, c] : f.terms()) {
        Monomial dropped = m;
        dropped.exponents.erase(dropped.exponents.begin() + static_cast<std::ptrdiff_t>(*index));
        out.add_term(dropped, c);
    }
    return out;
}

inline Rational evaluate(const Polynomial& f, const std::vector<Rational>& point) {
    if (point.size() != f.context().size()) {
        throw ContextMismatch("evaluate: point size differs from context");
    }
    Rational total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational term = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            term *= pow(point[i], m.exponents[i]);
        }
        total += term;
    }
    return total;
}

// First name in base, base1, base2, ... that is free in the context.
inline std::string fresh_variable_name(const VarContext& ctx, const std::string& base) {
    if (!ctx.contains(base)) {
        return base;
    }
    for (int k = 1;; ++k) {
        std::string candidate = base + std::to_string(k);
        if (!ctx.contains(candidate)) {
            return candidate;
        }
    }
}

// A homogeneous degree-<=1 polynomial viewed through its coefficient vector.
struct LinearForm {
    VarContext context;
    std::vector<Rational> coefficients;

    LinearForm(VarContext ctx, std::vector<Rational> coeffs)
        : context(std::move(ctx)), coefficients(std::move(coeffs)) {
        if (coefficients.size() != context.size()) {
            throw ContextMismatch("linear form needs one coefficient per variable");
        }
    }

    static LinearForm zero(VarContext ctx) {
        const std::size_t n = ctx.size();
        return LinearForm(std::move(ctx), std::vector<Rational>(n));
    }

    static LinearForm from_polynomial(const Polynomial& p) {
        LinearForm out = zero(p.context());
        for (const auto& [m, c] : p.terms()) {
            if (m.degree() != 1) {
                throw NotHomogeneous("not a homogeneous linear form");
            }
            for (std::size_t i = 0; i < m.exponents.size(); ++i) {
                if (m.exponents[i] == 1) {
                    out.coefficients[i] = c;
                }
            }
        }
        return out;
    }

    Polynomial to_polynomial() const {
        Polynomial p(context);
        for (std::size_t i = 0; i < coefficients.size(); ++i) {
            p.add_term(Monomial::variable(context.size(), i), coefficients[i]);
        }
        return p;
    }

    bool is_zero() const {
        return std::all_of(coefficients.begin(), coefficients.end(),
                           [](const Rational& c) { return c.is_zero(); });
    }

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

}  // namespace essvar
