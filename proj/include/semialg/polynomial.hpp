#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "varorder.hpp"

namespace semialg {

using Exponents = std::vector<unsigned>;

inline unsigned long exp_total(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0ul);
}

// Graded lexicographic order: total degree first, ties broken by the earlier
// ring variable carrying the larger exponent.
inline int grlex_cmp(const Exponents& a, const Exponents& b) {
    unsigned long da = exp_total(a), db = exp_total(b);
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
    return 0;
}

struct Term {
    Exponents exp;
    Rational coef;
};

// Sparse multivariate polynomial with rational coefficients.  Terms are kept
// in strictly descending graded-lex order with no zero coefficients, so equal
// polynomials have identical term sequences.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(VarOrderPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(VarOrderPtr ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(VarOrderPtr ring, const Rational& c) {
        Polynomial p(std::move(ring));
        if (sign(c) != 0)
            p.terms_.push_back(Term{Exponents(p.ring_->size(), 0), c});
        return p;
    }

    static Polynomial variable(VarOrderPtr ring, std::size_t idx) {
        Polynomial p(std::move(ring));
        if (idx >= p.ring_->size())
            throw error(errc::unknown_variable, "variable index out of range");
        Exponents e(p.ring_->size(), 0);
        e[idx] = 1;
        p.terms_.push_back(Term{std::move(e), Rational(1)});
        return p;
    }

    static Polynomial from_terms(VarOrderPtr ring, std::vector<Term> ts) {
        auto desc = [](const Exponents& x, const Exponents& y) { return grlex_cmp(x, y) > 0; };
        std::map<Exponents, Rational, decltype(desc)> acc(desc);
        for (auto& t : ts) acc[std::move(t.exp)] += t.coef;
        Polynomial p(std::move(ring));
        p.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (sign(c) != 0) p.terms_.push_back(Term{e, std::move(c)});
        return p;
    }

    static Polynomial monomial(VarOrderPtr ring, Exponents e, const Rational& c) {
        Polynomial p(std::move(ring));
        if (e.size() != p.ring_->size())
            throw error(errc::bad_input, "exponent vector length mismatch");
        if (sign(c) != 0)
            p.terms_.push_back(Term{std::move(e), c});
        return p;
    }

    const VarOrderPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && exp_total(terms_[0].exp) == 0);
    }

    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (!is_constant())
            throw error(errc::bad_input, "polynomial is not constant");
        return terms_[0].coef;
    }

    // -1 for the zero polynomial.
    long total_degree() const {
        return terms_.empty() ? -1 : static_cast<long>(exp_total(terms_[0].exp));
    }

    long degree_in(std::size_t var) const {
        if (terms_.empty()) return -1;
        long d = 0;
        for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.exp[var]));
        return d;
    }

    bool depends_on(std::size_t var) const {
        for (const auto& t : terms_)
            if (t.exp[var] > 0) return true;
        return false;
    }

    std::vector<std::size_t> variables() const {
        std::vector<std::size_t> out;
        if (!ring_) return out;
        for (std::size_t v = 0; v < ring_->size(); ++v)
            if (depends_on(v)) out.push_back(v);
        return out;
    }

    const Rational& leading_coefficient() const {
        if (terms_.empty())
            throw error(errc::zero_poly, "zero polynomial has no leading term");
        return terms_[0].coef;
    }

    friend Polynomial operator-(const Polynomial& p) {
        Polynomial r(p.ring_);
        r.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_) r.terms_.push_back(Term{t.exp, -t.coef});
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        check_rings(a, b);
        Polynomial r(a.ring_ ? a.ring_ : b.ring_);
        r.terms_.reserve(a.terms_.size() + b.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms_.size() && j < b.terms_.size()) {
            int c = grlex_cmp(a.terms_[i].exp, b.terms_[j].exp);
            if (c > 0) {
                r.terms_.push_back(a.terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(b.terms_[j++]);
            } else {
                Rational s = a.terms_[i].coef + b.terms_[j].coef;
                if (sign(s) != 0) r.terms_.push_back(Term{a.terms_[i].exp, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
        for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        check_rings(a, b);
        Polynomial r(a.ring_ ? a.ring_ : b.ring_);
        if (a.terms_.empty() || b.terms_.empty()) return r;
        auto desc = [](const Exponents& x, const Exponents& y) { return grlex_cmp(x, y) > 0; };
        std::map<Exponents, Rational, decltype(desc)> acc(desc);
        for (const auto& ta : a.terms_) {
            for (const auto& tb : b.terms_) {
                Exponents e(ta.exp.size());
                for (std::size_t k = 0; k < e.size(); ++k) e[k] = ta.exp[k] + tb.exp[k];
                acc[std::move(e)] += ta.coef * tb.coef;
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& [e, c] : acc)
            if (sign(c) != 0) r.terms_.push_back(Term{e, std::move(c)});
        return r;
    }

    friend Polynomial operator*(const Rational& c, const Polynomial& p) {
        Polynomial r(p.ring_);
        if (sign(c) == 0) return r;
        r.terms_.reserve(p.terms_.size());
        for (const auto& t : p.terms_) r.terms_.push_back(Term{t.exp, c * t.coef});
        return r;
    }

    friend Polynomial operator*(const Polynomial& p, const Rational& c) { return c * p; }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial pow(unsigned e) const {
        Polynomial r = constant(ring_, Rational(1));
        Polynomial b = *this;
        unsigned n = e;
        while (n) {
            if (n & 1u) r *= b;
            if (n >>= 1) b *= b;
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (!same_ring(a.ring_, b.ring_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].exp != b.terms_[i].exp || a.terms_[i].coef != b.terms_[i].coef)
                return false;
        return true;
    }

    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Total order on same-ring polynomials (term-sequence lexicographic);
    // used only for deterministic sorting and map keys.
    static int cmp(const Polynomial& a, const Polynomial& b) {
        std::size_t n = std::min(a.terms_.size(), b.terms_.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = grlex_cmp(a.terms_[i].exp, b.terms_[i].exp);
            if (c != 0) return c;
            int s = ::cmp(a.terms_[i].coef, b.terms_[i].coef);
            if (s != 0) return s;
        }
        if (a.terms_.size() != b.terms_.size())
            return a.terms_.size() < b.terms_.size() ? -1 : 1;
        return 0;
    }

    friend bool operator<(const Polynomial& a, const Polynomial& b) { return cmp(a, b) < 0; }

    Rational evaluate(const std::vector<Rational>& point) const {
        if (!ring_ || point.size() != ring_->size())
            throw error(errc::missing_assignment, "point arity does not match ring");
        Rational acc(0);
        for (const auto& t : terms_) {
            Rational v = t.coef;
            for (std::size_t k = 0; k < t.exp.size(); ++k)
                if (t.exp[k]) v *= rational_pow(point[k], t.exp[k]);
            acc += v;
        }
        return acc;
    }

    // Substitutes rational values for a subset of the variables; the result
    // lives in the same ring and no longer depends on the assigned variables.
    Polynomial substitute(const std::map<std::size_t, Rational>& assign) const {
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            Rational c = t.coef;
            Exponents e = t.exp;
            for (const auto& [v, val] : assign) {
                if (v >= e.size())
                    throw error(errc::unknown_variable, "assignment index out of range");
                if (e[v]) {
                    c *= rational_pow(val, e[v]);
                    e[v] = 0;
                }
            }
            r += monomial(ring_, std::move(e), c);
        }
        return r;
    }

    Polynomial derivative(std::size_t var) const {
        Polynomial r(ring_);
        for (const auto& t : terms_) {
            if (t.exp[var] == 0) continue;
            Exponents e = t.exp;
            Rational c = t.coef * Rational(e[var]);
            e[var] -= 1;
            r.terms_.push_back(Term{std::move(e), std::move(c)});
        }
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& x, const Term& y) { return grlex_cmp(x.exp, y.exp) > 0; });
        return r;
    }

    // Coefficients with respect to one variable: result[k] is the coefficient
    // of var^k, a polynomial free of var in the same ring.
    std::vector<Polynomial> coefficients_in(std::size_t var) const {
        long d = 0;
        for (const auto& t : terms_) d = std::max(d, static_cast<long>(t.exp[var]));
        std::vector<Polynomial> out(static_cast<std::size_t>(d) + 1, Polynomial(ring_));
        if (terms_.empty()) return {Polynomial(ring_)};
        for (const auto& t : terms_) {
            Exponents e = t.exp;
            unsigned k = e[var];
            e[var] = 0;
            out[k] += monomial(ring_, std::move(e), t.coef);
        }
        return out;
    }

    Polynomial leading_coefficient_in(std::size_t var) const {
        auto cs = coefficients_in(var);
        return cs.back();
    }

    // Positive rational c such that (1/c) * this has coprime integer
    // coefficients.  Content of zero is defined as 1.
    Rational content() const {
        if (terms_.empty()) return Rational(1);
        Integer num_gcd(0), den_lcm(1);
        for (const auto& t : terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coef.get_num().get_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coef.get_den().get_mpz_t());
        }
        Rational c(num_gcd, den_lcm);
        c.canonicalize();
        return c;
    }

    Polynomial primitive() const {
        if (terms_.empty()) return *this;
        Rational c = content();
        return (Rational(1) / c) * *this;
    }

    // Primitive with positive leading coefficient.
    Polynomial normalized() const {
        Polynomial p = primitive();
        if (!p.terms_.empty() && sign(p.terms_[0].coef) < 0) p = -p;
        return p;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& t : terms_) {
            Rational c = t.coef;
            if (first) {
                if (sign(c) < 0) { os << "-"; c = -c; }
                first = false;
            } else {
                if (sign(c) < 0) { os << " - "; c = -c; }
                else os << " + ";
            }
            std::string mono;
            for (std::size_t v = 0; v < t.exp.size(); ++v) {
                if (t.exp[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += ring_->name(v);
                if (t.exp[v] > 1) mono += "^" + std::to_string(t.exp[v]);
            }
            if (mono.empty()) {
                os << semialg::to_string(c);
            } else {
                if (c != 1) os << semialg::to_string(c) << "*";
                os << mono;
            }
        }
        return os.str();
    }

private:
    static void check_rings(const Polynomial& a, const Polynomial& b) {
        if (a.ring_ && b.ring_ && !same_ring(a.ring_, b.ring_))
            throw error(errc::ring_mismatch, "operands live in different rings");
    }

    VarOrderPtr ring_;
    std::vector<Term> terms_;
};

// Rebuilds p over new_ring.  Every variable p actually uses must exist in
// new_ring; variables merely named in the old ring may be dropped.
inline Polynomial map_to_ring(const Polynomial& p, const VarOrderPtr& new_ring) {
    if (same_ring(p.ring(), new_ring)) return Polynomial(p);
    std::vector<long> where(p.ring()->size(), -1);
    for (std::size_t v = 0; v < p.ring()->size(); ++v) {
        auto idx = new_ring->index_of(p.ring()->name(v));
        if (idx) where[v] = static_cast<long>(*idx);
    }
    Polynomial r(new_ring);
    for (const auto& t : p.terms()) {
        Exponents e(new_ring->size(), 0);
        for (std::size_t v = 0; v < t.exp.size(); ++v) {
            if (t.exp[v] == 0) continue;
            if (where[v] < 0)
                throw error(errc::unknown_variable,
                            "'" + p.ring()->name(v) + "' missing from target ring");
            e[static_cast<std::size_t>(where[v])] = t.exp[v];
        }
        r += Polynomial::monomial(new_ring, std::move(e), t.coef);
    }
    return r;
}

// Quotient when divisor divides exactly; nullopt otherwise.
inline std::optional<Polynomial> try_exact_div(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero())
        throw error(errc::bad_divisor, "division by zero polynomial");
    if (!same_ring(num.ring(), den.ring()))
        throw error(errc::ring_mismatch, "operands live in different rings");
    // Dense integer long division when both operands involve one shared
    // variable; the sparse rational loop below is quadratic in the worst
    // case and slow on the big univariate polynomials projection produces.
    if (!num.is_zero() && !den.is_constant()) {
        std::size_t v = static_cast<std::size_t>(-1);
        bool single = true;
        for (const Polynomial* p : {&num, &den})
            for (std::size_t k : p->variables()) {
                if (v == static_cast<std::size_t>(-1)) v = k;
                else if (v != k) single = false;
            }
        if (single) {
            long dn = num.degree_in(v), dd = den.degree_in(v);
            if (dn < dd) return std::nullopt;
            Rational cn = num.content(), cd = den.content();
            std::vector<Integer> N(static_cast<std::size_t>(dn) + 1, Integer(0));
            std::vector<Integer> D(static_cast<std::size_t>(dd) + 1, Integer(0));
            Polynomial np = num.primitive(), dp = den.primitive();
            for (const auto& t : np.terms()) N[t.exp[v]] = t.coef.get_num();
            for (const auto& t : dp.terms()) D[t.exp[v]] = t.coef.get_num();
            std::vector<Integer> q(static_cast<std::size_t>(dn - dd) + 1, Integer(0));
            for (long i = dn - dd; i >= 0; --i) {
                Integer& lead = N[static_cast<std::size_t>(i + dd)];
                if (sign(lead) == 0) continue;
                if (!mpz_divisible_p(lead.get_mpz_t(), D.back().get_mpz_t()))
                    return std::nullopt;
                Integer& qi = q[static_cast<std::size_t>(i)];
                mpz_divexact(qi.get_mpz_t(), lead.get_mpz_t(), D.back().get_mpz_t());
                for (long j = 0; j <= dd; ++j)
                    N[static_cast<std::size_t>(i + j)] -= qi * D[static_cast<std::size_t>(j)];
            }
            for (long j = 0; j < dd; ++j)
                if (sign(N[static_cast<std::size_t>(j)]) != 0) return std::nullopt;
            std::vector<Term> ts;
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (sign(q[i]) == 0) continue;
                Exponents e(num.ring()->size(), 0);
                e[v] = static_cast<unsigned>(i);
                ts.push_back(Term{std::move(e), Rational(q[i])});
            }
            return (cn / cd) * Polynomial::from_terms(num.ring(), std::move(ts));
        }
    }
    Polynomial q(num.ring());
    Polynomial r = num;
    const Term& dl = den.terms()[0];
    while (!r.is_zero()) {
        const Term& rl = r.terms()[0];
        Exponents e(rl.exp.size());
        for (std::size_t k = 0; k < e.size(); ++k) {
            if (rl.exp[k] < dl.exp[k]) return std::nullopt;
            e[k] = rl.exp[k] - dl.exp[k];
        }
        Polynomial m = Polynomial::monomial(num.ring(), std::move(e), rl.coef / dl.coef);
        q += m;
        r -= m * den;
    }
    return q;
}

inline Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
    auto q = try_exact_div(num, den);
    if (!q)
        throw error(errc::bad_divisor, "inexact polynomial division");
    return *q;
}

} // namespace semialg
