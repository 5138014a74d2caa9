#pragma once

// Sparse multivariate polynomials over Rational in a declared variable table.
// Terms are kept strictly decreasing under lex with no zero coefficients;
// the empty term list is the zero polynomial.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexgb/monomial.hpp"
#include "lexgb/rational.hpp"

namespace lexgb {

enum class MonomialOrder { lex };

/// Ordered variable names; position 0 is the most significant under lex.
class VarTable {
public:
    /// Throws std::invalid_argument on duplicate or empty names.
    explicit VarTable(std::vector<std::string> names, MonomialOrder order = MonomialOrder::lex);

    std::size_t rank() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;
    MonomialOrder order() const { return order_; }

    /// Display name: internal "Ck" prints as C_{-k}; anything else verbatim.
    std::string display_name(std::size_t i) const;

    friend bool operator==(const VarTable& a, const VarTable& b) {
        return a.order_ == b.order_ && a.names_ == b.names_;
    }

private:
    std::vector<std::string> names_;
    MonomialOrder order_;
};

using Ring = std::shared_ptr<const VarTable>;

Ring make_ring(std::vector<std::string> names);

/// Ring C{top} > ... > C1 > f_symbol, the unknowns C_{-k} followed by y.
Ring coefficient_ring(std::size_t top, const std::string& f_symbol = "y");

bool same_ring(const Ring& a, const Ring& b);
/// Throws std::invalid_argument unless same_ring(a, b).
void require_same_ring(const Ring& a, const Ring& b);

struct Term {
    Rational coeff;
    Monomial mono;

    friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
public:
    /// Zero polynomial of `ring`.
    explicit Polynomial(Ring ring);

    /// Sorts, merges equal monomials and drops zero coefficients.
    static Polynomial from_terms(Ring ring, std::vector<Term> terms);
    static Polynomial constant(Ring ring, const Rational& c);
    static Polynomial variable(Ring ring, std::string_view name, unsigned exponent = 1);
    static Polynomial term(Ring ring, const Rational& c, Monomial mono);

    const Ring& ring() const { return ring_; }
    std::span<const Term> terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Throws std::domain_error on the zero polynomial.
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }
    const Rational& leading_coeff() const { return leading_term().coeff; }

    std::uint64_t total_degree() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Rational& c) const;
    /// c * m * this; the term order is preserved by monomial multiplication.
    Polynomial mul_term(const Rational& c, const Monomial& m) const;
    Polynomial pow(unsigned exponent) const;
    /// Leading coefficient scaled to 1; zero stays zero.
    Polynomial monic() const;

    /// this -= c * m * g, in one merge pass.
    Polynomial& sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& g);

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    Polynomial(Ring ring, std::vector<Term> canonical_terms);
    void merge_from(const Polynomial& o, const Rational& scale, const Monomial* shift);

    Ring ring_;
    std::vector<Term> terms_;
};

/// Free-function spellings used by the algorithm code.
inline const Term& leading_term(const Polynomial& f) { return f.leading_term(); }
Polynomial pow(const Polynomial& f, unsigned exponent);

}  // namespace lexgb
