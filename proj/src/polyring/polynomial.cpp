#include "lexgb/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace lexgb {

VarTable::VarTable(std::vector<std::string> names, MonomialOrder order) : names_(std::move(names)), order_(order) {
    std::unordered_set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw std::invalid_argument("empty variable name");
        if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable name '" + n + "'");
    }
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::string VarTable::display_name(std::size_t i) const {
    const std::string& n = name(i);
    if (n.size() >= 2 && n[0] == 'C' &&
        std::all_of(n.begin() + 1, n.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return "C_{-" + n.substr(1) + "}";
    return n;
}

Ring make_ring(std::vector<std::string> names) { return std::make_shared<const VarTable>(std::move(names)); }

Ring coefficient_ring(std::size_t top, const std::string& f_symbol) {
    std::vector<std::string> names;
    names.reserve(top + 1);
    for (std::size_t k = top; k >= 1; --k) names.push_back("C" + std::to_string(k));
    names.push_back(f_symbol);
    return make_ring(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) { return a == b || (a && b && *a == *b); }

void require_same_ring(const Ring& a, const Ring& b) {
    if (!same_ring(a, b)) throw std::invalid_argument("polynomials from different rings");
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(Ring ring) : ring_(std::move(ring)) {
    if (!ring_) throw std::invalid_argument("polynomial without a ring");
}

Polynomial::Polynomial(Ring ring, std::vector<Term> canonical_terms)
    : ring_(std::move(ring)), terms_(std::move(canonical_terms)) {}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
    if (!ring) throw std::invalid_argument("polynomial without a ring");
    for (const auto& t : terms)
        if (t.mono.rank() != ring->rank()) throw std::invalid_argument("term rank does not match ring");
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return lex_compare(a.mono, b.mono) > 0; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().mono == t.mono)
            out.back().coeff += t.coeff;
        else {
            if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
    return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
    const std::size_t rank = ring->rank();
    if (c.is_zero()) return Polynomial(std::move(ring));
    return Polynomial(std::move(ring), {Term{c, Monomial(rank)}});
}

Polynomial Polynomial::variable(Ring ring, std::string_view name, unsigned exponent) {
    const auto idx = ring->index_of(name);
    if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
    Monomial m(ring->rank());
    m.set(*idx, exponent);
    return Polynomial(std::move(ring), {Term{Rational(1), std::move(m)}});
}

Polynomial Polynomial::term(Ring ring, const Rational& c, Monomial mono) {
    if (mono.rank() != ring->rank()) throw std::invalid_argument("term rank does not match ring");
    if (c.is_zero()) return Polynomial(std::move(ring));
    return Polynomial(std::move(ring), {Term{c, std::move(mono)}});
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.front();
}

std::uint64_t Polynomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff = -t.coeff;
    return out;
}

// this += scale * shift * o  (shift may be null for the unit monomial)
void Polynomial::merge_from(const Polynomial& o, const Rational& scale, const Monomial* shift) {
    require_same_ring(ring_, o.ring_);
    if (o.terms_.empty() || scale.is_zero()) return;
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    auto next_b = [&]() {
        Term t{b->coeff * scale, shift ? b->mono * *shift : b->mono};
        ++b;
        return t;
    };
    std::optional<Term> pending;
    while (a != terms_.end() || b != o.terms_.end() || pending) {
        if (!pending && b != o.terms_.end()) pending = next_b();
        if (!pending) {
            out.push_back(std::move(*a++));
            continue;
        }
        if (a == terms_.end()) {
            out.push_back(std::move(*pending));
            pending.reset();
            continue;
        }
        const auto c = lex_compare(a->mono, pending->mono);
        if (c > 0) {
            out.push_back(std::move(*a++));
        } else if (c < 0) {
            out.push_back(std::move(*pending));
            pending.reset();
        } else {
            Rational sum = a->coeff + pending->coeff;
            if (!sum.is_zero()) out.push_back(Term{std::move(sum), std::move(a->mono)});
            ++a;
            pending.reset();
        }
    }
    terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    merge_from(o, Rational(1), nullptr);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    merge_from(o, Rational(-1), nullptr);
    return *this;
}

Polynomial& Polynomial::sub_mul_term(const Rational& c, const Monomial& m, const Polynomial& g) {
    merge_from(g, -c, &m);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_ring(a.ring_, b.ring_);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) products.push_back(Term{ta.coeff * tb.coeff, ta.mono * tb.mono});
    return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c.is_zero()) return Polynomial(ring_);
    Polynomial out = *this;
    for (auto& t : out.terms_) t.coeff *= c;
    return out;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
    if (c.is_zero()) return Polynomial(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(Term{t.coeff * c, t.mono * m});
    return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result = constant(ring_, Rational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(leading_coeff().inverse());
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
}

Polynomial pow(const Polynomial& f, unsigned exponent) { return f.pow(exponent); }

}  // namespace lexgb
