#include "lexgb/division.hpp"

#include <optional>

namespace lexgb {

IdealBasis::IdealBasis(Ring ring, std::vector<Polynomial> gens, std::string label)
    : ring_(std::move(ring)), label_(std::move(label)) {
    if (!ring_) throw std::invalid_argument("ideal basis without a ring");
    gens_.reserve(gens.size());
    for (auto& g : gens) push_back(std::move(g));
}

void IdealBasis::push_back(Polynomial g) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) gens_.push_back(std::move(g));
}

namespace {

std::optional<std::size_t> find_divisor(const Monomial& m, std::span<const Polynomial> divisors) {
    for (std::size_t i = 0; i < divisors.size(); ++i)
        if (!divisors[i].is_zero() && divisors[i].leading_monomial().divides(m)) return i;
    return std::nullopt;
}

// Shared division loop. `quotient_terms` may be null when only the remainder
// is wanted.
Polynomial divide(const Polynomial& f, std::span<const Polynomial> divisors,
                  std::vector<std::vector<Term>>* quotient_terms, DivisionTrace* trace, std::size_t& steps,
                  std::size_t max_steps) {
    for (const auto& g : divisors) require_same_ring(f.ring(), g.ring());
    Polynomial p = f;
    std::vector<Term> rem;
    while (!p.is_zero()) {
        const Term lt = p.leading_term();
        if (trace) trace->leading_monomials.push_back(lt.mono);
        if (const auto i = find_divisor(lt.mono, divisors)) {
            if (steps == max_steps) throw StepLimitExceeded("reduction step limit exceeded");
            ++steps;
            const Polynomial& g = divisors[*i];
            const Rational c = lt.coeff / g.leading_coeff();
            const Monomial m = lt.mono.quotient(g.leading_monomial());
            if (quotient_terms) (*quotient_terms)[*i].push_back(Term{c, m});
            p.sub_mul_term(c, m, g);
        } else {
            rem.push_back(lt);
            p -= Polynomial::term(p.ring(), lt.coeff, lt.mono);
        }
    }
    // remainder terms arrive in strictly decreasing order
    return Polynomial::from_terms(f.ring(), std::move(rem));
}

}  // namespace

DivisionResult normal_form(const Polynomial& f, std::span<const Polynomial> divisors, DivisionTrace* trace) {
    DivisionResult out{{}, Polynomial(f.ring()), 0};
    std::vector<std::vector<Term>> qterms(divisors.size());
    out.remainder = divide(f, divisors, &qterms, trace, out.steps, kUnlimitedSteps);
    out.quotients.reserve(divisors.size());
    for (auto& q : qterms) out.quotients.push_back(Polynomial::from_terms(f.ring(), std::move(q)));
    return out;
}

DivisionResult normal_form(const Polynomial& f, const IdealBasis& basis, DivisionTrace* trace) {
    require_same_ring(f.ring(), basis.ring());
    return normal_form(f, std::span<const Polynomial>(basis.gens()), trace);
}

Polynomial reduce(const Polynomial& f, std::span<const Polynomial> divisors, std::size_t* steps,
                  std::size_t max_steps) {
    std::size_t local = 0;
    std::size_t& counter = steps ? *steps : local;
    return divide(f, divisors, nullptr, nullptr, counter, max_steps);
}

}  // namespace lexgb
