#include "lexgb/closed_form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lexgb/sequences.hpp"
#include "lexgb/systems.hpp"

namespace lexgb {

namespace {

Polynomial var(const Ring& ring, int k, unsigned e = 1) { return Polynomial::variable(ring, "C" + std::to_string(k), e); }

}  // namespace

ClosedFormParams ClosedFormParams::exact(int r) {
    if (r < 1) throw std::invalid_argument("rank r must be at least 1");
    ClosedFormParams p;
    p.r = r;
    for (int t = 0; t <= r; ++t) p.lambdas.push_back(lambda_j(t));
    p.mu = mu_r(r);
    return p;
}

const Polynomial& ClosedFormBasis::tilde(int index) const {
    if (index < 1 || index > 2 * r + 1) throw std::out_of_range("closed-form generator index out of range");
    if (index == 2 * r + 1) return last;
    const auto k = static_cast<std::size_t>((index - 1) / 2);
    return index % 2 == 1 ? odd_gens.at(k) : even_gens.at(k);
}

IdealBasis ClosedFormBasis::prefix(int count) const {
    IdealBasis out(last.ring(), {}, "closed form r=" + std::to_string(r));
    for (int i = 1; i <= count; ++i) out.push_back(tilde(i));
    return out;
}

ClosedFormBasis closed_form(const ClosedFormParams& params) {
    const int r = params.r;
    const Ring ring = special_ring(r);
    if (params.lambdas.size() != static_cast<std::size_t>(r + 1))
        throw std::invalid_argument("closed form needs lambda_0..lambda_r");
    if (params.mu.is_zero()) throw std::invalid_argument("closed form needs mu_r != 0");

    ClosedFormBasis b{r, {}, {}, Polynomial(ring)};
    for (int t = 1; t <= r; ++t) {
        b.odd_gens.push_back(var(ring, 2 * t));
        b.even_gens.push_back(var(ring, 2 * t + 1) +
                              var(ring, 1, static_cast<unsigned>(t + 1)).scaled(params.lambdas[static_cast<std::size_t>(t)]));
    }
    b.last = var(ring, 1, static_cast<unsigned>(r + 1)).scaled(params.mu) + Polynomial::variable(ring, "y");
    return b;
}

IdealBasis closed_form_basis(int r) { return closed_form(ClosedFormParams::exact(r)).full(); }

IdealBasis expected_reduced_basis(int r) {
    const Ring ring = special_ring(r);
    const Polynomial y = Polynomial::variable(ring, "y");
    const Rational mu = mu_r(r);
    std::vector<Polynomial> gens;
    for (int t = 1; t <= r; ++t) gens.push_back(var(ring, 2 * t));
    for (int t = 1; t < r; ++t) gens.push_back(var(ring, 2 * t + 1) + var(ring, 1, static_cast<unsigned>(t + 1)).scaled(lambda_j(t)));
    gens.push_back(var(ring, 2 * r + 1) - y.scaled(lambda_j(r) / mu));
    gens.push_back(var(ring, 1, static_cast<unsigned>(r + 1)) + y.scaled(mu.inverse()));
    std::sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return lex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return IdealBasis(ring, std::move(gens), "expected reduced basis r=" + std::to_string(r));
}

}  // namespace lexgb
