#include "lexgb/systems.hpp"

#include <stdexcept>

namespace lexgb {

SystemSpec SystemSpec::with_leading_weight(int n, int m, std::string f_symbol) {
    SystemSpec s;
    s.n = n;
    s.m = m;
    s.f_symbol = std::move(f_symbol);
    s.q_weights.assign(static_cast<std::size_t>(std::max(m + n - 1, 1)), Rational(0));
    s.q_weights[0] = Rational(1);
    return s;
}

void SystemSpec::validate() const {
    auto fail = [](const std::string& why) { throw std::invalid_argument("invalid system: " + why); };
    if (n < 2) fail("n must be at least 2");
    if (m < 2) fail("m must be at least 2");
    if (m % n == 0) fail("n divides m");
    if (n % m == 0) fail("m divides n");
    if (q_weights.size() != static_cast<std::size_t>(m + n - 1))
        fail("expected " + std::to_string(m + n - 1) + " weights, got " + std::to_string(q_weights.size()));
    if (!q_weights[0].is_one()) fail("the leading weight must be 1");
    if (f_symbol.empty()) fail("empty F symbol");
    if (f_symbol.size() >= 2 && f_symbol[0] == 'C' &&
        f_symbol.find_first_not_of("0123456789", 1) == std::string::npos)
        fail("F symbol '" + f_symbol + "' collides with an unknown");
}

Ring special_ring(int r) {
    if (r < 1) throw std::invalid_argument("rank r must be at least 1");
    return coefficient_ring(static_cast<std::size_t>(2 * r + 1));
}

IdealBasis build_special_system(int r, std::optional<int> floor) {
    const Ring ring = special_ring(r);
    const std::size_t T = static_cast<std::size_t>(2 * r + 1);
    const LaurentSeries c = generic_C(T, ring, floor);
    const LaurentSeries c2 = series_mul(c, c);
    IdealBasis out(ring, {}, "special system r=" + std::to_string(r));
    for (int i = 1; i <= 2 * r; ++i) out.push_back(c2.coefficient(-i));
    const LaurentSeries cpow = series_pow(c, static_cast<unsigned>(2 * r + 1));
    out.push_back(cpow.coefficient(-1) + Polynomial::variable(ring, "y"));
    return out;
}

Polynomial e_poly_direct(int i, const Ring& ring) {
    if (i < 1) throw std::invalid_argument("equation index must be positive");
    auto var = [&](int k) {
        const std::string name = "C" + std::to_string(k);
        if (!ring->index_of(name)) throw std::invalid_argument("ring lacks variable " + name);
        return Polynomial::variable(ring, name);
    };
    Polynomial e = var(i + 1).scaled(Rational(2));
    for (int k = 1; k <= i - 1; ++k) e += var(k) * var(i - k);
    return e;
}

IdealBasis build_general_system(const SystemSpec& spec, std::optional<int> floor) {
    spec.validate();
    const int T = spec.unknowns();
    const Ring ring = coefficient_ring(static_cast<std::size_t>(T), spec.f_symbol);
    const LaurentSeries c = generic_C(static_cast<std::size_t>(T), ring, floor);
    const int fl = c.floor();

    IdealBasis out(ring, {}, "system n=" + std::to_string(spec.n) + " m=" + std::to_string(spec.m));
    const LaurentSeries cn = series_pow(c, static_cast<unsigned>(spec.n));
    for (int k = 1; k <= spec.m - 1; ++k) out.push_back(cn.coefficient(-k));

    // sum_i q_i C^{m-i}, exponents running from m down to 2 - n
    LaurentSeries q_sum(ring, spec.m, fl);
    LaurentSeries positive = LaurentSeries::one(ring, fl);
    std::vector<LaurentSeries> positive_powers{positive};
    for (int p = 1; p <= spec.m; ++p) positive_powers.push_back(series_mul(positive_powers.back(), c));
    std::vector<LaurentSeries> negative_powers{positive};
    if (spec.n > 2) {
        const LaurentSeries inv = series_inverse(c);
        for (int p = 1; p <= spec.n - 2; ++p) negative_powers.push_back(series_mul(negative_powers.back(), inv));
    }
    for (int i = 0; i <= spec.m + spec.n - 2; ++i) {
        const Rational& w = spec.q_weights[static_cast<std::size_t>(i)];
        if (w.is_zero()) continue;
        const int p = spec.m - i;
        const LaurentSeries& power = p >= 0 ? positive_powers[static_cast<std::size_t>(p)]
                                            : negative_powers[static_cast<std::size_t>(-p)];
        q_sum += power.scaled(w);
    }
    for (int k = 1; k <= spec.n - 2; ++k) out.push_back(q_sum.coefficient(-k));
    out.push_back(q_sum.coefficient(1 - spec.n) + Polynomial::variable(ring, spec.f_symbol));
    return out;
}

}  // namespace lexgb
