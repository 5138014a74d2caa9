#include "lexgb/report.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <stdexcept>

#include "lexgb/groebner.hpp"
#include "lexgb/polyio.hpp"
#include "lexgb/sequences.hpp"
#include "lexgb/systems.hpp"

namespace lexgb {

namespace {

constexpr std::array<std::string_view, 9> kKeys = {
    "prop-caso-par",         "cor-teorem",    "prop-proposicion03",
    "lemma-catalan",         "prop-catalan-identity", "prop-central",
    "cor-ideales-iguales",   "thm-proposicion10",     "cross-buchberger",
};

template <typename F>
CheckResult timed(F&& body) {
    const auto start = std::chrono::steady_clock::now();
    CheckResult out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.pass = false;
        out.witness = std::string("exception: ") + e.what();
    }
    out.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

CheckResult pass() { return CheckResult{true, {}, 0.0}; }
CheckResult fail(std::string why) { return CheckResult{false, std::move(why), 0.0}; }

Polynomial var(const Ring& ring, int k, unsigned e = 1) { return Polynomial::variable(ring, "C" + std::to_string(k), e); }

CheckResult tilde_construction(const ClosedFormParams& params, const IdealBasis& system, const ClosedFormBasis& g) {
    const int r = params.r;
    const Ring& ring = system.ring();
    const Rational half(1, 2);
    auto E = [&](int i) -> const Polynomial& { return system[static_cast<std::size_t>(i - 1)]; };

    for (int s = 1; s <= r; ++s) {
        Polynomial rhs = E(2 * s - 1).scaled(half);
        for (int i = 1; i <= s - 1; ++i) rhs -= g.tilde(2 * i - 1) * var(ring, 2 * (s - i) - 1);
        if (rhs != g.tilde(2 * s - 1))
            return fail("odd generator ~E_" + std::to_string(2 * s - 1) + " does not telescope: got " + to_text(rhs));
    }
    for (int j = 1; j <= r; ++j) {
        const Polynomial lhs = var(ring, 2 * j + 1) +
                               var(ring, 1, static_cast<unsigned>(j + 1)).scaled(params.lambdas[static_cast<std::size_t>(j)]) -
                               E(2 * j).scaled(half);
        const Polynomial rem = reduce(lhs, g.prefix(2 * j - 1).gens());
        if (!rem.is_zero())
            return fail("even generator ~E_" + std::to_string(2 * j) + " leaves remainder " + to_text(rem));
    }
    return pass();
}

CheckResult central(const ClosedFormParams& params, const IdealBasis& system, const ClosedFormBasis& g) {
    const int r = params.r;
    const Ring& ring = system.ring();
    const Polynomial coeff = system[static_cast<std::size_t>(2 * r)] - Polynomial::variable(ring, "y");
    const Polynomial diff = coeff - var(ring, 1, static_cast<unsigned>(r + 1)).scaled(params.mu);
    const Polynomial rem = reduce(diff, g.prefix(2 * r).gens());
    if (!rem.is_zero()) return fail("remainder " + to_text(rem));
    return pass();
}

CheckResult ideal_equality(const IdealBasis& a, const IdealBasis& b) {
    if (ideal_equal(a, b)) return pass();
    return fail("ideals differ: " + a.label() + " vs " + b.label());
}

CheckResult lemma_link(int r) {
    const std::int64_t jmax = 2 * r;
    const auto lam = lambda_by_recursion(static_cast<std::size_t>(jmax) + 1);
    const auto cat = catalan_by_recursion(static_cast<std::size_t>(jmax) + 1);
    for (std::int64_t j = 0; j <= jmax; ++j) {
        const auto ju = static_cast<std::size_t>(j);
        BigInt two_j = 1;
        mpz_mul_2exp(two_j.get_mpz_t(), two_j.get_mpz_t(), ju);
        const Rational d = sign_power(static_cast<long>(j) + 1) * Rational(two_j) * lam[ju];
        if (d != Rational(catalan(j)) || cat[ju] != catalan(j) || lam[ju] != lambda_j(j))
            return fail("link fails at j=" + std::to_string(j));
    }
    return pass();
}

CheckResult catalan_identities(int r) {
    for (std::int64_t k = 0; k <= 2 * r; ++k) {
        if (!catalan_identity(k)) return fail("Catalan identity fails at r=" + std::to_string(k));
        if (!lambda_binomial_identity(k)) return fail("lambda identity fails at r=" + std::to_string(k));
    }
    return pass();
}

}  // namespace

std::string_view claim_key(Claim c) { return kKeys[static_cast<std::size_t>(c)]; }

Claim claim_from_key(std::string_view key) {
    for (std::size_t i = 0; i < kKeys.size(); ++i)
        if (kKeys[i] == key) return kAllClaims[i];
    throw std::invalid_argument("unknown claim key '" + std::string(key) + "'");
}

bool VerificationReport::all_pass() const {
    return checks.size() == kAllClaims.size() &&
           std::all_of(checks.begin(), checks.end(), [](const ClaimResult& c) { return c.result.pass; });
}

const CheckResult& VerificationReport::at(Claim c) const {
    for (const auto& cr : checks)
        if (cr.claim == c) return cr.result;
    throw std::out_of_range("claim missing from report: " + std::string(claim_key(c)));
}

CheckResult verify_tilde_construction(int r) { return verify_tilde_construction(ClosedFormParams::exact(r)); }

CheckResult verify_tilde_construction(const ClosedFormParams& params) {
    return timed([&] { return tilde_construction(params, build_special_system(params.r), closed_form(params)); });
}

CheckResult verify_central(int r) { return verify_central(ClosedFormParams::exact(r)); }

CheckResult verify_central(const ClosedFormParams& params) {
    return timed([&] { return central(params, build_special_system(params.r), closed_form(params)); });
}

CheckResult check_groebner(const IdealBasis& basis) {
    return timed([&] {
        const GroebnerCheck c = is_groebner(basis);
        if (c) return pass();
        return fail("S(" + std::to_string(c.witness->i + 1) + "," + std::to_string(c.witness->j + 1) +
                    ") leaves remainder " + to_text(c.witness->remainder));
    });
}

CheckResult cross_check(const IdealBasis& system, const IdealBasis& candidate, std::uint64_t seed,
                        IdealBasis* reduced_system) {
    return timed([&] {
        std::vector<Polynomial> gens = system.gens();
        if (seed != 0) {
            std::mt19937_64 rng(seed);
            std::shuffle(gens.begin(), gens.end(), rng);
        }
        const IdealBasis lhs = reduced_groebner_basis(IdealBasis(system.ring(), std::move(gens), system.label()));
        if (reduced_system) *reduced_system = lhs;
        const IdealBasis rhs = is_groebner(candidate) ? interreduce(candidate) : reduced_groebner_basis(candidate);
        if (lhs.gens() == rhs.gens()) return pass();
        for (const auto& g : rhs.gens())
            if (const Polynomial rem = reduce(g, lhs.gens()); !rem.is_zero())
                return fail("candidate generator " + to_text(g) + " leaves remainder " + to_text(rem));
        for (const auto& g : lhs.gens())
            if (const Polynomial rem = reduce(g, rhs.gens()); !rem.is_zero())
                return fail("system generator " + to_text(g) + " leaves remainder " + to_text(rem));
        return fail("reduced bases differ in shape");
    });
}

VerificationReport verify_all(int r, const VerifyOptions& opts) { return verify_all(ClosedFormParams::exact(r), opts); }

VerificationReport verify_all(const ClosedFormParams& params, const VerifyOptions& opts) {
    const int r = params.r;
    VerificationReport report;
    report.r = r;
    const IdealBasis system = build_special_system(r);
    const ClosedFormBasis g = closed_form(params);
    const IdealBasis system_2r(system.ring(),
                               std::vector<Polynomial>(system.gens().begin(), system.gens().begin() + 2 * r),
                               "E_1..E_2r");
    const IdealBasis g_2r = g.prefix(2 * r);
    const IdealBasis g_full = g.full();

    IdealBasis reduced(system.ring());
    for (Claim c : kAllClaims) {
        CheckResult res;
        switch (c) {
        case Claim::even_generators:
            res = timed([&] { return tilde_construction(params, system, g); });
            break;
        case Claim::ideal_2r_equal:
            res = timed([&] { return ideal_equality(system_2r, g_2r); });
            break;
        case Claim::groebner_2r:
            res = check_groebner(g_2r);
            break;
        case Claim::catalan_lambda_link:
            res = timed([&] { return lemma_link(r); });
            break;
        case Claim::catalan_identity:
            res = timed([&] { return catalan_identities(r); });
            break;
        case Claim::central_reduction:
            res = timed([&] { return central(params, system, g); });
            break;
        case Claim::ideal_full_equal:
            res = timed([&] { return ideal_equality(system, g_full); });
            break;
        case Claim::groebner_full:
            res = check_groebner(g_full);
            break;
        case Claim::cross_buchberger:
            res = cross_check(system, g_full, opts.seed, &reduced);
            break;
        }
        report.checks.push_back(ClaimResult{c, std::move(res)});
    }
    if (!reduced.empty()) report.reduced_basis = std::move(reduced);
    return report;
}

}  // namespace lexgb
