#pragma once

// Machine checks of every claim about the rank-r special system, collected
// into a serializable report.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lexgb/closed_form.hpp"
#include "lexgb/ideal_basis.hpp"

namespace lexgb {

enum class Claim {
    even_generators,      // C_{-2j-1} + lambda_j C_{-1}^{j+1} - E_{2j}/2 lies in <~E_1..~E_{2j-1}>
    ideal_2r_equal,       // <E_1..E_{2r}> = <~E_1..~E_{2r}>
    groebner_2r,          // ~E_1..~E_{2r} is a Groebner basis
    catalan_lambda_link,  // c_j = (-1)^{j+1} 2^j lambda_j
    catalan_identity,     // the binomial Catalan identity and its lambda form
    central_reduction,    // (C^{2r+1})_{-1} = mu_r C_{-1}^{r+1} modulo I_{2r}
    ideal_full_equal,     // <E_1..E_{2r+1}> = G_{2r+1}
    groebner_full,        // G_{2r+1} is a Groebner basis
    cross_buchberger,     // reduced Buchberger output equals reduced G_{2r+1}
};

inline constexpr std::array<Claim, 9> kAllClaims = {
    Claim::even_generators,  Claim::ideal_2r_equal,   Claim::groebner_2r,
    Claim::catalan_lambda_link, Claim::catalan_identity, Claim::central_reduction,
    Claim::ideal_full_equal, Claim::groebner_full,    Claim::cross_buchberger,
};

/// Stable report key for a claim ("prop-caso-par", ...).
std::string_view claim_key(Claim c);
/// Inverse of claim_key; throws std::invalid_argument.
Claim claim_from_key(std::string_view key);

struct CheckResult {
    bool pass = false;
    std::string witness;  // empty on success
    double wall_ms = 0.0;

    friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ClaimResult {
    Claim claim;
    CheckResult result;

    friend bool operator==(const ClaimResult&, const ClaimResult&) = default;
};

struct VerificationReport {
    int r = 1;
    std::vector<ClaimResult> checks;  // in kAllClaims order
    std::optional<IdealBasis> reduced_basis;

    bool all_pass() const;
    const CheckResult& at(Claim c) const;

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
    /// Nonzero: shuffle the system generators with this seed before the
    /// independent Buchberger run.
    std::uint64_t seed = 0;
};

/// Odd generators telescope exactly from E_{2s-1}; even generators differ
/// from E_{2j}/2 by an element of <~E_1..~E_{2j-1}>.
CheckResult verify_tilde_construction(int r);
CheckResult verify_tilde_construction(const ClosedFormParams& params);

/// Normal form of (C^{2r+1})_{-1} - mu_r C_{-1}^{r+1} modulo ~E_1..~E_{2r} is zero.
CheckResult verify_central(int r);
CheckResult verify_central(const ClosedFormParams& params);

/// is_groebner with the first failing pair as witness.
CheckResult check_groebner(const IdealBasis& basis);

/// interreduce(buchberger(system)) equals the reduced form of `candidate`
/// generator for generator. The witness names a generator whose normal form
/// modulo the other side is nonzero. `reduced_system` receives the
/// Buchberger-side basis when non-null.
CheckResult cross_check(const IdealBasis& system, const IdealBasis& candidate, std::uint64_t seed = 0,
                        IdealBasis* reduced_system = nullptr);

VerificationReport verify_all(int r, const VerifyOptions& opts = {});
VerificationReport verify_all(const ClosedFormParams& params, const VerifyOptions& opts = {});

}  // namespace lexgb
