#pragma once

// S-polynomials, Buchberger's algorithm, reduced bases and ideal comparison
// under lex.

#include <cstddef>
#include <optional>
#include <string_view>

#include "lexgb/division.hpp"
#include "lexgb/ideal_basis.hpp"

namespace lexgb {

enum class PairStrategy {
    normal,  // smallest lcm total degree first, ties by smaller lcm under lex
    fifo,    // creation order
};

std::string_view strategy_name(PairStrategy s);
/// "normal" or "fifo"; throws std::invalid_argument otherwise.
PairStrategy parse_strategy(std::string_view name);

struct BuchbergerOptions {
    /// Skip pairs whose leading monomials are coprime (their S-polynomial
    /// always reduces to zero).
    bool use_coprime_criterion = true;
    PairStrategy pair_strategy = PairStrategy::normal;
    /// Total division steps before StepLimitExceeded is thrown.
    std::size_t max_reduction_steps = 10'000'000;
};

struct BuchbergerLog {
    std::size_t pairs_considered = 0;
    std::size_t pairs_skipped_coprime = 0;
    std::size_t reductions = 0;       // S-polynomials actually reduced
    std::size_t zero_reductions = 0;  // of which reduced to zero
    std::size_t reduction_steps = 0;  // division steps over the whole run
    std::size_t basis_size = 0;       // output generator count
};

struct GroebnerWitness {
    std::size_t i = 0;
    std::size_t j = 0;
    Polynomial remainder;
};

struct GroebnerCheck {
    bool ok = false;
    std::optional<GroebnerWitness> witness;  // first failing pair in (i, j) order
    std::size_t pairs_checked = 0;

    explicit operator bool() const { return ok; }
};

/// (L / lt(f)) f - (L / lt(g)) g with L = lcm(lm(f), lm(g)).
/// Throws std::domain_error for a zero argument.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Groebner basis of the input ideal: the input generators followed by every
/// nonzero (monic) S-pair remainder found. Throws std::invalid_argument on
/// an empty basis and StepLimitExceeded past the configured step limit.
IdealBasis buchberger(const IdealBasis& basis, const BuchbergerOptions& opts = {}, BuchbergerLog* log = nullptr);

/// Every S-pair (no criteria applied) has zero remainder modulo the basis.
GroebnerCheck is_groebner(const IdealBasis& basis);

/// Unique reduced Groebner basis: monic, tail-reduced, sorted by descending
/// leading monomial. Throws std::invalid_argument if the input is not a
/// Groebner basis.
IdealBasis interreduce(const IdealBasis& basis);

/// interreduce(buchberger(basis, opts)).
IdealBasis reduced_groebner_basis(const IdealBasis& basis, const BuchbergerOptions& opts = {},
                                  BuchbergerLog* log = nullptr);

/// Both ideals contain each other's generators. Throws on ring mismatch.
bool ideal_equal(const IdealBasis& a, const IdealBasis& b);

/// Every generator of `a` reduces to zero modulo `groebner_b`, which must
/// already be a Groebner basis.
bool contained_in(const IdealBasis& a, const IdealBasis& groebner_b);

}  // namespace lexgb
