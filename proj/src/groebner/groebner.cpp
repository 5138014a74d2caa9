#include "lexgb/groebner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace lexgb {

std::string_view strategy_name(PairStrategy s) { return s == PairStrategy::fifo ? "fifo" : "normal"; }

PairStrategy parse_strategy(std::string_view name) {
    if (name == "normal") return PairStrategy::normal;
    if (name == "fifo") return PairStrategy::fifo;
    throw std::invalid_argument("unknown pair strategy '" + std::string(name) + "'");
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    require_same_ring(f.ring(), g.ring());
    if (f.is_zero() || g.is_zero()) throw std::domain_error("S-polynomial of a zero polynomial");
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial s = f.mul_term(f.leading_coeff().inverse(), l.quotient(f.leading_monomial()));
    s.sub_mul_term(g.leading_coeff().inverse(), l.quotient(g.leading_monomial()), g);
    return s;
}

namespace {

struct CriticalPair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint64_t degree;
    std::size_t seq;
};

class PairQueue {
public:
    explicit PairQueue(PairStrategy strategy) : strategy_(strategy) {}

    void add(std::size_t i, std::size_t j, const std::vector<Polynomial>& basis) {
        Monomial l = lcm(basis[i].leading_monomial(), basis[j].leading_monomial());
        const std::uint64_t d = l.total_degree();
        pairs_.push_back(CriticalPair{i, j, std::move(l), d, next_seq_++});
    }

    bool empty() const { return pairs_.empty(); }

    CriticalPair pop() {
        auto best = pairs_.begin();
        if (strategy_ == PairStrategy::normal) {
            for (auto it = std::next(pairs_.begin()); it != pairs_.end(); ++it)
                if (before(*it, *best)) best = it;
        } else {
            for (auto it = std::next(pairs_.begin()); it != pairs_.end(); ++it)
                if (it->seq < best->seq) best = it;
        }
        CriticalPair out = std::move(*best);
        *best = std::move(pairs_.back());
        pairs_.pop_back();
        return out;
    }

private:
    static bool before(const CriticalPair& a, const CriticalPair& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        const auto c = lex_compare(a.lcm, b.lcm);
        if (c != 0) return c < 0;
        return a.seq < b.seq;
    }

    PairStrategy strategy_;
    std::vector<CriticalPair> pairs_;
    std::size_t next_seq_ = 0;
};

}  // namespace

IdealBasis buchberger(const IdealBasis& basis, const BuchbergerOptions& opts, BuchbergerLog* log) {
    if (basis.empty()) throw std::invalid_argument("buchberger needs a nonempty basis");
    BuchbergerLog local;
    BuchbergerLog& stats = log ? *log : local;
    stats = BuchbergerLog{};

    std::vector<Polynomial> g = basis.gens();
    PairQueue queue(opts.pair_strategy);
    for (std::size_t j = 1; j < g.size(); ++j)
        for (std::size_t i = 0; i < j; ++i) queue.add(i, j, g);

    while (!queue.empty()) {
        const CriticalPair p = queue.pop();
        ++stats.pairs_considered;
        if (opts.use_coprime_criterion && g[p.i].leading_monomial().coprime_with(g[p.j].leading_monomial())) {
            ++stats.pairs_skipped_coprime;
            continue;
        }
        ++stats.reductions;
        Polynomial h = reduce(s_polynomial(g[p.i], g[p.j]), g, &stats.reduction_steps, opts.max_reduction_steps);
        if (h.is_zero()) {
            ++stats.zero_reductions;
            continue;
        }
        g.push_back(h.monic());
        const std::size_t n = g.size() - 1;
        for (std::size_t i = 0; i < n; ++i) queue.add(i, n, g);
    }
    stats.basis_size = g.size();
    return IdealBasis(basis.ring(), std::move(g), basis.label());
}

GroebnerCheck is_groebner(const IdealBasis& basis) {
    GroebnerCheck out;
    const auto& g = basis.gens();
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            ++out.pairs_checked;
            Polynomial rem = reduce(s_polynomial(g[i], g[j]), g);
            if (!rem.is_zero()) {
                out.witness = GroebnerWitness{i, j, std::move(rem)};
                return out;
            }
        }
    }
    out.ok = true;
    return out;
}

IdealBasis interreduce(const IdealBasis& basis) {
    if (const auto check = is_groebner(basis); !check)
        throw std::invalid_argument("interreduce: input is not a Groebner basis (pair " +
                                    std::to_string(check.witness->i) + "," + std::to_string(check.witness->j) + ")");

    std::vector<Polynomial> gens = basis.gens();
    std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
        return lex_compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    // minimal basis: ascending order means any divisor of lm(g) comes earlier
    std::vector<Polynomial> minimal;
    for (auto& g : gens) {
        const bool redundant = std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) {
            return h.leading_monomial().divides(g.leading_monomial());
        });
        if (!redundant) minimal.push_back(std::move(g));
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(minimal[l]);
        reduced.push_back(reduce(minimal[k], others).monic());
    }
    std::sort(reduced.begin(), reduced.end(), [](const Polynomial& a, const Polynomial& b) {
        return lex_compare(a.leading_monomial(), b.leading_monomial()) > 0;
    });
    return IdealBasis(basis.ring(), std::move(reduced), basis.label());
}

IdealBasis reduced_groebner_basis(const IdealBasis& basis, const BuchbergerOptions& opts, BuchbergerLog* log) {
    return interreduce(buchberger(basis, opts, log));
}

bool contained_in(const IdealBasis& a, const IdealBasis& groebner_b) {
    require_same_ring(a.ring(), groebner_b.ring());
    return std::all_of(a.gens().begin(), a.gens().end(),
                       [&](const Polynomial& f) { return reduce(f, groebner_b.gens()).is_zero(); });
}

bool ideal_equal(const IdealBasis& a, const IdealBasis& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    return contained_in(a, buchberger(b)) && contained_in(b, buchberger(a));
}

}  // namespace lexgb
