#include "lexgb/sequences.hpp"

#include <functional>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>

namespace lexgb {

namespace {

// Append-only memo table. Readers share the lock; a miss extends the table
// under the exclusive lock.
template <typename T>
class MemoTable {
public:
    using Fill = std::function<T(std::size_t)>;
    explicit MemoTable(Fill fill) : fill_(std::move(fill)) {}

    T get(std::size_t index) {
        {
            std::shared_lock lock(mutex_);
            if (index < values_.size()) return values_[index];
        }
        std::unique_lock lock(mutex_);
        while (values_.size() <= index) values_.push_back(fill_(values_.size()));
        return values_[index];
    }

private:
    Fill fill_;
    std::shared_mutex mutex_;
    std::vector<T> values_;
};

void require_nonnegative(std::int64_t v, const char* what) {
    if (v < 0) throw std::domain_error(std::string(what) + " index must be nonnegative");
}

auto& catalan_table() {
    static MemoTable<BigInt> table([](std::size_t j) {
        BigInt c = binomial(2 * static_cast<std::int64_t>(j), static_cast<std::int64_t>(j));
        c /= static_cast<unsigned long>(j + 1);
        return c;
    });
    return table;
}

auto& lambda_table() {
    static MemoTable<Rational> table([](std::size_t j) {
        BigInt den = 1;
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), j);
        return sign_power(static_cast<long>(j) + 1) * Rational(catalan(static_cast<std::int64_t>(j)), den);
    });
    return table;
}

Rational power_of_two(std::int64_t e) {
    BigInt p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e < 0 ? -e : e));
    return e < 0 ? Rational(BigInt(1), p) : Rational(p);
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
    require_nonnegative(n, "binomial");
    if (k < 0 || k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

Rational general_binomial(const Rational& alpha, std::int64_t j) {
    require_nonnegative(j, "general_binomial");
    Rational out(1);
    for (std::int64_t i = 0; i < j; ++i) out *= (alpha - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i + 1));
    return out;
}

BigInt catalan(std::int64_t j) {
    require_nonnegative(j, "catalan");
    return catalan_table().get(static_cast<std::size_t>(j));
}

Rational lambda_j(std::int64_t j) {
    require_nonnegative(j, "lambda");
    return lambda_table().get(static_cast<std::size_t>(j));
}

Rational mu_r(std::int64_t r) {
    if (r < 1) throw std::domain_error("mu_r requires r >= 1");
    return Rational(static_cast<long>(2 * r + 1)) * Rational(catalan(r)) * power_of_two(-r);
}

std::vector<BigInt> catalan_by_recursion(std::size_t count) {
    std::vector<BigInt> c;
    c.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
        if (r == 0) {
            c.emplace_back(1);
            continue;
        }
        BigInt sum = 0;
        for (std::size_t j = 0; j < r; ++j) sum += c[j] * c[r - 1 - j];
        c.push_back(sum);
    }
    return c;
}

std::vector<Rational> lambda_by_recursion(std::size_t count) {
    std::vector<Rational> lam;
    lam.reserve(count);
    const Rational half(1, 2);
    for (std::size_t j = 0; j < count; ++j) {
        if (j == 0) {
            lam.emplace_back(-1);
            continue;
        }
        Rational sum;
        for (std::size_t k = 0; k < j; ++k) sum += lam[k] * lam[j - k - 1];
        lam.push_back(half * sum);
    }
    return lam;
}

bool catalan_identity(std::int64_t r) {
    require_nonnegative(r, "catalan_identity");
    const Rational lhs = Rational(static_cast<long>(2 * r + 1)) * Rational(catalan(r)) * power_of_two(-2 * r);
    Rational rhs;
    for (std::int64_t j = 0; j <= r; ++j)
        rhs += sign_power(static_cast<long>(j)) * Rational(binomial(r, j)) * Rational(catalan(j)) *
               power_of_two(-2 * j);
    return lhs == rhs;
}

bool lambda_binomial_identity(std::int64_t r) {
    require_nonnegative(r, "lambda_binomial_identity");
    const Rational lhs = Rational(static_cast<long>(2 * r + 1)) * sign_power(static_cast<long>(r) + 1) * lambda_j(r);
    Rational rhs;
    for (std::int64_t j = 0; j <= r; ++j)
        rhs += Rational(binomial(r, j)) * power_of_two(r - j) * (-lambda_j(j));
    return lhs == rhs;
}

bool catalan_lambda_link(std::int64_t j) {
    require_nonnegative(j, "catalan_lambda_link");
    const auto lam = lambda_by_recursion(static_cast<std::size_t>(j) + 1);
    const Rational d = sign_power(static_cast<long>(j) + 1) * power_of_two(j) * lam.back();
    return d == Rational(catalan(j));
}

}  // namespace lexgb
