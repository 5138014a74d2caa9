#include "lexgb/laurent.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace lexgb {

LaurentSeries::LaurentSeries(Ring ring, int top, int floor) : ring_(std::move(ring)), top_(top), floor_(floor) {
    if (!ring_) throw std::invalid_argument("series without a ring");
    if (floor > top) throw std::invalid_argument("series floor above its top exponent");
}

LaurentSeries LaurentSeries::one(Ring ring, int floor) { return power_of_x(std::move(ring), 0, floor); }

LaurentSeries LaurentSeries::power_of_x(Ring ring, int exponent, int floor, const Rational& c) {
    LaurentSeries s(ring, exponent, std::min(floor, exponent));
    s.set(exponent, Polynomial::constant(ring, c));
    return s;
}

Polynomial LaurentSeries::coefficient(int e) const {
    if (e < floor_)
        throw std::out_of_range("coefficient at x^" + std::to_string(e) + " lies below the truncation floor " +
                                std::to_string(floor_));
    const auto it = coeffs_.find(e);
    return it == coeffs_.end() ? Polynomial(ring_) : it->second;
}

void LaurentSeries::set(int e, Polynomial p) {
    if (e < floor_ || e > top_) throw std::out_of_range("exponent outside the series range");
    require_same_ring(ring_, p.ring());
    if (p.is_zero())
        coeffs_.erase(e);
    else
        coeffs_.insert_or_assign(e, std::move(p));
}

LaurentSeries LaurentSeries::scaled(const Rational& c) const {
    LaurentSeries out(ring_, top_, floor_);
    if (c.is_zero()) return out;
    for (const auto& [e, p] : coeffs_) out.coeffs_.emplace(e, p.scaled(c));
    return out;
}

LaurentSeries& LaurentSeries::operator+=(const LaurentSeries& o) {
    require_same_ring(ring_, o.ring_);
    if (floor_ != o.floor_) throw std::invalid_argument("series floors differ");
    top_ = std::max(top_, o.top_);
    for (const auto& [e, p] : o.coeffs_) {
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, p);
        } else {
            it->second += p;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }
    return *this;
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return same_ring(a.ring_, b.ring_) && a.floor_ == b.floor_ && a.coeffs_ == b.coeffs_;
}

LaurentSeries generic_C(std::size_t T, const Ring& ring, std::optional<int> floor) {
    const int fl = floor.value_or(-static_cast<int>(T));
    LaurentSeries c(ring, 1, std::min(fl, 1));
    c.set(1, Polynomial::constant(ring, Rational(1)));
    for (std::size_t k = 1; k <= T; ++k) {
        const std::string name = "C" + std::to_string(k);
        if (!ring->index_of(name)) throw std::invalid_argument("ring lacks variable " + name);
        const int e = -static_cast<int>(k);
        if (e >= c.floor()) c.set(e, Polynomial::variable(ring, name));
    }
    return c;
}

LaurentSeries series_mul(const LaurentSeries& a, const LaurentSeries& b) {
    require_same_ring(a.ring(), b.ring());
    if (a.floor() != b.floor()) throw std::invalid_argument("series floors differ");
    const int floor = a.floor();
    const int top = std::max(a.top() + b.top(), floor);
    std::map<int, std::vector<Term>> acc;
    for (const auto& [ea, pa] : a.coefficients()) {
        for (const auto& [eb, pb] : b.coefficients()) {
            const int e = ea + eb;
            if (e < floor) continue;
            auto& bucket = acc[e];
            for (const auto& ta : pa.terms())
                for (const auto& tb : pb.terms()) bucket.push_back(Term{ta.coeff * tb.coeff, ta.mono * tb.mono});
        }
    }
    LaurentSeries out(a.ring(), top, floor);
    for (auto& [e, terms] : acc) out.set(e, Polynomial::from_terms(a.ring(), std::move(terms)));
    return out;
}

LaurentSeries series_pow(const LaurentSeries& a, unsigned k) {
    LaurentSeries result = LaurentSeries::one(a.ring(), a.floor());
    if (k == 0) return result;
    LaurentSeries base = a;
    bool have_result = false;
    while (k > 0) {
        if (k & 1u) {
            result = have_result ? series_mul(result, base) : base;
            have_result = true;
        }
        k >>= 1;
        if (k > 0) base = series_mul(base, base);
    }
    return result;
}

LaurentSeries series_inverse(const LaurentSeries& a) {
    if (a.coefficients().empty()) throw std::domain_error("inverse of the zero series");
    const auto& [lead_exp, lead] = *a.coefficients().rbegin();
    if (!lead.is_constant()) throw std::domain_error("series leading coefficient is not a constant");
    if (lead_exp < 0) throw std::domain_error("series inverse needs a leading exponent >= 0");
    const Rational inv_lead = lead.leading_coeff().inverse();
    const int floor = a.floor();
    const int top = -lead_exp;
    LaurentSeries b(a.ring(), top, std::min(floor, top));
    // coefficient of x^{e + lead_exp} in a*b vanishes for e < top:
    // b_e = -inv_lead * sum_{i < lead_exp} a_i b_{e + lead_exp - i}
    for (int e = top; e >= b.floor(); --e) {
        if (e == top) {
            b.set(e, Polynomial::constant(a.ring(), inv_lead));
            continue;
        }
        Polynomial sum(a.ring());
        for (const auto& [i, ai] : a.coefficients()) {
            if (i >= lead_exp) continue;
            const int j = e + lead_exp - i;
            if (j > top) continue;
            const auto& bc = b.coefficients();
            if (const auto it = bc.find(j); it != bc.end()) sum += ai * it->second;
        }
        b.set(e, sum.scaled(-inv_lead));
    }
    return b;
}

}  // namespace lexgb
