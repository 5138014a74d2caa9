#pragma once

#include <string>
#include <vector>

#include "lexgb/polynomial.hpp"

namespace lexgb {

/// Ordered generator list of an ideal in one ring. Zero generators are
/// dropped on construction.
class IdealBasis {
public:
    explicit IdealBasis(Ring ring, std::vector<Polynomial> gens = {}, std::string label = {});

    const Ring& ring() const { return ring_; }
    const std::vector<Polynomial>& gens() const { return gens_; }
    const std::string& label() const { return label_; }
    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    const Polynomial& operator[](std::size_t i) const { return gens_.at(i); }

    void set_label(std::string label) { label_ = std::move(label); }
    /// Appends g unless it is zero; throws on ring mismatch.
    void push_back(Polynomial g);

    friend bool operator==(const IdealBasis& a, const IdealBasis& b) {
        return same_ring(a.ring_, b.ring_) && a.gens_ == b.gens_;
    }

private:
    Ring ring_;
    std::vector<Polynomial> gens_;
    std::string label_;
};

}  // namespace lexgb
