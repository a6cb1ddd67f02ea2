#pragma once

#include <map>
#include <ostream>
#include <string>

#include "hilbpts/bigint.hpp"
#include "hilbpts/error.hpp"

namespace hilb {

/// Poincaré polynomial Σ b_{2d} q^{2d}; keys are the (even) real degrees.
class PoincarePoly {
  public:
    PoincarePoly() = default;

    void add(int degree, const BigInt& coeff) {
        if (degree < 0 || degree % 2 != 0)
            throw invalid_input("Poincare degrees must be even and non-negative");
        if (coeff < 0)
            throw invalid_input("Betti numbers are non-negative");
        if (coeff == 0)
            return;
        coeffs_[degree] += coeff;
    }

    /// Adds q^degree.
    void add_cell(int degree) { add(degree, 1); }

    BigInt coefficient(int degree) const {
        auto it = coeffs_.find(degree);
        return it == coeffs_.end() ? BigInt(0) : it->second;
    }

    /// Value at q = 1, i.e. the Euler characteristic.
    BigInt at_one() const {
        BigInt total = 0;
        for (const auto& [deg, c] : coeffs_)
            total += c;
        return total;
    }

    int top_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }

    const std::map<int, BigInt>& coefficients() const noexcept { return coeffs_; }

    /// "1 + q^2 + 2q^4"; "0" for the zero polynomial.
    std::string to_string() const {
        if (coeffs_.empty())
            return "0";
        std::string out;
        for (const auto& [deg, c] : coeffs_) {
            if (!out.empty())
                out += " + ";
            std::string mono = deg == 0 ? "" : (deg == 1 ? "q" : "q^" + std::to_string(deg));
            if (mono.empty())
                out += c.str();
            else
                out += (c == 1 ? std::string() : c.str()) + mono;
        }
        return out;
    }

    friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;
    friend std::ostream& operator<<(std::ostream& os, const PoincarePoly& p) {
        return os << p.to_string();
    }

  private:
    std::map<int, BigInt> coeffs_;
};

} // namespace hilb
