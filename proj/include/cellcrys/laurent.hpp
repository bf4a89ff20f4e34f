#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cellcrys/basics.hpp"

namespace cellcrys {

using Expo = std::vector<int>;  // one exponent slot per variable

// Multivariate Laurent polynomial with exact integer coefficients.
// Monomials are kept sorted by exponent vector; no zero coefficients.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, const Int& c);
    static LaurentPoly monomial(int nvars, const Expo& e, const Int& c);
    static LaurentPoly var(int nvars, int idx, int power = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Expo, Int>& terms() const { return terms_; }

    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;

    void add_term(const Expo& e, const Int& c);

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    bool operator==(const LaurentPoly& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }

    // Exact division; throws (with a remainder witness in the message) if b
    // does not divide *this in the Laurent ring. try_div gives up after
    // max_steps quotient terms (exact quotients emit one term per step, so a
    // modest cap only cuts off hopeless non-divisions early).
    LaurentPoly div_exact(const LaurentPoly& b) const;
    std::optional<LaurentPoly> try_div(const LaurentPoly& b,
                                       std::size_t max_steps = 1u << 20) const;

    bool is_subtraction_free() const;

    Rat eval_positive(const std::vector<Rat>& point) const;

    // Componentwise-min exponent vector and integer content over all terms.
    Expo monomial_content() const;
    Int integer_content() const;

    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    int nvars_ = 0;
    std::map<Expo, Int> terms_;
};

// num/den pair of Laurent polynomials, reduced by monomial content only.
class RationalPair {
  public:
    RationalPair() = default;
    RationalPair(LaurentPoly num, LaurentPoly den);
    static RationalPair of(const LaurentPoly& p);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    int nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalPair operator+(const RationalPair& a, const RationalPair& b);
    friend RationalPair operator-(const RationalPair& a, const RationalPair& b);
    friend RationalPair operator*(const RationalPair& a, const RationalPair& b);
    friend RationalPair operator/(const RationalPair& a, const RationalPair& b);
    RationalPair operator-() const;
    bool operator==(const RationalPair& o) const;  // cross-multiplied equality

    bool is_polynomial() const { return den_.is_one(); }
    bool is_subtraction_free() const {
        return num_.is_subtraction_free() && den_.is_subtraction_free();
    }

    Rat eval_positive(const std::vector<Rat>& point) const;
    std::string str(const std::vector<std::string>& names = {}) const;

  private:
    void reduce();
    LaurentPoly num_, den_;
};

// Parse/print in the project text format, e.g. "3*c[2,1]^2*c[1,3]^-1 + c[1,1]".
// `names` maps variable index -> display name; parsing accepts any name in it.
std::string poly_to_string(const LaurentPoly& p, const std::vector<std::string>& names);
LaurentPoly poly_parse(const std::string& text, const std::vector<std::string>& names);

}  // namespace cellcrys
