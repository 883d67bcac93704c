#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hookcontent/exact.hpp"

namespace hcf::poly {

/// Largest index n for which a ring over (X, t, x_0, ..., x_n) can be built.
inline constexpr int kMaxRingSize = 6;
/// Largest n for which the symbolic identity checks expand G.
inline constexpr int kMaxSymbolicSize = 5;

inline constexpr int kVarX = 0;
inline constexpr int kVarT = 1;
/// Slot of x_i in an exponent vector.
constexpr int x_slot(int i) { return 2 + i; }

class UniverseMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SizeBoundExceeded : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Exponent vector over the fixed variable order (X, t, x_0, ..., x_6).
/// Unused trailing slots stay zero.
class Monomial {
public:
    static constexpr std::size_t kSlots = 3 + kMaxRingSize;

    Monomial() = default;

    unsigned exponent(int slot) const { return exps_[static_cast<std::size_t>(slot)]; }
    void set_exponent(int slot, unsigned e);
    /// Sum of the exponents of x_0..x_n.
    unsigned x_degree() const;

    Monomial operator*(const Monomial& other) const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::array<std::uint8_t, kSlots> exps_{};
};

/// Sparse polynomial with BigInt coefficients in Z[X, t, x_0, ..., x_n].
/// No zero coefficient is ever stored, so two polynomials are equal iff their
/// term maps are equal.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigInt>;

    /// Zero polynomial over (X, t, x_0..x_n).
    explicit MultiPoly(int n);

    static MultiPoly constant(int n, const BigInt& c);
    static MultiPoly X(int n);
    static MultiPoly t(int n);
    static MultiPoly x(int n, int i);
    static MultiPoly monomial(int n, const Monomial& m, const BigInt& c = 1);

    /// The n in x_0..x_n.
    int ring_size() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    MultiPoly& operator*=(const MultiPoly& other);
    MultiPoly& operator*=(const BigInt& scalar);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(unsigned e) const;

    /// Exchanges x_k and x_l.
    MultiPoly swap_x(int k, int l) const;

    /// Coefficient of x_0^{e_0} ... x_n^{e_n}, as a polynomial in X and t.
    MultiPoly coefficient_of_x(std::span<const unsigned> x_exponents) const;

    /// Coefficient of X^degree, as a polynomial in the remaining variables.
    MultiPoly coefficient_of_X(unsigned degree) const;

    /// Value at point = (X, t, x_0, ..., x_n).
    BigInt evaluate(std::span<const BigInt> point) const;

    /// Human-readable form, e.g. "X^2 - X*t".
    std::string to_string() const;

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

private:
    void check_same_ring(const MultiPoly& other) const;
    void add_term(const Monomial& m, const BigInt& c);

    int n_;
    TermMap terms_;
};

std::string term_to_string(const Monomial& m, const BigInt& c);

/// x_var - shift * t.
struct ShiftedVar {
    int var = 0;
    int shift = 0;
};

/// prod_{i<j} (a_i - a_j) for arbitrary polynomial entries.
MultiPoly vandermonde_of(int n, std::span<const MultiPoly> entries);

/// prod_{i<j} ((x_{v_i} - s_i t) - (x_{v_j} - s_j t)).
MultiPoly vandermonde_poly(int n, std::span<const ShiftedVar> args);

/// V(x_0, ..., x_n).
MultiPoly vandermonde_x(int n);

/// prod_{r=0}^{n} (X - r t).
MultiPoly falling_product(int n);

/// sum over J in {0,1}^{n+1} of
///   [prod_i (X - x_i)^{1-j_i} x_i^{j_i}] * V(x_0 - j_0 t, ..., x_n - j_n t),
/// fully expanded. Throws SizeBoundExceeded for n > kMaxSymbolicSize.
MultiPoly build_G(int n);

struct IdentityReport {
    int n = 0;
    std::size_t lhs_terms = 0;
    std::size_t rhs_terms = 0;
    bool equal = false;
    /// Leading term of lhs - rhs when the sides differ.
    std::optional<std::string> first_discrepancy;
};

IdentityReport compare(int n, const MultiPoly& lhs, const MultiPoly& rhs);

/// build_G(n) against prod_r (X - r t) * V(x_0..x_n).
IdentityReport verify_alg(int n);

/// swap(x_k, x_l) applied to g gives -g.
bool antisymmetric_under(const MultiPoly& g, int k, int l);
bool antisymmetry_check(int n, int k, int l);

/// Every term of g has degree `degree` in x_0..x_n.
bool homogeneous_in_x(const MultiPoly& g, unsigned degree);
/// build_G(n) is homogeneous of degree n(n+1)/2 in x_0..x_n.
bool homogeneity_check(int n);

/// Coefficient of the staircase monomial x_0^n x_1^{n-1} ... x_n^0 in g.
MultiPoly staircase_coefficient(const MultiPoly& g);
MultiPoly extract_H(int n);

/// sum_i x_i V(x_0, ..., x_i - t, ..., x_n) against [sum_i (x_i - i t)] V(x_0..x_n).
IdentityReport hlf_identity_check(int n);

struct SliceReport {
    int n = 0;
    /// X^n coefficients of the two sides of the G identity agree.
    bool slices_equal = false;
    /// Adding (sum x_i) V to each slice reproduces the two sides of the
    /// single-step identity checked by hlf_identity_check.
    bool lhs_matches = false;
    bool rhs_matches = false;
    bool pass() const { return slices_equal && lhs_matches && rhs_matches; }
};

SliceReport hlf_slice_check(int n);

/// Direct integer evaluation of both sides of the G identity at one point
/// (X, t, x_0, ..., x_n), without building any polynomial.
std::pair<BigInt, BigInt> evaluate_alg_sides(std::span<const std::int64_t> point);

struct SpotCheckReport {
    int n = 0;
    int points = 0;
    int mismatches = 0;
    std::uint64_t seed = 0;
    bool pass() const { return mismatches == 0; }
};

/// Evaluates both sides at `points` pseudo-random integer points drawn from
/// [-9, 9]^{n+3}. Deterministic for a given seed.
SpotCheckReport spot_check_alg(int n, int points, std::uint64_t seed);

} // namespace hcf::poly
