#include "hookcontent/polyid.hpp"

#include <random>

namespace hcf::poly {

namespace {

void check_ring_size(int n)
{
    if (n < 0 || n > kMaxRingSize)
        throw SizeBoundExceeded("polynomial ring size " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxRingSize) + "]");
}

void check_symbolic_size(int n)
{
    if (n < 0 || n > kMaxSymbolicSize)
        throw SizeBoundExceeded("symbolic expansion size " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxSymbolicSize) + "]");
}

void check_x_index(int n, int i)
{
    if (i < 0 || i > n)
        throw UniverseMismatch("x_" + std::to_string(i) + " is not a variable of the ring with n = " +
                               std::to_string(n));
}

std::string slot_name(int slot)
{
    if (slot == kVarX)
        return "X";
    if (slot == kVarT)
        return "t";
    return "x_" + std::to_string(slot - 2);
}

} // namespace

void Monomial::set_exponent(int slot, unsigned e)
{
    if (e > 255)
        throw std::overflow_error("monomial exponent above 255");
    exps_[static_cast<std::size_t>(slot)] = static_cast<std::uint8_t>(e);
}

unsigned Monomial::x_degree() const
{
    unsigned total = 0;
    for (std::size_t s = 2; s < kSlots; ++s)
        total += exps_[s];
    return total;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial out;
    for (std::size_t s = 0; s < kSlots; ++s) {
        const unsigned e = unsigned{exps_[s]} + other.exps_[s];
        if (e > 255)
            throw std::overflow_error("monomial exponent above 255");
        out.exps_[s] = static_cast<std::uint8_t>(e);
    }
    return out;
}

MultiPoly::MultiPoly(int n) : n_(n)
{
    check_ring_size(n);
}

MultiPoly MultiPoly::constant(int n, const BigInt& c)
{
    return monomial(n, Monomial{}, c);
}

MultiPoly MultiPoly::X(int n)
{
    Monomial m;
    m.set_exponent(kVarX, 1);
    return monomial(n, m);
}

MultiPoly MultiPoly::t(int n)
{
    Monomial m;
    m.set_exponent(kVarT, 1);
    return monomial(n, m);
}

MultiPoly MultiPoly::x(int n, int i)
{
    check_x_index(n, i);
    Monomial m;
    m.set_exponent(x_slot(i), 1);
    return monomial(n, m);
}

MultiPoly MultiPoly::monomial(int n, const Monomial& m, const BigInt& c)
{
    for (int s = x_slot(n + 1); s < static_cast<int>(Monomial::kSlots); ++s)
        if (m.exponent(s) != 0)
            throw UniverseMismatch("monomial uses a variable outside the ring");
    MultiPoly p(n);
    p.add_term(m, c);
    return p;
}

void MultiPoly::check_same_ring(const MultiPoly& other) const
{
    if (n_ != other.n_)
        throw UniverseMismatch("polynomials over different variable sets (n = " + std::to_string(n_) + " vs " +
                               std::to_string(other.n_) + ")");
}

void MultiPoly::add_term(const Monomial& m, const BigInt& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted)
        return;
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other)
{
    check_same_ring(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other)
{
    check_same_ring(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    a.check_same_ring(b);
    MultiPoly out(a.n_);
    BigInt product;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            product = ca * cb;
            out.add_term(ma * mb, product);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other)
{
    *this = *this * other;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const BigInt& scalar)
{
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= scalar;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const
{
    MultiPoly result = constant(n_, 1);
    for (unsigned i = 0; i < e; ++i)
        result *= *this;
    return result;
}

MultiPoly MultiPoly::swap_x(int k, int l) const
{
    check_x_index(n_, k);
    check_x_index(n_, l);
    MultiPoly out(n_);
    for (const auto& [m, c] : terms_) {
        Monomial swapped = m;
        swapped.set_exponent(x_slot(k), m.exponent(x_slot(l)));
        swapped.set_exponent(x_slot(l), m.exponent(x_slot(k)));
        out.terms_.emplace(swapped, c);
    }
    return out;
}

MultiPoly MultiPoly::coefficient_of_x(std::span<const unsigned> x_exponents) const
{
    if (x_exponents.size() != static_cast<std::size_t>(n_ + 1))
        throw UniverseMismatch("exponent list length does not match x_0..x_n");
    MultiPoly out(n_);
    for (const auto& [m, c] : terms_) {
        bool match = true;
        for (int i = 0; i <= n_ && match; ++i)
            match = m.exponent(x_slot(i)) == x_exponents[static_cast<std::size_t>(i)];
        if (!match)
            continue;
        Monomial rest;
        rest.set_exponent(kVarX, m.exponent(kVarX));
        rest.set_exponent(kVarT, m.exponent(kVarT));
        out.add_term(rest, c);
    }
    return out;
}

MultiPoly MultiPoly::coefficient_of_X(unsigned degree) const
{
    MultiPoly out(n_);
    for (const auto& [m, c] : terms_) {
        if (m.exponent(kVarX) != degree)
            continue;
        Monomial rest = m;
        rest.set_exponent(kVarX, 0);
        out.add_term(rest, c);
    }
    return out;
}

BigInt MultiPoly::evaluate(std::span<const BigInt> point) const
{
    if (point.size() != static_cast<std::size_t>(n_ + 3))
        throw UniverseMismatch("evaluation point has the wrong number of coordinates");
    BigInt total = 0;
    BigInt term;
    BigInt power;
    for (const auto& [m, c] : terms_) {
        term = c;
        for (int s = 0; s < n_ + 3; ++s) {
            const unsigned e = m.exponent(s);
            if (e == 0)
                continue;
            mpz_pow_ui(power.get_mpz_t(), point[static_cast<std::size_t>(s)].get_mpz_t(), e);
            term *= power;
        }
        total += term;
    }
    return total;
}

std::string term_to_string(const Monomial& m, const BigInt& c)
{
    std::string vars;
    for (int s = 0; s < static_cast<int>(Monomial::kSlots); ++s) {
        const unsigned e = m.exponent(s);
        if (e == 0)
            continue;
        if (!vars.empty())
            vars += '*';
        vars += slot_name(s);
        if (e > 1)
            vars += "^" + std::to_string(e);
    }
    if (vars.empty())
        return c.get_str();
    if (c == 1)
        return vars;
    if (c == -1)
        return "-" + vars;
    return c.get_str() + "*" + vars;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    // Highest monomial first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string term = term_to_string(it->first, it->second);
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out;
}

MultiPoly vandermonde_of(int n, std::span<const MultiPoly> entries)
{
    MultiPoly result = MultiPoly::constant(n, 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            result *= entries[i] - entries[j];
    return result;
}

MultiPoly vandermonde_poly(int n, std::span<const ShiftedVar> args)
{
    std::vector<MultiPoly> entries;
    entries.reserve(args.size());
    const MultiPoly t = MultiPoly::t(n);
    for (const auto& a : args) {
        MultiPoly shift = t;
        shift *= BigInt(a.shift);
        entries.push_back(MultiPoly::x(n, a.var) - shift);
    }
    return vandermonde_of(n, entries);
}

MultiPoly vandermonde_x(int n)
{
    std::vector<ShiftedVar> args;
    for (int i = 0; i <= n; ++i)
        args.push_back({i, 0});
    return vandermonde_poly(n, args);
}

MultiPoly falling_product(int n)
{
    MultiPoly result = MultiPoly::constant(n, 1);
    const MultiPoly X = MultiPoly::X(n);
    for (int r = 0; r <= n; ++r) {
        MultiPoly rt = MultiPoly::t(n);
        rt *= BigInt(r);
        result *= X - rt;
    }
    return result;
}

MultiPoly build_G(int n)
{
    check_symbolic_size(n);
    const MultiPoly X = MultiPoly::X(n);
    MultiPoly g(n);
    const unsigned long subsets = 1UL << (n + 1);
    for (unsigned long mask = 0; mask < subsets; ++mask) {
        MultiPoly weight = MultiPoly::constant(n, 1);
        std::vector<ShiftedVar> args;
        for (int i = 0; i <= n; ++i) {
            const bool chosen = (mask >> i) & 1UL;
            weight *= chosen ? MultiPoly::x(n, i) : X - MultiPoly::x(n, i);
            args.push_back({i, chosen ? 1 : 0});
        }
        g += weight * vandermonde_poly(n, args);
    }
    return g;
}

IdentityReport compare(int n, const MultiPoly& lhs, const MultiPoly& rhs)
{
    IdentityReport report;
    report.n = n;
    report.lhs_terms = lhs.term_count();
    report.rhs_terms = rhs.term_count();
    const MultiPoly diff = lhs - rhs;
    report.equal = diff.is_zero();
    if (!report.equal) {
        const auto& [m, c] = *diff.terms().rbegin();
        report.first_discrepancy = term_to_string(m, c);
    }
    return report;
}

IdentityReport verify_alg(int n)
{
    check_symbolic_size(n);
    return compare(n, build_G(n), falling_product(n) * vandermonde_x(n));
}

bool antisymmetric_under(const MultiPoly& g, int k, int l)
{
    return g.swap_x(k, l) == -g;
}

bool antisymmetry_check(int n, int k, int l)
{
    if (!(0 <= k && k < l && l <= n))
        throw std::invalid_argument("antisymmetry_check needs 0 <= k < l <= n");
    return antisymmetric_under(build_G(n), k, l);
}

bool homogeneous_in_x(const MultiPoly& g, unsigned degree)
{
    for (const auto& [m, c] : g.terms())
        if (m.x_degree() != degree)
            return false;
    return true;
}

bool homogeneity_check(int n)
{
    return homogeneous_in_x(build_G(n), static_cast<unsigned>(n * (n + 1) / 2));
}

MultiPoly staircase_coefficient(const MultiPoly& g)
{
    const int n = g.ring_size();
    std::vector<unsigned> staircase;
    for (int i = 0; i <= n; ++i)
        staircase.push_back(static_cast<unsigned>(n - i));
    return g.coefficient_of_x(staircase);
}

MultiPoly extract_H(int n)
{
    return staircase_coefficient(build_G(n));
}

namespace {

struct HlfSides {
    MultiPoly lhs;
    MultiPoly rhs;
};

HlfSides hlf_sides(int n)
{
    MultiPoly lhs(n);
    for (int i = 0; i <= n; ++i) {
        std::vector<ShiftedVar> args;
        for (int k = 0; k <= n; ++k)
            args.push_back({k, k == i ? 1 : 0});
        lhs += MultiPoly::x(n, i) * vandermonde_poly(n, args);
    }
    MultiPoly weight(n);
    for (int i = 0; i <= n; ++i) {
        MultiPoly it = MultiPoly::t(n);
        it *= BigInt(i);
        weight += MultiPoly::x(n, i) - it;
    }
    return {std::move(lhs), weight * vandermonde_x(n)};
}

} // namespace

IdentityReport hlf_identity_check(int n)
{
    check_symbolic_size(n);
    auto sides = hlf_sides(n);
    return compare(n, sides.lhs, sides.rhs);
}

SliceReport hlf_slice_check(int n)
{
    check_symbolic_size(n);
    const auto degree = static_cast<unsigned>(n);
    const MultiPoly g_slice = build_G(n).coefficient_of_X(degree);
    const MultiPoly v = vandermonde_x(n);
    const MultiPoly rhs_slice = (falling_product(n) * v).coefficient_of_X(degree);

    MultiPoly x_sum(n);
    for (int i = 0; i <= n; ++i)
        x_sum += MultiPoly::x(n, i);
    const MultiPoly correction = x_sum * v;

    const auto sides = hlf_sides(n);
    SliceReport report;
    report.n = n;
    report.slices_equal = g_slice == rhs_slice;
    report.lhs_matches = g_slice + correction == sides.lhs;
    report.rhs_matches = rhs_slice + correction == sides.rhs;
    return report;
}

std::pair<BigInt, BigInt> evaluate_alg_sides(std::span<const std::int64_t> point)
{
    if (point.size() < 3)
        throw UniverseMismatch("evaluation point needs X, t and at least x_0");
    const auto n = static_cast<int>(point.size()) - 3;
    const BigInt X = static_cast<long>(point[0]);
    const BigInt t = static_cast<long>(point[1]);
    std::vector<BigInt> x;
    for (int i = 0; i <= n; ++i)
        x.emplace_back(static_cast<long>(point[static_cast<std::size_t>(2 + i)]));

    BigInt lhs = 0;
    const unsigned long subsets = 1UL << (n + 1);
    for (unsigned long mask = 0; mask < subsets; ++mask) {
        BigInt term = 1;
        std::vector<BigInt> shifted;
        for (int i = 0; i <= n; ++i) {
            const bool chosen = (mask >> i) & 1UL;
            term *= chosen ? x[static_cast<std::size_t>(i)] : BigInt(X - x[static_cast<std::size_t>(i)]);
            shifted.push_back(chosen ? BigInt(x[static_cast<std::size_t>(i)] - t) : x[static_cast<std::size_t>(i)]);
        }
        for (std::size_t i = 0; i < shifted.size(); ++i)
            for (std::size_t j = i + 1; j < shifted.size(); ++j)
                term *= shifted[i] - shifted[j];
        lhs += term;
    }

    BigInt rhs = 1;
    for (int r = 0; r <= n; ++r)
        rhs *= X - r * t;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = i + 1; j < x.size(); ++j)
            rhs *= x[i] - x[j];
    return {lhs, rhs};
}

SpotCheckReport spot_check_alg(int n, int points, std::uint64_t seed)
{
    if (n < 0 || n > 20)
        throw SizeBoundExceeded("spot check size outside [0, 20]");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> coord(-9, 9);

    SpotCheckReport report;
    report.n = n;
    report.points = points;
    report.seed = seed;
    std::vector<std::int64_t> point(static_cast<std::size_t>(n + 3));
    for (int k = 0; k < points; ++k) {
        for (auto& v : point)
            v = coord(rng);
        auto [lhs, rhs] = evaluate_alg_sides(point);
        if (lhs != rhs)
            ++report.mismatches;
    }
    return report;
}

} // namespace hcf::poly
