#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hookcontent/exact.hpp"
#include "hookcontent/shapes.hpp"

// Brute-force enumerators. These are the ground truth every closed form in the
// library is checked against, so they deliberately share no code with the
// formulas: ballot sequences are walked step by step and tableaux are filled
// cell by cell.

namespace hcf {

struct EnumerationBudget {
    /// Maximum number of search-tree nodes visited before giving up.
    std::uint64_t max_states = 10'000'000;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Number of sequences of `steps` 0/1 vectors of length n.length() whose
/// partial sums are all weakly decreasing and whose total is n.
BigInt count_multivote(int steps, const ColumnCounts& n, EnumerationBudget budget = {});

/// As count_multivote, but every vector holds exactly one 1.
BigInt count_singlevote(int steps, const ColumnCounts& n, EnumerationBudget budget = {});

/// Semistandard fillings of p from {1..letters}: rows weak, columns strict.
BigInt enumerate_ssyt(int letters, const Partition& p, EnumerationBudget budget = {});

/// Standard fillings of p with 1..|p|.
BigInt enumerate_syt(const Partition& p, EnumerationBudget budget = {});

/// Columns strictly increasing; entries of column i lie in {1..letters+i}.
BigInt enumerate_colstrict(int letters, const Partition& p, EnumerationBudget budget = {});

/// Rows weakly increasing; entries of (0-based) row j lie in {j+1..letters}.
BigInt enumerate_rowweak(int letters, const Partition& p, EnumerationBudget budget = {});

/// 1..|p| placed once each, strictly increasing down every column.
BigInt enumerate_colincreasing_labelings(const Partition& p, EnumerationBudget budget = {});

/// A diagram with one positive entry per cell, stored in row-major order.
struct Filling {
    Partition shape;
    std::vector<int> entries;

    int at(Cell c) const;

    friend bool operator==(const Filling&, const Filling&) = default;
    friend auto operator<=>(const Filling&, const Filling&) = default;
};

/// Materialized versions of the counters above, sorted.
std::vector<Filling> collect_ssyt(int letters, const Partition& p, EnumerationBudget budget = {});
std::vector<Filling> collect_colstrict(int letters, const Partition& p, EnumerationBudget budget = {});
std::vector<Filling> collect_rowweak(int letters, const Partition& p, EnumerationBudget budget = {});

struct IntersectionReport {
    std::size_t ssyt = 0;
    std::size_t colstrict = 0;
    std::size_t rowweak = 0;
    std::size_t intersection = 0;
    /// SSYT set equals (column-strict set) ∩ (row-weak set), element by element.
    bool pass = false;
};

IntersectionReport intersection_check(int letters, const Partition& p, EnumerationBudget budget = {});

} // namespace hcf
