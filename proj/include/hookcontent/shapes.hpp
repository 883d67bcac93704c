#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hookcontent/exact.hpp"

namespace hcf {

/// Weakly decreasing sequence of positive row lengths (a Young diagram).
/// The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Parses the canonical comma-separated form, e.g. "3,2,1". An empty or
    /// blank string is the empty partition.
    static Partition parse(std::string_view text);

    std::span<const int> parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    /// Length of row 0, i.e. the number of columns.
    int columns() const { return parts_.empty() ? 0 : parts_.front(); }
    int row_length(int row) const { return parts_.at(static_cast<std::size_t>(row)); }
    int size() const;
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// Target tally (n_0, ..., n_d) of a ballot election. Entries are nonnegative
/// but need not be monotone.
class ColumnCounts {
public:
    ColumnCounts() = default;
    /// Throws std::invalid_argument on a negative entry.
    explicit ColumnCounts(std::vector<int> counts);
    ColumnCounts(std::initializer_list<int> counts) : ColumnCounts(std::vector<int>(counts)) {}

    /// Comma-separated list; non-monotone input is accepted.
    static ColumnCounts parse(std::string_view text);
    /// Column heights of a diagram, i.e. the conjugate partition's parts.
    static ColumnCounts of_columns(const Partition& p);

    std::span<const int> values() const { return counts_; }
    std::size_t length() const { return counts_.size(); }
    int operator[](std::size_t i) const { return counts_[i]; }
    int total() const;
    bool weakly_decreasing() const;

    std::string to_string() const;

    friend bool operator==(const ColumnCounts&, const ColumnCounts&) = default;
    friend auto operator<=>(const ColumnCounts&, const ColumnCounts&) = default;

private:
    std::vector<int> counts_;
};

/// 0-based (row, column) position inside a diagram.
struct Cell {
    int row = 0;
    int col = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Thrown when an operation is handed a cell outside the diagram or a row
/// index past the last row.
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

Partition conjugate(const Partition& p);

/// Drops trailing zeros.
ColumnCounts normalize(const ColumnCounts& c);

/// Partition with the given rows. Requires c to be weakly decreasing; trailing
/// zeros are dropped first.
Partition as_partition(const ColumnCounts& c);

/// m_i = n_i + d - i for counts (n_0, ..., n_d).
std::vector<std::int64_t> m_params(const ColumnCounts& c);

/// Cells in row-major order.
std::vector<Cell> cells(const Partition& p);

int hook_length(const Partition& p, Cell c);
BigInt hook_product(const Partition& p);

/// Content of a cell is col - row; the factor for N letters is N + col - row.
BigInt content_product(std::int64_t letters, const Partition& p);

struct RowHookSets {
    std::set<std::int64_t> hooks;       // H_i
    std::set<std::int64_t> gaps;        // K_i = { m_i - m_j : j > i }
    std::set<std::int64_t> range;       // M_i = { 1, ..., m_i }
    /// True iff H_i and K_i are disjoint and their union is M_i.
    bool disjoint_union() const;
};

/// Hook lengths of row i of lambda alongside the gap and range sets built from
/// the m-parameters of lambda's rows.
RowHookSets row_hook_sets(const Partition& lambda, int row);

struct RowHookIdentity {
    Exact hook_side;    // product of hook lengths in the row
    Exact m_side;       // m_i! / prod_{j>i} (m_i - m_j)
    bool holds() const { return hook_side == m_side; }
};

RowHookIdentity row_hook_identity(const Partition& lambda, int row);

/// Every partition of exactly n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Every partition with at most max_cells cells, including the empty one,
/// ordered by size then reverse lexicographically.
std::vector<Partition> partitions_up_to(int max_cells);

} // namespace hcf
