#include "hookcontent/shapes.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace hcf {

namespace {

std::vector<int> parse_int_list(std::string_view text)
{
    std::vector<int> out;
    auto is_blank = [](std::string_view s) {
        return std::all_of(s.begin(), s.end(), [](char ch) { return ch == ' ' || ch == '\t'; });
    };
    if (is_blank(text))
        return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        while (!field.empty() && field.front() == ' ')
            field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ')
            field.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
            throw std::invalid_argument("malformed integer list: '" + std::string(text) + "'");
        out.push_back(value);
        if (comma == std::string_view::npos)
            break;
        pos = comma + 1;
    }
    return out;
}

std::string join(std::span<const int> values)
{
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

void check_inside(const Partition& p, Cell c)
{
    if (c.row < 0 || c.row >= p.rows() || c.col < 0 || c.col >= p.row_length(c.row))
        throw ContractViolation("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                                ") outside diagram " + p.to_string());
}

} // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::parse(std::string_view text)
{
    return Partition(parse_int_list(text));
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::to_string() const
{
    return join(parts_);
}

ColumnCounts::ColumnCounts(std::vector<int> counts) : counts_(std::move(counts))
{
    for (int v : counts_)
        if (v < 0)
            throw std::invalid_argument("column counts must be nonnegative");
}

ColumnCounts ColumnCounts::parse(std::string_view text)
{
    return ColumnCounts(parse_int_list(text));
}

ColumnCounts ColumnCounts::of_columns(const Partition& p)
{
    const Partition columns = conjugate(p);
    auto parts = columns.parts();
    return ColumnCounts(std::vector<int>(parts.begin(), parts.end()));
}

int ColumnCounts::total() const
{
    return std::accumulate(counts_.begin(), counts_.end(), 0);
}

bool ColumnCounts::weakly_decreasing() const
{
    return std::is_sorted(counts_.begin(), counts_.end(), std::greater<>());
}

std::string ColumnCounts::to_string() const
{
    return join(counts_);
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out(static_cast<std::size_t>(p.columns()), 0);
    for (int len : p.parts())
        for (int c = 0; c < len; ++c)
            ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

ColumnCounts normalize(const ColumnCounts& c)
{
    auto v = c.values();
    std::size_t len = v.size();
    while (len > 0 && v[len - 1] == 0)
        --len;
    return ColumnCounts(std::vector<int>(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(len)));
}

Partition as_partition(const ColumnCounts& c)
{
    if (!c.weakly_decreasing())
        throw std::invalid_argument("counts " + c.to_string() + " are not weakly decreasing");
    const ColumnCounts trimmed = normalize(c);
    auto v = trimmed.values();
    return Partition(std::vector<int>(v.begin(), v.end()));
}

std::vector<std::int64_t> m_params(const ColumnCounts& c)
{
    const auto d = static_cast<std::int64_t>(c.length()) - 1;
    std::vector<std::int64_t> m(c.length());
    for (std::size_t i = 0; i < c.length(); ++i)
        m[i] = c[i] + d - static_cast<std::int64_t>(i);
    return m;
}

std::vector<Cell> cells(const Partition& p)
{
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(p.size()));
    for (int r = 0; r < p.rows(); ++r)
        for (int c = 0; c < p.row_length(r); ++c)
            out.push_back({r, c});
    return out;
}

int hook_length(const Partition& p, Cell c)
{
    check_inside(p, c);
    int arm = p.row_length(c.row) - c.col - 1;
    int leg = 0;
    for (int r = c.row + 1; r < p.rows() && p.row_length(r) > c.col; ++r)
        ++leg;
    return arm + leg + 1;
}

BigInt hook_product(const Partition& p)
{
    BigInt result = 1;
    for (Cell c : cells(p))
        result *= hook_length(p, c);
    return result;
}

BigInt content_product(std::int64_t letters, const Partition& p)
{
    if (letters < 0)
        throw std::invalid_argument("content_product needs a nonnegative letter count");
    BigInt result = 1;
    for (Cell c : cells(p))
        result *= static_cast<long>(letters + c.col - c.row);
    return result;
}

bool RowHookSets::disjoint_union() const
{
    if (hooks.size() + gaps.size() != range.size())
        return false;
    std::set<std::int64_t> joined = hooks;
    joined.insert(gaps.begin(), gaps.end());
    return joined == range;
}

RowHookSets row_hook_sets(const Partition& lambda, int row)
{
    if (row < 0 || row >= lambda.rows())
        throw ContractViolation("row " + std::to_string(row) + " outside diagram " + lambda.to_string());
    auto parts = lambda.parts();
    auto m = m_params(ColumnCounts(std::vector<int>(parts.begin(), parts.end())));
    const auto i = static_cast<std::size_t>(row);

    RowHookSets sets;
    for (int c = 0; c < lambda.row_length(row); ++c)
        sets.hooks.insert(hook_length(lambda, {row, c}));
    for (std::size_t j = i + 1; j < m.size(); ++j)
        sets.gaps.insert(m[i] - m[j]);
    for (std::int64_t k = 1; k <= m[i]; ++k)
        sets.range.insert(k);
    return sets;
}

RowHookIdentity row_hook_identity(const Partition& lambda, int row)
{
    if (row < 0 || row >= lambda.rows())
        throw ContractViolation("row " + std::to_string(row) + " outside diagram " + lambda.to_string());
    auto parts = lambda.parts();
    auto m = m_params(ColumnCounts(std::vector<int>(parts.begin(), parts.end())));
    const auto i = static_cast<std::size_t>(row);

    BigInt hooks = 1;
    for (int c = 0; c < lambda.row_length(row); ++c)
        hooks *= hook_length(lambda, {row, c});
    BigInt gaps = 1;
    for (std::size_t j = i + 1; j < m.size(); ++j)
        gaps *= static_cast<long>(m[i] - m[j]);
    return {Exact(hooks), make_exact(factorial(m[i]), gaps)};
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    if (n < 0)
        return out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> parts;
    // Depth-first: next part at most the previous one.
    auto recurse = [&](auto&& self, int remaining, int cap) -> void {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int k = std::min(remaining, cap); k >= 1; --k) {
            parts.push_back(k);
            self(self, remaining - k, k);
            parts.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

std::vector<Partition> partitions_up_to(int max_cells)
{
    std::vector<Partition> out;
    for (int n = 0; n <= max_cells; ++n) {
        auto level = partitions_of(n);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace hcf
