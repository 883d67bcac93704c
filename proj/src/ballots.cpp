#include "hookcontent/ballots.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <string>

namespace hcf {

namespace {

class StateCounter {
public:
    explicit StateCounter(EnumerationBudget budget) : limit_(budget.max_states) {}

    void visit()
    {
        if (++visited_ > limit_)
            throw BudgetExceeded("enumeration exceeded " + std::to_string(limit_) + " states");
    }

private:
    std::uint64_t limit_;
    std::uint64_t visited_ = 0;
};

bool prefix_valid(const std::vector<int>& sums)
{
    return std::is_sorted(sums.begin(), sums.end(), std::greater<>());
}

// Walks ballot sequences step by step. A branch is abandoned as soon as the
// partial sum stops being weakly decreasing, overshoots the target, or can no
// longer reach it in the steps left.
class BallotWalker {
public:
    BallotWalker(int steps, const ColumnCounts& n, bool single_vote, EnumerationBudget budget)
        : steps_(steps), target_(n.values().begin(), n.values().end()), single_(single_vote),
          sums_(target_.size(), 0), counter_(budget)
    {
    }

    std::uint64_t run()
    {
        if (steps_ < 0)
            return 0;
        return descend(0);
    }

private:
    bool reachable(int step) const
    {
        const int left = steps_ - step;
        int total_left = 0;
        for (std::size_t i = 0; i < sums_.size(); ++i) {
            const int need = target_[i] - sums_[i];
            if (need < 0 || need > left)
                return false;
            total_left += need;
        }
        return !single_ || total_left == left;
    }

    std::uint64_t descend(int step)
    {
        counter_.visit();
        if (!prefix_valid(sums_) || !reachable(step))
            return 0;
        if (step == steps_)
            return 1;
        const std::size_t width = sums_.size();
        std::uint64_t total = 0;
        if (single_) {
            for (std::size_t i = 0; i < width; ++i) {
                ++sums_[i];
                total += descend(step + 1);
                --sums_[i];
            }
            return total;
        }
        const std::uint64_t choices = std::uint64_t{1} << width;
        for (std::uint64_t mask = 0; mask < choices; ++mask) {
            for (std::size_t i = 0; i < width; ++i)
                sums_[i] += static_cast<int>((mask >> i) & 1U);
            total += descend(step + 1);
            for (std::size_t i = 0; i < width; ++i)
                sums_[i] -= static_cast<int>((mask >> i) & 1U);
        }
        return total;
    }

    int steps_;
    std::vector<int> target_;
    bool single_;
    std::vector<int> sums_;
    StateCounter counter_;
};

enum class RowOrder { none, weak, strict };

struct FillingRules {
    std::function<int(Cell)> min_entry;
    std::function<int(Cell)> max_entry;
    RowOrder rows = RowOrder::none;
    bool columns_strict = false;
    bool distinct = false;
};

// Fills cells in row-major order, so the left and upper neighbours of a cell
// are always placed before it.
class FillingWalker {
public:
    FillingWalker(const Partition& p, FillingRules rules, EnumerationBudget budget)
        : rules_(std::move(rules)), cells_(cells(p)), counter_(budget)
    {
        offsets_.resize(static_cast<std::size_t>(p.rows()));
        std::size_t offset = 0;
        for (int r = 0; r < p.rows(); ++r) {
            offsets_[static_cast<std::size_t>(r)] = offset;
            offset += static_cast<std::size_t>(p.row_length(r));
        }
        entries_.assign(cells_.size(), 0);
    }

    void run(const std::function<void(const std::vector<int>&)>& emit)
    {
        emit_ = &emit;
        place(0);
    }

private:
    int entry(Cell c) const
    {
        return entries_[offsets_[static_cast<std::size_t>(c.row)] + static_cast<std::size_t>(c.col)];
    }

    void place(std::size_t k)
    {
        counter_.visit();
        if (k == cells_.size()) {
            (*emit_)(entries_);
            return;
        }
        const Cell c = cells_[k];
        int lo = rules_.min_entry(c);
        const int hi = rules_.max_entry(c);
        if (c.col > 0 && rules_.rows != RowOrder::none)
            lo = std::max(lo, entry({c.row, c.col - 1}) + (rules_.rows == RowOrder::strict ? 1 : 0));
        if (c.row > 0 && rules_.columns_strict)
            lo = std::max(lo, entry({c.row - 1, c.col}) + 1);
        for (int v = lo; v <= hi; ++v) {
            if (rules_.distinct && std::find(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(k), v) !=
                                       entries_.begin() + static_cast<std::ptrdiff_t>(k))
                continue;
            entries_[k] = v;
            place(k + 1);
        }
        entries_[k] = 0;
    }

    FillingRules rules_;
    std::vector<Cell> cells_;
    std::vector<std::size_t> offsets_;
    std::vector<int> entries_;
    StateCounter counter_;
    const std::function<void(const std::vector<int>&)>* emit_ = nullptr;
};

FillingRules ssyt_rules(int letters)
{
    return {[](Cell) { return 1; }, [letters](Cell) { return letters; }, RowOrder::weak, true, false};
}

FillingRules syt_rules(const Partition& p)
{
    const int size = p.size();
    return {[](Cell) { return 1; }, [size](Cell) { return size; }, RowOrder::strict, true, true};
}

FillingRules colstrict_rules(int letters)
{
    return {[](Cell) { return 1; }, [letters](Cell c) { return letters + c.col; }, RowOrder::none, true, false};
}

FillingRules rowweak_rules(int letters)
{
    return {[](Cell c) { return c.row + 1; }, [letters](Cell) { return letters; }, RowOrder::weak, false, false};
}

FillingRules labeling_rules(const Partition& p)
{
    const int size = p.size();
    return {[](Cell) { return 1; }, [size](Cell) { return size; }, RowOrder::none, true, true};
}

BigInt count_fillings(const Partition& p, FillingRules rules, EnumerationBudget budget)
{
    std::uint64_t count = 0;
    FillingWalker walker(p, std::move(rules), budget);
    walker.run([&](const std::vector<int>&) { ++count; });
    return BigInt(static_cast<unsigned long>(count));
}

bool key_less(const std::string& a, const std::string& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
        return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
    });
}

// Row-major entries packed one byte per cell, sorted by entry value.
std::vector<std::string> collect_keys(const Partition& p, FillingRules rules, EnumerationBudget budget)
{
    std::vector<std::string> out;
    FillingWalker walker(p, std::move(rules), budget);
    walker.run([&](const std::vector<int>& entries) {
        std::string key(entries.size(), '\0');
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i] > 255)
                throw std::length_error("filling entry above 255");
            key[i] = static_cast<char>(static_cast<unsigned char>(entries[i]));
        }
        out.push_back(std::move(key));
    });
    std::sort(out.begin(), out.end(), key_less);
    return out;
}

std::vector<Filling> collect_fillings(const Partition& p, FillingRules rules, EnumerationBudget budget)
{
    std::vector<Filling> out;
    for (const auto& key : collect_keys(p, std::move(rules), budget)) {
        Filling f{p, {}};
        for (char ch : key)
            f.entries.push_back(static_cast<unsigned char>(ch));
        out.push_back(std::move(f));
    }
    return out;
}

} // namespace

BigInt count_multivote(int steps, const ColumnCounts& n, EnumerationBudget budget)
{
    BallotWalker walker(steps, n, false, budget);
    return BigInt(static_cast<unsigned long>(walker.run()));
}

BigInt count_singlevote(int steps, const ColumnCounts& n, EnumerationBudget budget)
{
    BallotWalker walker(steps, n, true, budget);
    return BigInt(static_cast<unsigned long>(walker.run()));
}

BigInt enumerate_ssyt(int letters, const Partition& p, EnumerationBudget budget)
{
    return count_fillings(p, ssyt_rules(letters), budget);
}

BigInt enumerate_syt(const Partition& p, EnumerationBudget budget)
{
    return count_fillings(p, syt_rules(p), budget);
}

BigInt enumerate_colstrict(int letters, const Partition& p, EnumerationBudget budget)
{
    return count_fillings(p, colstrict_rules(letters), budget);
}

BigInt enumerate_rowweak(int letters, const Partition& p, EnumerationBudget budget)
{
    return count_fillings(p, rowweak_rules(letters), budget);
}

BigInt enumerate_colincreasing_labelings(const Partition& p, EnumerationBudget budget)
{
    return count_fillings(p, labeling_rules(p), budget);
}

int Filling::at(Cell c) const
{
    std::size_t offset = 0;
    for (int r = 0; r < c.row; ++r)
        offset += static_cast<std::size_t>(shape.row_length(r));
    if (c.row >= shape.rows() || c.col >= shape.row_length(c.row))
        throw ContractViolation("cell outside filling");
    return entries.at(offset + static_cast<std::size_t>(c.col));
}

std::vector<Filling> collect_ssyt(int letters, const Partition& p, EnumerationBudget budget)
{
    return collect_fillings(p, ssyt_rules(letters), budget);
}

std::vector<Filling> collect_colstrict(int letters, const Partition& p, EnumerationBudget budget)
{
    return collect_fillings(p, colstrict_rules(letters), budget);
}

std::vector<Filling> collect_rowweak(int letters, const Partition& p, EnumerationBudget budget)
{
    return collect_fillings(p, rowweak_rules(letters), budget);
}

IntersectionReport intersection_check(int letters, const Partition& p, EnumerationBudget budget)
{
    const auto ssyt = collect_keys(p, ssyt_rules(letters), budget);
    const auto colstrict = collect_keys(p, colstrict_rules(letters), budget);
    const auto rowweak = collect_keys(p, rowweak_rules(letters), budget);

    std::vector<std::string> both;
    std::set_intersection(colstrict.begin(), colstrict.end(), rowweak.begin(), rowweak.end(),
                          std::back_inserter(both), key_less);

    IntersectionReport report;
    report.ssyt = ssyt.size();
    report.colstrict = colstrict.size();
    report.rowweak = rowweak.size();
    report.intersection = both.size();
    report.pass = both == ssyt;
    return report;
}

} // namespace hcf
