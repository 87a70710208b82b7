#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

namespace chilab {

/// Closed integer interval; the extreme int64 values stand for -inf / +inf.
struct IntegerInterval {
    std::int64_t lo;
    std::int64_t hi;
};

/// Finite union of integer intervals, kept sorted and merged.
class IntegerSet {
  public:
    static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
    static constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

    IntegerSet() = default;
    explicit IntegerSet(std::vector<IntegerInterval> intervals);

    static IntegerSet interval(std::int64_t lo, std::int64_t hi);
    static IntegerSet at_least(std::int64_t lo) { return interval(lo, kPosInf); }
    static IntegerSet at_most(std::int64_t hi) { return interval(kNegInf, hi); }

    /// "empty", "a..b", "a..", "..b", "a", comma separated.
    static IntegerSet parse(std::string_view text);

    IntegerSet unite(const IntegerSet& other) const;
    IntegerSet intersect(const IntegerSet& other) const;
    IntegerSet subtract(const IntegerSet& other) const;
    IntegerSet complement() const;
    /// { k + delta : k in this }.
    IntegerSet shifted(std::int64_t delta) const;

    bool empty() const noexcept { return intervals_.empty(); }
    bool contains(std::int64_t k) const noexcept;
    bool bounded_above() const noexcept { return empty() || intervals_.back().hi != kPosInf; }
    const std::vector<IntegerInterval>& intervals() const noexcept { return intervals_; }

    std::string str() const;

    friend bool operator==(const IntegerSet&, const IntegerSet&) = default;

  private:
    std::vector<IntegerInterval> intervals_;
};

inline bool operator==(const IntegerInterval& l, const IntegerInterval& r) {
    return l.lo == r.lo && l.hi == r.hi;
}

}  // namespace chilab
