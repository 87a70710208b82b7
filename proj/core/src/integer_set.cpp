#include "chilab/integer_set.hpp"

#include <algorithm>
#include <charconv>

#include "chilab/errors.hpp"

namespace chilab {

namespace {

std::int64_t saturating_add(std::int64_t v, std::int64_t delta) {
    if (v == IntegerSet::kNegInf || v == IntegerSet::kPosInf) return v;
    std::int64_t out = 0;
    if (__builtin_add_overflow(v, delta, &out)) return delta > 0 ? IntegerSet::kPosInf : IntegerSet::kNegInf;
    return out;
}

std::int64_t parse_endpoint(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw DomainError("bad integer set: " + std::string(whole));
    return v;
}

}  // namespace

IntegerSet::IntegerSet(std::vector<IntegerInterval> intervals) {
    std::erase_if(intervals, [](const IntegerInterval& i) { return i.lo > i.hi; });
    std::sort(intervals.begin(), intervals.end(),
              [](const IntegerInterval& l, const IntegerInterval& r) { return l.lo < r.lo; });
    for (const auto& iv : intervals) {
        if (!intervals_.empty()) {
            auto& back = intervals_.back();
            if (back.hi == kPosInf || iv.lo <= back.hi + 1) {
                back.hi = std::max(back.hi, iv.hi);
                continue;
            }
        }
        intervals_.push_back(iv);
    }
}

IntegerSet IntegerSet::interval(std::int64_t lo, std::int64_t hi) { return IntegerSet({{lo, hi}}); }

IntegerSet IntegerSet::parse(std::string_view text) {
    if (text.empty() || text == "empty") return {};
    std::vector<IntegerInterval> parts;
    while (!text.empty()) {
        const auto comma = text.find(',');
        std::string_view token = text.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        if (token.empty()) throw DomainError("bad integer set: empty element");
        const auto dots = token.find("..");
        if (dots == std::string_view::npos) {
            const auto v = parse_endpoint(token, token);
            parts.push_back({v, v});
            continue;
        }
        const auto left = token.substr(0, dots);
        const auto right = token.substr(dots + 2);
        const IntegerInterval iv{left.empty() ? kNegInf : parse_endpoint(left, token),
                                 right.empty() ? kPosInf : parse_endpoint(right, token)};
        if (iv.lo > iv.hi) throw DomainError("bad integer set: reversed range " + std::string(token));
        parts.push_back(iv);
    }
    return IntegerSet(std::move(parts));
}

IntegerSet IntegerSet::unite(const IntegerSet& other) const {
    auto all = intervals_;
    all.insert(all.end(), other.intervals_.begin(), other.intervals_.end());
    return IntegerSet(std::move(all));
}

IntegerSet IntegerSet::intersect(const IntegerSet& other) const {
    std::vector<IntegerInterval> out;
    for (const auto& l : intervals_)
        for (const auto& r : other.intervals_) {
            const auto lo = std::max(l.lo, r.lo);
            const auto hi = std::min(l.hi, r.hi);
            if (lo <= hi) out.push_back({lo, hi});
        }
    return IntegerSet(std::move(out));
}

IntegerSet IntegerSet::complement() const {
    std::vector<IntegerInterval> out;
    std::int64_t cursor = kNegInf;
    bool open = true;
    for (const auto& iv : intervals_) {
        if (iv.lo != kNegInf && open) out.push_back({cursor, iv.lo - 1});
        if (iv.hi == kPosInf) {
            open = false;
            break;
        }
        cursor = iv.hi + 1;
    }
    if (open) out.push_back({cursor, kPosInf});
    return IntegerSet(std::move(out));
}

IntegerSet IntegerSet::subtract(const IntegerSet& other) const { return intersect(other.complement()); }

IntegerSet IntegerSet::shifted(std::int64_t delta) const {
    std::vector<IntegerInterval> out;
    out.reserve(intervals_.size());
    for (const auto& iv : intervals_) out.push_back({saturating_add(iv.lo, delta), saturating_add(iv.hi, delta)});
    return IntegerSet(std::move(out));
}

bool IntegerSet::contains(std::int64_t k) const noexcept {
    return std::any_of(intervals_.begin(), intervals_.end(),
                       [k](const IntegerInterval& iv) { return iv.lo <= k && k <= iv.hi; });
}

std::string IntegerSet::str() const {
    if (intervals_.empty()) return "empty";
    std::string out;
    for (const auto& iv : intervals_) {
        if (!out.empty()) out += ",";
        if (iv.lo == iv.hi) {
            out += std::to_string(iv.lo);
            continue;
        }
        if (iv.lo != kNegInf) out += std::to_string(iv.lo);
        out += "..";
        if (iv.hi != kPosInf) out += std::to_string(iv.hi);
    }
    return out;
}

}  // namespace chilab
