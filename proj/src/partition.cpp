#include "mnrules/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <ostream>
#include <sstream>

namespace mnr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw shape_error("partition has a negative part");
        }
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]) {
            throw shape_error("partition parts must be weakly decreasing");
        }
    }
}

Partition Partition::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    if (text.empty()) {
        return {};
    }
    std::vector<int> parts;
    while (true) {
        auto comma = text.find(',');
        auto field = trim(text.substr(0, comma));
        int value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw shape_error("invalid partition string '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return Partition(std::move(parts));
}

int Partition::size() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<int> Partition::padded(std::size_t n) const {
    std::vector<int> out(n, 0);
    std::copy_n(parts_.begin(), std::min(n, parts_.size()), out.begin());
    return out;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_) {
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
}

bool Partition::contained_in(const Partition& other) const noexcept {
    if (parts_.size() > other.parts_.size()) return false;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] > other.parts_[i]) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

void canonicalize(std::vector<Partition>& ps) {
    std::sort(ps.begin(), ps.end(), std::greater<>{});
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
}

namespace {

void partitions_rec(int remaining, int max_part, std::size_t max_length, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    if (cur.size() == max_length) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, max_length, cur, out);
        cur.pop_back();
    }
}

void inside_rec(const Partition& outer, std::size_t row, int bound, std::vector<int>& cur,
                std::vector<Partition>& out) {
    if (row > outer.length()) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(bound, outer.part(row)); p >= 0; --p) {
        cur.push_back(p);
        if (p == 0) {
            out.emplace_back(cur);
        } else {
            inside_rec(outer, row + 1, p, cur, out);
        }
        cur.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int size) {
    return partitions_of(size, static_cast<std::size_t>(std::max(size, 0)));
}

std::vector<Partition> partitions_of(int size, std::size_t max_length) {
    std::vector<Partition> out;
    if (size < 0) return out;
    std::vector<int> cur;
    partitions_rec(size, size, max_length, cur, out);
    return out;
}

std::vector<Partition> partitions_inside(const Partition& outer) {
    std::vector<Partition> out;
    std::vector<int> cur;
    inside_rec(outer, 1, outer.part(1), cur, out);
    canonicalize(out);
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!inner_.contained_in(outer_)) {
        throw shape_error("skew shape " + outer_.to_string() + "/" + inner_.to_string() +
                          ": inner partition is not contained in outer");
    }
}

std::vector<SkewShape::Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (std::size_t i = 1; i <= outer_.length(); ++i) {
        for (int j = inner_.part(i) + 1; j <= outer_.part(i); ++j) {
            out.push_back({static_cast<int>(i), j});
        }
    }
    return out;
}

SkewShape SkewShape::conjugate() const { return {outer_.conjugate(), inner_.conjugate()}; }

std::ostream& operator<<(std::ostream& os, const SkewShape& s) {
    return os << s.outer() << '/' << s.inner();
}

} // namespace mnr
