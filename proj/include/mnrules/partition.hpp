#ifndef MNRULES_PARTITION_HPP
#define MNRULES_PARTITION_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mnr {

/// Raised when a partition, skew shape or staircase is constructed from
/// invalid data.
class shape_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are dropped on construction, so `(2,1,0)` and `(2,1)` are
/// the same value. `part(i)` uses 1-based row indices and is total: rows
/// past the length read as 0, which is how formulas that mention a padded
/// n-th part are evaluated.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    /// Parses "4,3,1"; "" and "0" give the empty partition.
    static Partition parse(std::string_view text);

    [[nodiscard]] std::size_t length() const noexcept { return parts_.size(); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] int part(std::size_t row) const noexcept {
        return row >= 1 && row <= parts_.size() ? parts_[row - 1] : 0;
    }
    [[nodiscard]] std::span<const int> parts() const noexcept { return parts_; }

    /// Parts padded with zeros (or truncated) to exactly `n` entries.
    [[nodiscard]] std::vector<int> padded(std::size_t n) const;

    [[nodiscard]] Partition conjugate() const;

    /// Young-diagram containment: part(i) <= other.part(i) for all i.
    [[nodiscard]] bool contained_in(const Partition& other) const noexcept;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Sorts descending lexicographically and removes duplicates; this is the
/// canonical order for every enumerated set of partitions.
void canonicalize(std::vector<Partition>& ps);

/// All partitions of `size`, in canonical order.
std::vector<Partition> partitions_of(int size);
/// All partitions of `size` with at most `max_length` parts.
std::vector<Partition> partitions_of(int size, std::size_t max_length);
/// All partitions contained in `outer`, in canonical order.
std::vector<Partition> partitions_inside(const Partition& outer);

/// The skew diagram outer/inner.
class SkewShape {
  public:
    struct Cell {
        int row; // 1-based
        int col; // 1-based
        friend bool operator==(const Cell&, const Cell&) = default;
    };

    SkewShape(Partition outer, Partition inner);

    [[nodiscard]] const Partition& outer() const noexcept { return outer_; }
    [[nodiscard]] const Partition& inner() const noexcept { return inner_; }
    [[nodiscard]] int size() const noexcept { return outer_.size() - inner_.size(); }
    /// Cells in row-major order.
    [[nodiscard]] std::vector<Cell> cells() const;
    [[nodiscard]] SkewShape conjugate() const;

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

  private:
    Partition outer_;
    Partition inner_;
};

std::ostream& operator<<(std::ostream& os, const SkewShape& s);

} // namespace mnr

#endif
