#ifndef MNRULES_STRIPS_HPP
#define MNRULES_STRIPS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "mnrules/partition.hpp"

namespace mnr {

struct StripKind {
    bool is_horizontal = false;
    bool is_vertical = false;
    bool is_border = false;
    std::optional<int> height; // set iff is_border
};

/// Checks the strip predicates directly on the cell set of `s`.
StripKind classify_strip(const SkewShape& s);

/// A partition obtained by adding or removing a border strip, with the
/// strip's height.
struct StripStep {
    Partition shape;
    int height = 0;
    friend bool operator==(const StripStep&, const StripStep&) = default;
};

/// All eta with at most `max_rows` rows such that eta/mu is a border strip
/// of size r. Canonical order (descending lexicographic).
std::vector<StripStep> border_strip_additions(const Partition& mu, int r, std::size_t max_rows);

/// Same, without a row bound (a strip of size r adds at most r rows).
std::vector<StripStep> border_strip_additions(const Partition& mu, int r);

/// All xi with mu/xi a border strip of size r.
std::vector<StripStep> border_strip_removals(const Partition& mu, int r);

/// All nu with lambda/nu a vertical strip of size s.
std::vector<Partition> vertical_strip_removals(const Partition& lambda, int s);

/// All nu with lambda/nu a vertical strip of any size.
std::vector<Partition> vertical_strip_removals(const Partition& lambda);

/// All gamma with at most `max_rows` rows and gamma/mu a horizontal strip of
/// size r.
std::vector<Partition> horizontal_strip_additions(const Partition& mu, int r,
                                                  std::size_t max_rows);

/// All gamma with at most `max_rows` rows and gamma/mu a vertical strip of
/// size r.
std::vector<Partition> vertical_strip_additions(const Partition& mu, int r, std::size_t max_rows);

} // namespace mnr

#endif
