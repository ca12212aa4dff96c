#ifndef MNRULES_STAIRCASE_HPP
#define MNRULES_STAIRCASE_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "mnrules/partition.hpp"

namespace mnr {

enum class StaircaseKind { symplectic, odd_orthogonal, even_orthogonal };

std::string_view to_string(StaircaseKind kind) noexcept;

/// The shift vector of a Weyl-type determinant, held in doubled units:
///
///   symplectic       (n, n-1, ..., 1)          -> (2n, 2n-2, ..., 2)
///   odd orthogonal   (n-1/2, ..., 1/2)         -> (2n-1, 2n-3, ..., 1)
///   even orthogonal  (n-1, ..., 0)             -> (2n-2, ..., 0)
class StaircaseDelta {
  public:
    StaircaseDelta(StaircaseKind kind, std::size_t n);

    [[nodiscard]] StaircaseKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    /// 2 * delta_i for 1 <= i <= n.
    [[nodiscard]] int doubled(std::size_t i) const noexcept;
    [[nodiscard]] std::vector<int> doubled() const;

    /// 2 * (mu + delta), padded to n entries.
    [[nodiscard]] std::vector<int> shifted(const Partition& mu) const;

  private:
    StaircaseKind kind_;
    std::size_t n_;
};

/// Largest i in [1, n] with mu_i + delta_i >= r, or 0 when there is none.
/// Requires length(mu) <= n.
std::size_t m_index(const Partition& mu, const StaircaseDelta& delta, int r);

/// The partition produced for one index q of the third sum, together with
/// p(q), the 1-based position the reflected entry r - (mu_q + delta_q) takes
/// in the re-sorted shifted vector.
struct ReflectedTerm {
    Partition shape;
    std::size_t position = 0;
    friend bool operator==(const ReflectedTerm&, const ReflectedTerm&) = default;
};

/// Replaces entry q of mu + delta by r - (mu_q + delta_q), sorts, and
/// subtracts delta. Absent when the reflected entry collides with another
/// entry. Throws std::invalid_argument unless mu_q + delta_q < r and
/// 1 <= q <= n.
std::optional<ReflectedTerm> mu_q(const Partition& mu, const StaircaseDelta& delta, int r,
                                  std::size_t q);

/// The same partition built row by row on the Young diagram: drop row q,
/// slide the rows between q and p(q) by one (gaining or losing a box each),
/// then insert a row of r - (mu_q + delta_q + delta_p) boxes at row p(q).
std::optional<ReflectedTerm> mu_q_combinatorial(const Partition& mu,
                                                const StaircaseDelta& delta, int r,
                                                std::size_t q);

} // namespace mnr

#endif
