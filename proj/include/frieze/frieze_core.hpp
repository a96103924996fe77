#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "frieze/numeric.hpp"
#include "frieze/quiddity.hpp"

namespace frieze {

/// m_ij by the forward three-term recurrence in j, seeded with
/// m_{i,i-2} = 0 and m_{i,i-1} = 1. Total for j >= i-2; values may be <= 0,
/// the caller decides what that means.
Int entry_recurrence(const QuiddityRow& q, Index i, Index j);

/// Same entry read as the tridiagonal determinant with diagonal a_i..a_j and
/// unit off-diagonals. Evaluated by the scalar continuant recurrence sweeping
/// from the bottom-right corner, so it is an independent route from
/// entry_recurrence. Requires j >= i.
Int entry_continuant(const QuiddityRow& q, Index i, Index j);

/// m_ij extended by zero below the seed rows (i > j + 2 reads as 0).
Int entry_extended(const QuiddityRow& q, Index i, Index j);

/// A finite slab of frieze entries, row-major by depth d = j - i.
class FriezeFragment {
public:
    FriezeFragment(QuiddityRow source, Index i_min, Index i_max, Index d_max);

    Index i_min() const { return i_min_; }
    Index i_max() const { return i_max_; }
    Index d_min() const { return -2; }
    Index d_max() const { return d_max_; }
    const QuiddityRow& source() const { return source_; }

    bool contains(Index i, Index j) const {
        return i >= i_min_ && i <= i_max_ && j - i >= -2 && j - i <= d_max_;
    }
    const Int& at(Index i, Index j) const;
    Int& at_mut(Index i, Index j);

private:
    QuiddityRow source_;
    Index i_min_, i_max_, d_max_;
    std::vector<std::vector<Int>> rows_; // rows_[d + 2][i - i_min]
};

FriezeFragment fragment(const QuiddityRow& q, Index i_min, Index i_max, Index d_max);

struct UnimodularReport {
    bool pass = true;
    // Positions (i, j) of the top-left corner of each failing diamond, plus
    // any boundary-row entries that are not 0/1 as required.
    std::vector<std::pair<Index, Index>> failing_diamonds;
    std::vector<std::pair<Index, Index>> bad_boundary;
};

/// Checks every fully stored diamond m_ij*m_{i+1,j+1} - m_{i+1,j}*m_{i,j+1} = 1
/// and the two trivial boundary rows. Failures are data, not errors.
UnimodularReport verify_unimodular(const FriezeFragment& f);

/// Lemma-style splitting identity m_ij = m_{i,k-1}*m_kj - m_{i,k-2}*m_{k+1,j}
/// on entries computed by entry_recurrence. Requires i <= k <= j + 1.
bool verify_ptolemy(const QuiddityRow& q, Index i, Index j, Index k);

/// Result of increasing one row entry: the modified row plus the closed-form
/// evaluator for entries of the new frieze in terms of the old one.
struct BumpResult {
    QuiddityRow row;
    QuiddityRow original;
    Index k = 0;
    long long b = 0;

    /// m_ij + b * m_{i,k-1} * m_{k+1,j}, evaluated on the original row with
    /// the zero extension below the seeds. Agrees with entry_recurrence on
    /// the bumped row everywhere.
    Int closed_form_entry(Index i, Index j) const;
};

/// Adds b to the single entry a_k of the bi-infinite row. Windowed rows are
/// extended as needed; a periodic row is accepted only when it is constant 2
/// (the one periodic row expressible as a padded window), otherwise the
/// single-site change has no representation here.
BumpResult bump(const QuiddityRow& q, Index k, long long b);

/// Smallest divisor r of n such that the cyclic tuple is r-periodic.
Index shortest_period(const std::vector<long long>& entries);

} // namespace frieze
