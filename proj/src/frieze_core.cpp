#include "frieze/frieze_core.hpp"

#include <stdexcept>

namespace frieze {

Int entry_recurrence(const QuiddityRow& q, Index i, Index j) {
    if (j < i - 2) throw std::invalid_argument("entry_recurrence needs j >= i - 2");
    Int prev2 = 0; // m_{i,i-2}
    Int prev1 = 1; // m_{i,i-1}
    if (j == i - 2) return prev2;
    if (j == i - 1) return prev1;
    Int cur;
    for (Index t = i; t <= j; ++t) {
        cur = Int(q.at(t)) * prev1 - prev2;
        prev2 = prev1;
        prev1 = cur;
    }
    return cur;
}

Int entry_continuant(const QuiddityRow& q, Index i, Index j) {
    if (j < i) throw std::invalid_argument("entry_continuant needs j >= i");
    // Expand the determinant along its last row and sweep upward, i.e. the
    // i-direction recurrence D_t = a_t * D_{t+1} - D_{t+2}.
    Int next2 = 0;
    Int next1 = 1;
    Int cur;
    for (Index t = j; t >= i; --t) {
        cur = Int(q.at(t)) * next1 - next2;
        next2 = next1;
        next1 = cur;
    }
    return cur;
}

Int entry_extended(const QuiddityRow& q, Index i, Index j) {
    if (j < i - 2) return 0;
    return entry_recurrence(q, i, j);
}

FriezeFragment::FriezeFragment(QuiddityRow source, Index i_min, Index i_max, Index d_max)
    : source_(std::move(source)), i_min_(i_min), i_max_(i_max), d_max_(d_max) {
    if (i_max < i_min) throw std::invalid_argument("fragment needs i_max >= i_min");
    if (d_max < -2) throw std::invalid_argument("fragment needs d_max >= -2");
    const std::size_t width = static_cast<std::size_t>(i_max - i_min + 1);
    rows_.assign(static_cast<std::size_t>(d_max + 3), std::vector<Int>(width));
    for (Index i = i_min; i <= i_max; ++i) {
        Int prev2 = 0, prev1 = 1;
        at_mut(i, i - 2) = prev2;
        if (d_max >= -1) at_mut(i, i - 1) = prev1;
        for (Index j = i; j - i <= d_max; ++j) {
            Int cur = Int(source_.at(j)) * prev1 - prev2;
            at_mut(i, j) = cur;
            prev2 = prev1;
            prev1 = cur;
        }
    }
}

const Int& FriezeFragment::at(Index i, Index j) const {
    if (!contains(i, j)) throw std::out_of_range("fragment position out of range");
    return rows_[static_cast<std::size_t>(j - i + 2)][static_cast<std::size_t>(i - i_min_)];
}

Int& FriezeFragment::at_mut(Index i, Index j) {
    return rows_[static_cast<std::size_t>(j - i + 2)][static_cast<std::size_t>(i - i_min_)];
}

FriezeFragment fragment(const QuiddityRow& q, Index i_min, Index i_max, Index d_max) {
    return FriezeFragment(q, i_min, i_max, d_max);
}

UnimodularReport verify_unimodular(const FriezeFragment& f) {
    UnimodularReport report;
    for (Index i = f.i_min(); i <= f.i_max(); ++i) {
        if (f.at(i, i - 2) != 0) report.bad_boundary.emplace_back(i, i - 2);
        if (f.d_max() >= -1 && f.at(i, i - 1) != 1) report.bad_boundary.emplace_back(i, i - 1);
    }
    // Diamond with left corner (i, j): needs (i+1, j), (i, j+1), (i+1, j+1).
    for (Index i = f.i_min(); i + 1 <= f.i_max(); ++i) {
        for (Index j = i - 1; j - i + 1 <= f.d_max(); ++j) {
            if (!f.contains(i, j) || !f.contains(i + 1, j + 1)) continue;
            Int det = f.at(i, j) * f.at(i + 1, j + 1) - f.at(i + 1, j) * f.at(i, j + 1);
            if (det != 1) report.failing_diamonds.emplace_back(i, j);
        }
    }
    report.pass = report.failing_diamonds.empty() && report.bad_boundary.empty();
    return report;
}

bool verify_ptolemy(const QuiddityRow& q, Index i, Index j, Index k) {
    if (k < i || k > j + 1) throw std::invalid_argument("verify_ptolemy needs i <= k <= j + 1");
    Int lhs = entry_extended(q, i, j);
    Int rhs = entry_extended(q, i, k - 1) * entry_extended(q, k, j)
            - entry_extended(q, i, k - 2) * entry_extended(q, k + 1, j);
    return lhs == rhs;
}

Int BumpResult::closed_form_entry(Index i, Index j) const {
    Int base = entry_extended(original, i, j);
    if (i > k + 1 || j < k - 1) return base;
    return base + Int(b) * entry_extended(original, i, k - 1) * entry_extended(original, k + 1, j);
}

BumpResult bump(const QuiddityRow& q, Index k, long long b) {
    if (b <= 0) throw std::invalid_argument("bump needs b > 0");
    QuiddityRow base = q;
    if (q.is_periodic()) {
        for (long long a : q.entries())
            if (a != 2)
                throw std::invalid_argument(
                    "bump of a periodic row is only representable when the row is constant 2");
        base = QuiddityRow::windowed(k, {2});
    }
    Index lo = std::min(base.lo(), k);
    Index hi = std::max(base.hi(), k);
    std::vector<long long> entries;
    entries.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (Index t = lo; t <= hi; ++t) entries.push_back(base.at(t));
    entries[static_cast<std::size_t>(k - lo)] += b;
    BumpResult result;
    result.row = QuiddityRow::windowed(lo, std::move(entries));
    result.original = base;
    result.k = k;
    result.b = b;
    return result;
}

Index shortest_period(const std::vector<long long>& entries) {
    if (entries.empty()) throw std::invalid_argument("shortest_period of empty tuple");
    const Index n = static_cast<Index>(entries.size());
    for (Index r = 1; r <= n; ++r) {
        if (n % r != 0) continue;
        bool ok = true;
        for (Index i = r; i < n && ok; ++i)
            if (entries[static_cast<std::size_t>(i)] != entries[static_cast<std::size_t>(i - r)])
                ok = false;
        if (ok) return r;
    }
    return n;
}

} // namespace frieze
