#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "frieze/numeric.hpp"

namespace frieze {

/// A bi-infinite row of positive integers, stored either as one period of a
/// cyclic tuple or as a finite window padded with 2 on both sides. Indexing
/// is total: at(i) is defined for every integer i.
class QuiddityRow {
public:
    enum class Kind { periodic, windowed };

    static QuiddityRow periodic(std::vector<long long> entries) {
        if (entries.empty())
            throw std::invalid_argument("periodic quiddity row needs at least one entry");
        check_positive(entries);
        QuiddityRow q;
        q.kind_ = Kind::periodic;
        q.entries_ = std::move(entries);
        return q;
    }

    static QuiddityRow windowed(Index lo, std::vector<long long> entries) {
        if (entries.empty())
            throw std::invalid_argument("windowed quiddity row needs at least one entry");
        check_positive(entries);
        QuiddityRow q;
        q.kind_ = Kind::windowed;
        q.lo_ = lo;
        q.entries_ = std::move(entries);
        return q;
    }

    Kind kind() const { return kind_; }
    bool is_periodic() const { return kind_ == Kind::periodic; }
    bool is_windowed() const { return kind_ == Kind::windowed; }

    /// Period length for periodic rows, window length for windowed rows.
    Index size() const { return static_cast<Index>(entries_.size()); }

    Index lo() const { return lo_; }
    Index hi() const { return lo_ + size() - 1; }

    const std::vector<long long>& entries() const { return entries_; }

    long long at(Index i) const {
        if (kind_ == Kind::periodic) {
            const Index n = size();
            Index r = i % n;
            if (r < 0) r += n;
            return entries_[static_cast<std::size_t>(r)];
        }
        if (i < lo_ || i > hi()) return 2;
        return entries_[static_cast<std::size_t>(i - lo_)];
    }

private:
    static void check_positive(const std::vector<long long>& entries) {
        for (long long a : entries)
            if (a < 1)
                throw std::invalid_argument("quiddity entries must be >= 1, got " + std::to_string(a));
    }

    Kind kind_ = Kind::periodic;
    Index lo_ = 0;
    std::vector<long long> entries_;
};

} // namespace frieze
