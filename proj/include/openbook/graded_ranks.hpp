#pragma once

#include <initializer_list>
#include <map>
#include <utility>

#include "openbook/numeric.hpp"

namespace openbook {

// Finite map from positive degree to positive rank. A degree that is absent
// has rank zero; zero ranks are never stored, so two GradedRanks describing
// the same function compare equal. Used for dimensions of rational homotopy
// groups and of graded Lie algebra components.
class GradedRanks {
public:
    using Map = std::map<int, Integer>;
    using const_iterator = Map::const_iterator;

    GradedRanks() = default;
    GradedRanks(std::initializer_list<std::pair<int, Integer>> entries);
    explicit GradedRanks(const Map& entries);

    // Degree must be >= 1 and rank >= 0; a zero rank erases the entry.
    void set(int degree, Integer rank);
    void add(int degree, const Integer& rank);

    Integer rank(int degree) const;
    bool empty() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    int max_degree() const { return entries_.empty() ? 0 : entries_.rbegin()->first; }
    int min_degree() const { return entries_.empty() ? 0 : entries_.begin()->first; }

    Integer total() const;
    Integer total_through(int degree) const;

    // Entries at degrees <= degree.
    GradedRanks truncated(int degree) const;
    // Adds offset to every degree; the shifted degrees must stay >= 1.
    GradedRanks shifted(int offset) const;

    const_iterator begin() const { return entries_.begin(); }
    const_iterator end() const { return entries_.end(); }
    const Map& entries() const { return entries_; }

    friend GradedRanks operator+(const GradedRanks& a, const GradedRanks& b);
    friend bool operator==(const GradedRanks& a, const GradedRanks& b) {
        return a.entries_ == b.entries_;
    }

private:
    Map entries_;
};

}  // namespace openbook
