#include "openbook/graded_ranks.hpp"

#include <stdexcept>
#include <string>

namespace openbook {

GradedRanks::GradedRanks(std::initializer_list<std::pair<int, Integer>> entries) {
    for (const auto& [degree, rank] : entries) set(degree, rank);
}

GradedRanks::GradedRanks(const Map& entries) {
    for (const auto& [degree, rank] : entries) set(degree, rank);
}

void GradedRanks::set(int degree, Integer rank) {
    if (degree < 1) {
        throw std::invalid_argument("graded ranks: degree must be >= 1, got " +
                                    std::to_string(degree));
    }
    if (rank < 0) {
        throw std::invalid_argument("graded ranks: rank at degree " + std::to_string(degree) +
                                    " must be >= 0, got " + rank.get_str());
    }
    if (rank == 0) {
        entries_.erase(degree);
    } else {
        entries_[degree] = std::move(rank);
    }
}

void GradedRanks::add(int degree, const Integer& rank) { set(degree, this->rank(degree) + rank); }

Integer GradedRanks::rank(int degree) const {
    auto it = entries_.find(degree);
    return it == entries_.end() ? Integer(0) : it->second;
}

Integer GradedRanks::total() const {
    Integer sum = 0;
    for (const auto& [degree, rank] : entries_) sum += rank;
    return sum;
}

Integer GradedRanks::total_through(int degree) const {
    Integer sum = 0;
    for (const auto& [d, rank] : entries_) {
        if (d > degree) break;
        sum += rank;
    }
    return sum;
}

GradedRanks GradedRanks::truncated(int degree) const {
    GradedRanks out;
    for (const auto& [d, rank] : entries_) {
        if (d > degree) break;
        out.entries_.emplace(d, rank);
    }
    return out;
}

GradedRanks GradedRanks::shifted(int offset) const {
    GradedRanks out;
    for (const auto& [d, rank] : entries_) {
        if (d + offset < 1) {
            throw std::domain_error("graded ranks: shifting degree " + std::to_string(d) + " by " +
                                    std::to_string(offset) + " leaves the positive range");
        }
        out.entries_.emplace(d + offset, rank);
    }
    return out;
}

GradedRanks operator+(const GradedRanks& a, const GradedRanks& b) {
    GradedRanks out = a;
    for (const auto& [degree, rank] : b.entries_) {
        auto [it, inserted] = out.entries_.try_emplace(degree, rank);
        if (!inserted) it->second += rank;
    }
    return out;
}

}  // namespace openbook
