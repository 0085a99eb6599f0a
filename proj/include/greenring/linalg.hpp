#pragma once

#include <vector>

#include "cyclotomic.hpp"

namespace greenring {

// Incrementally built row space over the cyclotomic field, kept in reduced
// row echelon form so rank and membership queries are exact.
class RowSpace {
public:
    explicit RowSpace(int cols) : cols_(cols) {}

    int rank() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    // Reduces v against the current rows; returns the remainder.
    std::vector<Cyclo> reduce(std::vector<Cyclo> v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw std::invalid_argument("RowSpace: wrong vector length");
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Cyclo& c = v[pivots_[i]];
            if (c.is_zero()) continue;
            Cyclo f = c;
            for (int j = pivots_[i]; j < cols_; ++j)
                if (!rows_[i][j].is_zero()) v[j] -= f * rows_[i][j];
        }
        return v;
    }

    bool contains(const std::vector<Cyclo>& v) const {
        auto r = reduce(v);
        for (auto& x : r)
            if (!x.is_zero()) return false;
        return true;
    }

    // Returns true if the vector enlarged the space.
    bool insert(const std::vector<Cyclo>& v) {
        auto r = reduce(v);
        int p = -1;
        for (int j = 0; j < cols_; ++j)
            if (!r[j].is_zero()) { p = j; break; }
        if (p < 0) return false;
        Cyclo inv = r[p].inverse();
        for (int j = p; j < cols_; ++j)
            if (!r[j].is_zero()) r[j] *= inv;
        // eliminate the new pivot from existing rows
        for (size_t i = 0; i < rows_.size(); ++i) {
            const Cyclo& c = rows_[i][p];
            if (c.is_zero()) continue;
            Cyclo f = c;
            for (int j = p; j < cols_; ++j)
                if (!r[j].is_zero()) rows_[i][j] -= f * r[j];
        }
        size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + at, std::move(r));
        pivots_.insert(pivots_.begin() + at, p);
        return true;
    }

private:
    int cols_;
    std::vector<std::vector<Cyclo>> rows_;
    std::vector<int> pivots_;
};

} // namespace greenring
