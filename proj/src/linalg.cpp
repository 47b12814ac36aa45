#include "germcalc/linalg.hpp"

#include <algorithm>

#include "germcalc/error.hpp"

namespace germcalc {

void normalize_row(SparseRow& row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    SparseRow out;
    out.reserve(row.size());
    for (auto& entry : row) {
        if (!out.empty() && out.back().first == entry.first) {
            out.back().second += entry.second;
            if (sgn(out.back().second) == 0) out.pop_back();
        } else if (sgn(entry.second) != 0) {
            out.push_back(std::move(entry));
        }
    }
    row = std::move(out);
}

namespace {

// row <- row - factor * pivot, both sorted by decreasing column.
SparseRow subtract_scaled(const SparseRow& row, const Rational& factor, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    std::size_t i = 0;
    std::size_t j = 0;
    Rational tmp;
    while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first > pivot[j].first)) {
            out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first > row[i].first) {
            tmp = factor * pivot[j].second;
            out.emplace_back(pivot[j].first, -tmp);
            ++j;
        } else {
            tmp = row[i].second - factor * pivot[j].second;
            if (sgn(tmp) != 0) out.emplace_back(row[i].first, tmp);
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

SparseRow EchelonBasis::reduce(SparseRow row) const {
    std::size_t lead = 0;
    // Entries before `lead` are already known to sit on non-pivot columns.
    while (lead < row.size()) {
        const auto col = row[lead].first;
        if (col >= pivots_.size()) throw ValidationError("row column out of range");
        const auto& pivot = pivots_[col];
        if (!pivot) {
            ++lead;
            continue;
        }
        SparseRow head(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(lead));
        SparseRow tail(row.begin() + static_cast<std::ptrdiff_t>(lead), row.end());
        const Rational factor = tail.front().second;
        tail = subtract_scaled(tail, factor, *pivot);
        head.insert(head.end(), std::make_move_iterator(tail.begin()), std::make_move_iterator(tail.end()));
        row = std::move(head);
    }
    return row;
}

bool EchelonBasis::insert(SparseRow row) {
    // Only the leading term needs to avoid existing pivots.
    while (!row.empty()) {
        const auto col = row.front().first;
        if (col >= pivots_.size()) throw ValidationError("row column out of range");
        const auto& pivot = pivots_[col];
        if (!pivot) break;
        const Rational factor = row.front().second;
        row = subtract_scaled(row, factor, *pivot);
    }
    if (row.empty()) return false;
    const Rational inv = 1 / row.front().second;
    if (inv != 1)
        for (auto& entry : row) entry.second *= inv;
    const auto col = row.front().first;
    pivots_[col] = std::move(row);
    ++rank_;
    return true;
}

std::size_t dense_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t ncols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < ncols && rank < rows.size(); ++c) {
        std::size_t sel = rank;
        while (sel < rows.size() && sgn(rows[sel][c]) == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || sgn(rows[r][c]) == 0) continue;
            const Rational f = rows[r][c] / rows[rank][c];
            for (std::size_t k = c; k < ncols; ++k) rows[r][k] -= f * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

}  // namespace germcalc
