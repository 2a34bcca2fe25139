#pragma once

// Labeled bipartite incidence structures and their canonical forms.
// Sizes here are tiny (at most 16+16), so the canonical-form search is a
// straightforward DFS over row orders with sorted-column prefix pruning.

#include <algorithm>
#include <cstdint>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace k3k {

using BitMatrix = std::vector<std::vector<uint8_t>>;

struct IncidenceStructure {
    std::vector<std::string> a_labels;
    std::vector<std::string> b_labels;
    BitMatrix matrix;  // a_labels.size() x b_labels.size()

    IncidenceStructure(std::vector<std::string> a, std::vector<std::string> b, BitMatrix m)
        : a_labels(std::move(a)), b_labels(std::move(b)), matrix(std::move(m)) {
        if (matrix.size() != a_labels.size())
            throw std::invalid_argument("incidence row count mismatch");
        for (const auto& row : matrix)
            if (row.size() != b_labels.size())
                throw std::invalid_argument("incidence column count mismatch");
        std::set<std::string> sa(a_labels.begin(), a_labels.end());
        std::set<std::string> sb(b_labels.begin(), b_labels.end());
        if (sa.size() != a_labels.size() || sb.size() != b_labels.size())
            throw std::invalid_argument("duplicate incidence labels");
    }

    size_t rows() const { return matrix.size(); }
    size_t cols() const { return matrix.empty() ? 0 : matrix[0].size(); }

    uint8_t at(size_t i, size_t j) const { return matrix[i][j]; }
    uint8_t at(const std::string& a, const std::string& b) const {
        return matrix[index_of(a_labels, a)][index_of(b_labels, b)];
    }

    IncidenceStructure transposed() const {
        BitMatrix t(cols(), std::vector<uint8_t>(rows()));
        for (size_t i = 0; i < rows(); ++i)
            for (size_t j = 0; j < cols(); ++j) t[j][i] = matrix[i][j];
        return IncidenceStructure(b_labels, a_labels, std::move(t));
    }

    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < rows(); ++i) {
            os << a_labels[i] << ":";
            for (size_t j = 0; j < cols(); ++j) os << " " << int(matrix[i][j]);
            os << "\n";
        }
        return os.str();
    }

    static size_t index_of(const std::vector<std::string>& labels, const std::string& l) {
        auto it = std::find(labels.begin(), labels.end(), l);
        if (it == labels.end()) throw std::invalid_argument("unknown label: " + l);
        return size_t(it - labels.begin());
    }
};

// Every row and every column sums to n, on a square structure.
inline bool is_symmetric_config(const IncidenceStructure& inc, int n) {
    if (inc.rows() != inc.cols()) return false;
    for (size_t i = 0; i < inc.rows(); ++i) {
        int rs = 0, cs = 0;
        for (size_t j = 0; j < inc.cols(); ++j) {
            rs += inc.matrix[i][j];
            cs += inc.matrix[j][i];
        }
        if (rs != n || cs != n) return false;
    }
    return true;
}

// Every pair of columns shares exactly two common incident rows.
inline bool nondegenerate_16_6(const IncidenceStructure& inc) {
    if (!is_symmetric_config(inc, 6) || inc.rows() != 16) return false;
    for (size_t j1 = 0; j1 < 16; ++j1)
        for (size_t j2 = j1 + 1; j2 < 16; ++j2) {
            int common = 0;
            for (size_t i = 0; i < 16; ++i) common += inc.matrix[i][j1] & inc.matrix[i][j2];
            if (common != 2) return false;
        }
    return true;
}

namespace detail {

// Canonical representative of a 0/1 matrix under independent row and column
// permutations: lexicographically smallest row sequence where, for the chosen
// row order, columns are sorted ascending by their bit-column value (greedy
// per-row refinement of ties). The first k candidate rows depend only on the
// first k chosen rows, which makes prefix pruning sound.
class BipartiteCanonizer {
  public:
    explicit BipartiteCanonizer(const BitMatrix& m)
        : nrows_(m.size()), ncols_(m.empty() ? 0 : m[0].size()), m_(m) {}

    BitMatrix run() {
        best_.assign(nrows_, std::vector<uint8_t>(ncols_, 2));  // 2 > any bit
        std::vector<uint32_t> colval(ncols_, 0);
        std::vector<int> used;
        used.reserve(nrows_);
        std::vector<bool> taken(nrows_, false);
        dfs(used, taken, colval);
        return best_;
    }

  private:
    // candidate row produced by appending original row r: the bits of r read
    // in the order of columns sorted ascending by (colval, bit of r).
    std::vector<uint8_t> cand_row(int r, const std::vector<uint32_t>& colval) const {
        std::vector<int> idx(ncols_);
        for (int j = 0; j < ncols_; ++j) idx[j] = j;
        std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
            uint64_t va = (uint64_t(colval[a]) << 1) | m_[r][a];
            uint64_t vb = (uint64_t(colval[b]) << 1) | m_[r][b];
            return va < vb;
        });
        std::vector<uint8_t> row(ncols_);
        for (int j = 0; j < ncols_; ++j) row[j] = m_[r][idx[j]];
        return row;
    }

    void dfs(std::vector<int>& used, std::vector<bool>& taken,
             const std::vector<uint32_t>& colval) {
        size_t depth = used.size();
        if (depth == size_t(nrows_)) return;  // best_ already updated on the way down
        for (int r = 0; r < nrows_; ++r) {
            if (taken[r]) continue;
            std::vector<uint8_t> row = cand_row(r, colval);
            int cmp = compare(row, best_[depth]);
            if (cmp > 0) continue;  // prefix already worse
            bool improved = cmp < 0;
            if (improved) {
                best_[depth] = row;
                for (size_t d = depth + 1; d < size_t(nrows_); ++d)
                    best_[d].assign(ncols_, 2);
            }
            std::vector<uint32_t> cv(ncols_);
            for (int j = 0; j < ncols_; ++j) cv[j] = (colval[j] << 1) | m_[r][j];
            taken[r] = true;
            used.push_back(r);
            dfs(used, taken, cv);
            used.pop_back();
            taken[r] = false;
        }
    }

    static int compare(const std::vector<uint8_t>& a, const std::vector<uint8_t>& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }

    int nrows_, ncols_;
    const BitMatrix& m_;
    BitMatrix best_;
};

}  // namespace detail

inline BitMatrix canonical_bipartite_form(const IncidenceStructure& inc) {
    return detail::BipartiteCanonizer(inc.matrix).run();
}

inline bool incidence_isomorphic(const IncidenceStructure& a, const IncidenceStructure& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return canonical_bipartite_form(a) == canonical_bipartite_form(b);
}

}  // namespace k3k
