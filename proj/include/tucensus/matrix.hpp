#pragma once

#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tucensus/detail/combinatorics.hpp"
#include "tucensus/errors.hpp"
#include "tucensus/graph.hpp"

namespace tucensus {

// Dense row-major matrix of exact arbitrary-precision integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        IntMatrix m(rows.size(), rows.size() ? rows.begin()->size() : 0);
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.size() != m.cols_) throw error(errc::shape_mismatch, "ragged row in matrix literal");
            std::size_t c = 0;
            for (long long x : row) m(r, c++) = x;
            ++r;
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(const IntMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    bool is_symmetric() const {
        if (rows_ != cols_) return false;
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = r + 1; c < cols_; ++c)
                if ((*this)(r, c) != (*this)(c, r)) return false;
        return true;
    }

    Int trace() const {
        if (rows_ != cols_) throw error(errc::non_square, "trace needs a square matrix");
        Int t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        require_same_shape(a, b);
        IntMatrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        require_same_shape(a, b);
        IntMatrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw error(errc::shape_mismatch, "product of " + shape_string(a) + " and " + shape_string(b));
        IntMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    std::string to_string() const {
        std::vector<std::string> cells(data_.size());
        std::size_t width = 1;
        for (std::size_t i = 0; i < data_.size(); ++i) {
            cells[i] = data_[i].str();
            width = std::max(width, cells[i].size());
        }
        std::ostringstream os;
        for (std::size_t r = 0; r < rows_; ++r) {
            os << '[';
            for (std::size_t c = 0; c < cols_; ++c) {
                const std::string& s = cells[r * cols_ + c];
                os << std::string(width - s.size() + (c ? 1 : 0), ' ') << s;
            }
            os << "]\n";
        }
        return os.str();
    }

private:
    static std::string shape_string(const IntMatrix& m) {
        return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
    }
    static void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw error(errc::shape_mismatch, shape_string(a) + " vs " + shape_string(b));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

inline IntMatrix degree_matrix(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    IntMatrix d(n, n);
    for (int v = 1; v <= g.vertex_count(); ++v)
        d(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(v - 1)) = g.degree(v);
    return d;
}

inline IntMatrix adjacency_matrix(const Graph& g) {
    const std::size_t n = static_cast<std::size_t>(g.vertex_count());
    IntMatrix a(n, n);
    for (const Edge& e : g.edges()) {
        a(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1)) = 1;
        a(static_cast<std::size_t>(e.v - 1), static_cast<std::size_t>(e.u - 1)) = 1;
    }
    return a;
}

// n x m vertex-edge incidence matrix; column j marks the endpoints of edge j.
inline IntMatrix incidence_matrix(const Graph& g) {
    IntMatrix n(static_cast<std::size_t>(g.vertex_count()), static_cast<std::size_t>(g.edge_count()));
    for (int j = 1; j <= g.edge_count(); ++j) {
        const Edge& e = g.edge(j);
        n(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(j - 1)) = 1;
        n(static_cast<std::size_t>(e.v - 1), static_cast<std::size_t>(j - 1)) = 1;
    }
    return n;
}

inline IntMatrix laplacian(const Graph& g) { return degree_matrix(g) - adjacency_matrix(g); }
inline IntMatrix signless_laplacian(const Graph& g) { return degree_matrix(g) + adjacency_matrix(g); }

// Submatrix specs mirror the bracket notation: keep-lists name the surviving
// 1-based indices, drop-lists name the removed ones.
struct Keep {
    std::vector<int> indices;
};
struct Drop {
    std::vector<int> indices;
};

namespace detail {

inline std::vector<std::size_t> resolve_keep(const std::vector<int>& spec, std::size_t extent) {
    std::vector<std::size_t> out;
    std::vector<char> used(extent, 0);
    out.reserve(spec.size());
    for (int i : spec) {
        if (i < 1 || static_cast<std::size_t>(i) > extent)
            throw error(errc::index_out_of_range,
                        "index " + std::to_string(i) + " outside 1.." + std::to_string(extent));
        if (used[static_cast<std::size_t>(i - 1)])
            throw error(errc::index_out_of_range, "index " + std::to_string(i) + " repeated in submatrix spec");
        used[static_cast<std::size_t>(i - 1)] = 1;
        out.push_back(static_cast<std::size_t>(i - 1));
    }
    return out;
}

inline std::vector<std::size_t> resolve_drop(const std::vector<int>& spec, std::size_t extent) {
    std::vector<char> removed(extent, 0);
    for (int i : spec) {
        if (i < 1 || static_cast<std::size_t>(i) > extent)
            throw error(errc::index_out_of_range,
                        "index " + std::to_string(i) + " outside 1.." + std::to_string(extent));
        if (removed[static_cast<std::size_t>(i - 1)])
            throw error(errc::index_out_of_range, "index " + std::to_string(i) + " repeated in submatrix spec");
        removed[static_cast<std::size_t>(i - 1)] = 1;
    }
    std::vector<std::size_t> out;
    out.reserve(extent - spec.size());
    for (std::size_t i = 0; i < extent; ++i)
        if (!removed[i]) out.push_back(i);
    return out;
}

inline IntMatrix take(const IntMatrix& m, const std::vector<std::size_t>& rows,
                      const std::vector<std::size_t>& cols) {
    IntMatrix out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
    return out;
}

} // namespace detail

// M[I;J]
inline IntMatrix submatrix(const IntMatrix& m, const Keep& rows, const Keep& cols) {
    return detail::take(m, detail::resolve_keep(rows.indices, m.rows()), detail::resolve_keep(cols.indices, m.cols()));
}
// M(I;J)
inline IntMatrix submatrix(const IntMatrix& m, const Drop& rows, const Drop& cols) {
    return detail::take(m, detail::resolve_drop(rows.indices, m.rows()), detail::resolve_drop(cols.indices, m.cols()));
}
// M(I;J]
inline IntMatrix submatrix(const IntMatrix& m, const Drop& rows, const Keep& cols) {
    return detail::take(m, detail::resolve_drop(rows.indices, m.rows()), detail::resolve_keep(cols.indices, m.cols()));
}
inline IntMatrix submatrix(const IntMatrix& m, const Keep& rows, const Drop& cols) {
    return detail::take(m, detail::resolve_keep(rows.indices, m.rows()), detail::resolve_drop(cols.indices, m.cols()));
}

// M(i): principal submatrix with row and column i removed (1-based).
inline IntMatrix principal_submatrix(const IntMatrix& m, int i) {
    if (m.rows() != m.cols())
        throw error(errc::non_square, "principal submatrix of a " + std::to_string(m.rows()) + "x" +
                                          std::to_string(m.cols()) + " matrix");
    return submatrix(m, Drop{{i}}, Drop{{i}});
}

// Exact determinant via Bareiss fraction-free elimination; every division is
// by the previous pivot and is exact over the integers.
inline Int det(IntMatrix m) {
    if (m.rows() != m.cols())
        throw error(errc::non_square, "determinant of " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m(pivot, j), m(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
            }
            m(i, k) = 0;
        }
        prev = m(k, k);
    }
    Int result = m(n - 1, n - 1);
    return sign == 1 ? result : -result;
}

struct CauchyBinetSides {
    Int lhs; // det(A B^T)
    Int rhs; // sum over column subsets S of det(A(;S]) det(B(;S])
};

inline CauchyBinetSides cauchy_binet_check(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw error(errc::shape_mismatch, "Cauchy-Binet needs equal shapes");
    if (a.rows() > a.cols())
        throw error(errc::shape_mismatch, "Cauchy-Binet needs rows <= cols");
    CauchyBinetSides sides;
    sides.lhs = det(a * b.transpose());
    sides.rhs = 0;
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    check_subset_budget(n, m);
    detail::for_each_combination(n, m, [&](const std::vector<int>& s) {
        Keep cols{s};
        sides.rhs += det(submatrix(a, Drop{{}}, cols)) * det(submatrix(b, Drop{{}}, cols));
    });
    return sides;
}

} // namespace tucensus
