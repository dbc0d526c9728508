#include "nucleus/matrix.hpp"

#include <sstream>

namespace nucleus {

bool is_zero_or_prime(long long p) {
    if (p == 0) return true;
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

ZMat::ZMat(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = int(rows.size());
    cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
    a_.reserve(size_t(rows_) * cols_);
    for (const auto& r : rows) {
        if (int(r.size()) != cols_) throw std::invalid_argument("ZMat: ragged rows");
        for (long v : r) a_.emplace_back(v);
    }
}

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ZVec ZMat::row(int i) const {
    return ZVec(a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_);
}

void ZMat::set_row(int i, const ZVec& v) {
    if (int(v.size()) != cols_) throw std::invalid_argument("ZMat: row size mismatch");
    for (int j = 0; j < cols_; ++j) at(i, j) = v[j];
}

ZMat ZMat::operator*(const ZMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("ZMat: shape mismatch in product");
    ZMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

ZVec ZMat::operator*(const ZVec& v) const {
    if (int(v.size()) != cols_) throw std::invalid_argument("ZMat: shape mismatch in mat-vec");
    ZVec r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

ZMat ZMat::operator-(const ZMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("ZMat: shape mismatch");
    ZMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

ZMat ZMat::transposed() const {
    ZMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool ZMat::operator<(const ZMat& o) const {
    if (rows_ != o.rows_) return rows_ < o.rows_;
    if (cols_ != o.cols_) return cols_ < o.cols_;
    for (size_t i = 0; i < a_.size(); ++i) {
        int c = cmp(a_[i], o.a_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

bool ZMat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string ZMat::str() const {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

ZMat vstack(const ZMat& a, const ZMat& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    ZMat r(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) r.at(a.rows() + i, j) = b.at(i, j);
    return r;
}

ZMat rows_to_mat(const std::vector<ZVec>& rows, int cols) {
    ZMat r(int(rows.size()), cols);
    for (int i = 0; i < int(rows.size()); ++i) r.set_row(i, rows[i]);
    return r;
}

FMat::FMat(int rows, int cols, long long p) : rows_(rows), cols_(cols), p_(p) {
    a_.assign(size_t(rows) * cols, FieldElem::zero(p));
}

FMat FMat::from_integer(const ZMat& m, long long p) {
    FMat r(m.rows(), m.cols(), p);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.at(i, j) = FieldElem::from_integer(m.at(i, j), p);
    return r;
}

FMat FMat::from_rows(const std::vector<FVec>& rows, int cols, long long p) {
    FMat r(int(rows.size()), cols, p);
    for (int i = 0; i < int(rows.size()); ++i) {
        if (int(rows[i].size()) != cols) throw std::invalid_argument("FMat: row size mismatch");
        for (int j = 0; j < cols; ++j) {
            if (rows[i][j].characteristic() != p)
                throw std::invalid_argument("FMat: mixed characteristics");
            r.at(i, j) = rows[i][j];
        }
    }
    return r;
}

FVec FMat::row(int i) const {
    return FVec(a_.begin() + size_t(i) * cols_, a_.begin() + size_t(i + 1) * cols_);
}

RrefResult rref(const FMat& m) {
    RrefResult res;
    res.reduced = m;
    FMat& a = res.reduced;
    int r = 0;
    for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
        int piv = -1;
        for (int i = r; i < a.rows(); ++i)
            if (!a.at(i, c).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(r, j));
        FieldElem inv = a.at(r, c).inverse();
        for (int j = c; j < a.cols(); ++j) a.at(r, j) = a.at(r, j) * inv;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == r || a.at(i, c).is_zero()) continue;
            FieldElem f = a.at(i, c);
            for (int j = c; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(r, j);
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::vector<FVec> kernel_basis(const FMat& m) {
    RrefResult rr = rref(m);
    long long p = m.characteristic();
    int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;

    std::vector<FVec> basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        FVec v(n, FieldElem::zero(p));
        v[c] = FieldElem::one(p);
        for (int i = 0; i < rr.rank; ++i)
            v[rr.pivot_cols[i]] = -rr.reduced.at(i, c);
        basis.push_back(std::move(v));
    }
    if (basis.empty()) return basis;

    RrefResult canon = rref(FMat::from_rows(basis, n, p));
    std::vector<FVec> out;
    for (int i = 0; i < canon.rank; ++i) out.push_back(canon.reduced.row(i));
    return out;
}

int rank_of(const FMat& m) { return rref(m).rank; }

int rank_over_q(const ZMat& m) { return rank_of(FMat::from_integer(m, 0)); }

int rank_mod_p(const ZMat& m, long long p) { return rank_of(FMat::from_integer(m, p)); }

mpq_class det_over_q(const ZMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    int n = m.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = mpq_class(m.at(i, j));
    mpq_class det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != c) { std::swap(a[piv], a[c]); det = -det; }
        det *= a[c][c];
        mpq_class inv = 1 / a[c][c];
        for (int i = c + 1; i < n; ++i) {
            if (a[i][c] == 0) continue;
            mpq_class f = a[i][c] * inv;
            for (int j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return det;
}

HermiteResult hermite_normal_form(const ZMat& m) {
    HermiteResult res;
    res.h = m;
    res.u = ZMat::identity(m.rows());
    ZMat& h = res.h;
    ZMat& u = res.u;
    int nrows = m.rows(), ncols = m.cols();

    auto row_sub = [&](int dst, int src, const mpz_class& q) {
        if (q == 0) return;
        for (int j = 0; j < ncols; ++j) h.at(dst, j) -= q * h.at(src, j);
        for (int j = 0; j < nrows; ++j) u.at(dst, j) -= q * u.at(src, j);
    };
    auto row_swap = [&](int a, int b) {
        if (a == b) return;
        for (int j = 0; j < ncols; ++j) std::swap(h.at(a, j), h.at(b, j));
        for (int j = 0; j < nrows; ++j) std::swap(u.at(a, j), u.at(b, j));
    };
    auto row_negate = [&](int i) {
        for (int j = 0; j < ncols; ++j) h.at(i, j) = -h.at(i, j);
        for (int j = 0; j < nrows; ++j) u.at(i, j) = -u.at(i, j);
    };

    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        while (true) {
            // smallest nonzero |entry| in this column at or below r
            int piv = -1;
            mpz_class best;
            for (int i = r; i < nrows; ++i) {
                if (h.at(i, c) == 0) continue;
                mpz_class v = abs(h.at(i, c));
                if (piv < 0 || v < best) { piv = i; best = v; }
            }
            if (piv < 0) break;
            row_swap(r, piv);
            bool clean = true;
            for (int i = r + 1; i < nrows; ++i) {
                if (h.at(i, c) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
                row_sub(i, r, q);
                if (h.at(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h.at(r, c) == 0) continue;
        if (h.at(r, c) < 0) row_negate(r);
        for (int i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h.at(i, c).get_mpz_t(), h.at(r, c).get_mpz_t());
            row_sub(i, r, q);
        }
        ++r;
    }
    res.rank = r;
    return res;
}

ZMat int_kernel(const ZMat& m) {
    int n = m.cols();
    if (m.rows() == 0) return ZMat::identity(n);
    HermiteResult hr = hermite_normal_form(m.transposed());
    // rows of u mapped to zero rows of h form a basis of the kernel
    std::vector<ZVec> rows;
    for (int i = hr.rank; i < n; ++i) rows.push_back(hr.u.row(i));
    if (rows.empty()) return ZMat(0, n);
    return hermite_normal_form(rows_to_mat(rows, n)).h;
}

ZMat saturate_span(const ZMat& rows) {
    return int_kernel(int_kernel(rows));
}

ZMat saturate(const ZMat& rows) {
    if (rows.rows() > 0 && rank_over_q(rows) != rows.rows())
        throw std::invalid_argument("saturate: rows are dependent over Q");
    return saturate_span(rows);
}

std::vector<mpz_class> det_one_minus_t(const ZMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det_one_minus_t: not square");
    int n = m.rows();
    // Faddeev-LeVerrier: char poly det(tI - M) = t^n + c[1] t^{n-1} + ... + c[n]
    std::vector<mpq_class> c(n + 1);
    c[0] = 1;
    std::vector<std::vector<mpq_class>> mq(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mq[i][j] = mpq_class(m.at(i, j));
    std::vector<std::vector<mpq_class>> mk(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; ++i) mk[i][i] = 1;  // M_0 = I
    for (int k = 1; k <= n; ++k) {
        // M_k = M * (M_{k-1} + c_{k-1} I)   with the previous c folded in below
        std::vector<std::vector<mpq_class>> next(n, std::vector<mpq_class>(n));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (mq[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) next[i][j] += mq[i][l] * mk[l][j];
            }
        mpq_class tr = 0;
        for (int i = 0; i < n; ++i) tr += next[i][i];
        c[k] = -tr / k;
        for (int i = 0; i < n; ++i) next[i][i] += c[k];
        mk = std::move(next);
    }
    // det(I - tM) = sum_k c[k] t^k  (coefficient reversal of det(tI - M))
    std::vector<mpz_class> out(n + 1);
    for (int k = 0; k <= n; ++k) {
        if (c[k].get_den() != 1)
            throw std::logic_error("det_one_minus_t: non-integer coefficient");
        out[k] = c[k].get_num();
    }
    return out;
}

FVec to_field_vec(const ZVec& v, long long p) {
    FVec r;
    r.reserve(v.size());
    for (const auto& z : v) r.push_back(FieldElem::from_integer(z, p));
    return r;
}

bool is_zero_vec(const ZVec& v) {
    for (const auto& z : v)
        if (z != 0) return false;
    return true;
}

bool is_zero_vec(const FVec& v) {
    for (const auto& e : v)
        if (!e.is_zero()) return false;
    return true;
}

}  // namespace nucleus
