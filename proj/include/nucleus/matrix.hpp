#pragma once

#include <initializer_list>
#include <vector>

#include "nucleus/field.hpp"

namespace nucleus {

using ZVec = std::vector<mpz_class>;
using FVec = std::vector<FieldElem>;

// Dense matrix over Z with arbitrary-precision entries.
class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols, 0) {}
    ZMat(std::initializer_list<std::initializer_list<long>> rows);

    static ZMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

    ZVec row(int i) const;
    void set_row(int i, const ZVec& v);

    ZMat operator*(const ZMat& o) const;
    ZVec operator*(const ZVec& v) const;
    ZMat operator-(const ZMat& o) const;
    ZMat transposed() const;
    bool operator==(const ZMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
    bool operator!=(const ZMat& o) const { return !(*this == o); }
    bool operator<(const ZMat& o) const;  // lexicographic, for use as map key
    bool is_identity() const;

    std::string str() const;

private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

ZMat vstack(const ZMat& a, const ZMat& b);
ZMat rows_to_mat(const std::vector<ZVec>& rows, int cols);

// Dense matrix over the coefficient field.  All entries share one
// characteristic, enforced on construction.
class FMat {
public:
    FMat() : rows_(0), cols_(0), p_(0) {}
    FMat(int rows, int cols, long long p);

    static FMat from_integer(const ZMat& m, long long p);
    static FMat from_rows(const std::vector<FVec>& rows, int cols, long long p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    long long characteristic() const { return p_; }
    FieldElem& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
    const FieldElem& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }
    FVec row(int i) const;

private:
    int rows_, cols_;
    long long p_;
    std::vector<FieldElem> a_;
};

struct RrefResult {
    int rank = 0;
    std::vector<int> pivot_cols;
    FMat reduced;
};

// Reduced row echelon form.  Pivot selection is the first nonzero entry in
// column order, so equal inputs produce identical outputs.
RrefResult rref(const FMat& m);

// Canonical basis of {x : m x = 0}: the standard free-column basis, then
// row-reduced so the stacked basis is itself in RREF.
std::vector<FVec> kernel_basis(const FMat& m);

int rank_of(const FMat& m);
int rank_over_q(const ZMat& m);
int rank_mod_p(const ZMat& m, long long p);

mpq_class det_over_q(const ZMat& m);

struct HermiteResult {
    ZMat h;  // row Hermite form: echelon, positive pivots, entries above reduced
    ZMat u;  // unimodular, u * m = h
    int rank = 0;
};

HermiteResult hermite_normal_form(const ZMat& m);

// Basis (as rows, Hermite-canonical) of the integer kernel {x in Z^n : m x = 0}.
// Integer kernels are saturated by construction.
ZMat int_kernel(const ZMat& m);

// Saturation of the row span: basis of span_Q(rows) ∩ Z^n in canonical form.
// Accepts dependent rows (works on the span).
ZMat saturate_span(const ZMat& rows);

// Spec-facing saturation: requires the rows to be independent over Q.
ZMat saturate(const ZMat& rows);

// Coefficients c_0..c_n of det(I - t*m) for square m (exact, via the
// characteristic polynomial).
std::vector<mpz_class> det_one_minus_t(const ZMat& m);

FVec to_field_vec(const ZVec& v, long long p);
bool is_zero_vec(const ZVec& v);
bool is_zero_vec(const FVec& v);

}  // namespace nucleus
