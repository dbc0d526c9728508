#pragma once

#include <map>
#include <vector>

#include "nucleus/matrix.hpp"

namespace nucleus {

using Exponents = std::vector<int>;

// Weight-homogeneous multivariate polynomial over Q or F_p.  Terms map
// exponent vectors to nonzero coefficients; every stored term has the same
// weight sum(e_i * weight_i).  The zero polynomial is the empty term map.
//
// Weights are in half-codegree units: a variable of weight w sits in
// cohomological codegree 2w.
class Poly {
public:
    Poly() : nvars_(0), p_(0) {}
    Poly(int nvars, long long p, std::vector<int> weights = {});

    static Poly zero(int nvars, long long p, std::vector<int> weights = {});
    static Poly monomial(const Exponents& e, const FieldElem& c, std::vector<int> weights = {});
    static Poly variable(int nvars, int index, long long p, std::vector<int> weights = {});
    static Poly constant(int nvars, const FieldElem& c);

    int nvars() const { return nvars_; }
    long long characteristic() const { return p_; }
    const std::vector<int>& weights() const { return weights_; }
    const std::map<Exponents, FieldElem>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // weight of the zero polynomial is undefined
    int weight() const;
    int weight_of(const Exponents& e) const;

    void add_term(const Exponents& e, const FieldElem& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    Poly scaled(const FieldElem& c) const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly derivative(int var) const;
    FieldElem evaluate(const FVec& point) const;

    // f(Ax): substitute x_i -> sum_j A[i][j] x_j (A over Z, reduced to the
    // coefficient field).  The linear action used for the group.
    Poly substitute_linear(const ZMat& a) const;

    // Substitute each variable by a polynomial of another ring; images must
    // share variable count, characteristic and weights.
    Poly substitute(const std::vector<Poly>& images) const;

    std::string str(const std::string& var_prefix = "x") const;

private:
    int nvars_;
    long long p_;
    std::vector<int> weights_;  // per-variable; empty means all 1
    std::map<Exponents, FieldElem> terms_;

    void check_compatible(const Poly& o) const;
};

// All exponent vectors e with sum(e_i * weights_i) == w, ascending
// lexicographic order.  The canonical monomial basis ordering everywhere.
std::vector<Exponents> monomials_of_weight(const std::vector<int>& weights, int w);

// Coefficient vector of a weight-homogeneous polynomial with respect to
// monomials_of_weight(weights, w).
FVec coefficient_vector(const Poly& f, const std::vector<Exponents>& basis);

Poly poly_from_coefficients(const FVec& coeffs, const std::vector<Exponents>& basis,
                            int nvars, long long p, const std::vector<int>& weights);

}  // namespace nucleus
