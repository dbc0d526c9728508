#include "nucleus/poly.hpp"

#include <sstream>

namespace nucleus {

Poly::Poly(int nvars, long long p, std::vector<int> weights)
    : nvars_(nvars), p_(p), weights_(std::move(weights)) {
    if (weights_.empty()) weights_.assign(nvars_, 1);
    if (int(weights_.size()) != nvars_)
        throw std::invalid_argument("Poly: weight list size mismatch");
}

Poly Poly::zero(int nvars, long long p, std::vector<int> weights) {
    return Poly(nvars, p, std::move(weights));
}

Poly Poly::monomial(const Exponents& e, const FieldElem& c, std::vector<int> weights) {
    Poly f(int(e.size()), c.characteristic(), std::move(weights));
    f.add_term(e, c);
    return f;
}

Poly Poly::variable(int nvars, int index, long long p, std::vector<int> weights) {
    Exponents e(nvars, 0);
    e[index] = 1;
    Poly f(nvars, p, std::move(weights));
    f.add_term(e, FieldElem::one(p));
    return f;
}

Poly Poly::constant(int nvars, const FieldElem& c) {
    Poly f(nvars, c.characteristic());
    f.add_term(Exponents(nvars, 0), c);
    return f;
}

int Poly::weight() const {
    if (is_zero()) throw std::logic_error("Poly: weight of the zero polynomial is undefined");
    return weight_of(terms_.begin()->first);
}

int Poly::weight_of(const Exponents& e) const {
    int w = 0;
    for (int i = 0; i < nvars_; ++i) w += e[i] * weights_[i];
    return w;
}

void Poly::add_term(const Exponents& e, const FieldElem& c) {
    if (int(e.size()) != nvars_) throw std::invalid_argument("Poly: exponent size mismatch");
    if (c.characteristic() != p_) throw std::invalid_argument("Poly: mixed characteristics");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("Poly: negative exponent");
    if (c.is_zero()) return;
    if (!terms_.empty() && weight_of(e) != weight())
        throw std::invalid_argument("Poly: term breaks weight homogeneity");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        FieldElem s = it->second + c;
        if (s.is_zero())
            terms_.erase(it);
        else
            it->second = s;
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (nvars_ != o.nvars_ || p_ != o.p_ || weights_ != o.weights_)
        throw std::invalid_argument("Poly: incompatible rings");
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
    Poly r(nvars_, p_, weights_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Poly Poly::scaled(const FieldElem& c) const {
    Poly r(nvars_, p_, weights_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(nvars_, p_, weights_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exponents e(nvars_);
            for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return nvars_ == o.nvars_ && p_ == o.p_ && weights_ == o.weights_ && terms_ == o.terms_;
}

Poly Poly::derivative(int var) const {
    Poly r(nvars_, p_, weights_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        r.add_term(d, c * FieldElem::from_integer(e[var], p_));
    }
    return r;
}

FieldElem Poly::evaluate(const FVec& point) const {
    if (int(point.size()) != nvars_) throw std::invalid_argument("Poly: point size mismatch");
    FieldElem acc = FieldElem::zero(p_);
    for (const auto& [e, c] : terms_) {
        FieldElem t = c;
        for (int i = 0; i < nvars_; ++i)
            if (e[i] > 0) t = t * point[i].pow(e[i]);
        acc = acc + t;
    }
    return acc;
}

Poly Poly::substitute_linear(const ZMat& a) const {
    if (a.rows() != nvars_ || a.cols() != nvars_)
        throw std::invalid_argument("Poly: substitution matrix shape mismatch");
    std::vector<Poly> images;
    images.reserve(nvars_);
    for (int i = 0; i < nvars_; ++i) {
        Poly li(nvars_, p_, weights_);
        for (int j = 0; j < nvars_; ++j) {
            Exponents e(nvars_, 0);
            e[j] = 1;
            li.add_term(e, FieldElem::from_integer(a.at(i, j), p_));
        }
        images.push_back(std::move(li));
    }
    return substitute(images);
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (int(images.size()) != nvars_)
        throw std::invalid_argument("Poly: wrong number of substitution images");
    if (is_zero()) {
        if (images.empty()) return Poly(0, p_);
        return Poly::zero(images[0].nvars(), p_, images[0].weights());
    }
    const Poly& model = images[0];
    Poly acc = Poly::zero(model.nvars(), p_, model.weights());
    for (const auto& [e, c] : terms_) {
        Poly t(model.nvars(), p_, model.weights());
        t.add_term(Exponents(model.nvars(), 0), c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t = t * images[i];
        acc = acc + t;
    }
    return acc;
}

std::string Poly::str(const std::string& var_prefix) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << " + ";
        first = false;
        bool printed = false;
        if (!c.is_one()) {
            os << c.str();
            printed = true;
        }
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << var_prefix << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << "1";
    }
    return os.str();
}

namespace {
void enumerate_rec(const std::vector<int>& weights, int idx, int remaining, Exponents& cur,
                   std::vector<Exponents>& out) {
    if (idx == int(weights.size())) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    int maxe = remaining / weights[idx];
    for (int e = 0; e <= maxe; ++e) {
        cur[idx] = e;
        enumerate_rec(weights, idx + 1, remaining - e * weights[idx], cur, out);
    }
    cur[idx] = 0;
}
}  // namespace

std::vector<Exponents> monomials_of_weight(const std::vector<int>& weights, int w) {
    std::vector<Exponents> out;
    Exponents cur(weights.size(), 0);
    if (w < 0) return out;
    enumerate_rec(weights, 0, w, cur, out);
    // recursion emits ascending lexicographic order already
    return out;
}

FVec coefficient_vector(const Poly& f, const std::vector<Exponents>& basis) {
    FVec v(basis.size(), FieldElem::zero(f.characteristic()));
    size_t found = 0;
    for (size_t i = 0; i < basis.size(); ++i) {
        auto it = f.terms().find(basis[i]);
        if (it != f.terms().end()) {
            v[i] = it->second;
            ++found;
        }
    }
    if (found != f.terms().size())
        throw std::logic_error("coefficient_vector: polynomial has terms outside the basis");
    return v;
}

Poly poly_from_coefficients(const FVec& coeffs, const std::vector<Exponents>& basis,
                            int nvars, long long p, const std::vector<int>& weights) {
    if (coeffs.size() != basis.size())
        throw std::invalid_argument("poly_from_coefficients: size mismatch");
    Poly f(nvars, p, weights);
    for (size_t i = 0; i < basis.size(); ++i)
        if (!coeffs[i].is_zero()) f.add_term(basis[i], coeffs[i]);
    return f;
}

}  // namespace nucleus
