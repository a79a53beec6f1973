#include "nf/poly.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nf {

Monomial::Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    if (exps_.empty() || exps_.size() % 2 != 0)
        throw std::invalid_argument("monomial needs a positive even variable count");
    for (int e : exps_)
        if (e < 0) throw std::invalid_argument("negative exponent");
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(static_cast<size_t>(nvars), 0)); }

int Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

Monomial Monomial::times(const Monomial& o) const {
    std::vector<int> e(exps_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += o.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lowered(int var) const {
    std::vector<int> e(exps_);
    e[static_cast<size_t>(var)] -= 1;
    return Monomial(std::move(e));
}

bool Monomial::operator<(const Monomial& o) const {
    int da = degree(), db = o.degree();
    if (da != db) return da < db;
    // Lexicographic tie-break in the interleaved order q1, p1, q2, p2, ...
    const size_t n = exps_.size() / 2;
    for (size_t j = 0; j < exps_.size(); ++j) {
        size_t idx = (j % 2 == 0) ? j / 2 : n + j / 2;
        if (exps_[idx] != o.exps_[idx]) return exps_[idx] < o.exps_[idx];
    }
    return false;
}

Poly::Poly(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("dimension must be positive");
}

Poly Poly::constant(int n, GaussRational c) {
    Poly f(n);
    if (!c.is_zero()) f.terms_.emplace(Monomial::one(2 * n), std::move(c));
    return f;
}

Poly Poly::variable(int n, int var) {
    if (var < 0 || var >= 2 * n) throw std::invalid_argument("variable index out of range");
    std::vector<int> e(static_cast<size_t>(2 * n), 0);
    e[static_cast<size_t>(var)] = 1;
    Poly f(n);
    f.terms_.emplace(Monomial(std::move(e)), GaussRational(1));
    return f;
}

void Poly::check_same_space(const Poly& o) const {
    if (n_ != o.n_) throw std::invalid_argument("polynomial dimension mismatch");
}

bool Poly::is_real() const {
    for (const auto& [m, c] : terms_)
        if (c.im != 0) return false;
    return true;
}

int Poly::degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Poly::add_term(const Monomial& m, const GaussRational& c) {
    if (m.nvars() != 2 * n_) throw std::invalid_argument("monomial size mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(n_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    check_same_space(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    check_same_space(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.check_same_space(b);
    Poly r(a.n_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
}

Poly Poly::scaled(const GaussRational& c) const {
    Poly r(n_);
    if (c.is_zero()) return r;
    for (const auto& [m, cf] : terms_) r.terms_.emplace(m, cf * c);
    return r;
}

Poly Poly::divided(const Rational& c) const {
    if (c == 0) throw std::invalid_argument("division by zero");
    Rational inv = Rational(1) / c;
    return scaled(GaussRational(inv));
}

Poly Poly::partial(int var) const {
    if (var < 0 || var >= 2 * n_) throw std::invalid_argument("variable index out of range");
    Poly r(n_);
    for (const auto& [m, c] : terms_) {
        int e = m.exp(var);
        if (e == 0) continue;
        r.add_term(m.lowered(var), c * GaussRational(e));
    }
    return r;
}

Poly Poly::homogeneous_part(int deg) const {
    Poly r(n_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == deg) r.terms_.emplace(m, c);
    return r;
}

std::vector<int> Poly::degrees_present() const {
    std::set<int> ds;
    for (const auto& [m, c] : terms_) ds.insert(m.degree());
    return {ds.begin(), ds.end()};
}

GaussRational Poly::eval_exact(std::span<const Rational> point) const {
    if (point.size() != static_cast<size_t>(2 * n_))
        throw std::invalid_argument("evaluation point has wrong length");
    GaussRational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational v(1);
        for (int var = 0; var < 2 * n_; ++var)
            for (int k = 0; k < m.exp(var); ++k) v *= point[static_cast<size_t>(var)];
        acc += c * GaussRational(v);
    }
    return acc;
}

Rational Poly::eval_rational(std::span<const Rational> point) const {
    if (!is_real()) throw std::invalid_argument("non-real polynomial evaluated in real mode");
    return eval_exact(point).re;
}

double Poly::eval_double(std::span<const double> point) const {
    if (!is_real()) throw std::invalid_argument("non-real polynomial evaluated in real mode");
    if (point.size() != static_cast<size_t>(2 * n_))
        throw std::invalid_argument("evaluation point has wrong length");
    double acc = 0.0;
    for (const auto& [m, c] : terms_) {
        double v = 1.0;
        for (int var = 0; var < 2 * n_; ++var)
            for (int k = 0; k < m.exp(var); ++k) v *= point[static_cast<size_t>(var)];
        acc += to_double(c.re) * v;
    }
    return acc;
}

namespace {

std::string monomial_text(const Monomial& m, const std::vector<std::string>& names) {
    std::string out;
    const int n = m.nvars() / 2;
    // Print in the interleaved display order q1, p1, q2, p2, ...
    for (int j = 0; j < 2 * n; ++j) {
        int idx = (j % 2 == 0) ? j / 2 : n + j / 2;
        int e = m.exp(idx);
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += names[static_cast<size_t>(idx)];
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out;
}

std::string poly_text(const Poly::TermMap& terms, const std::vector<std::string>& names) {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        std::string mono = monomial_text(m, names);
        bool negative = c.im == 0 && c.re < 0;
        GaussRational shown = negative ? -c : c;
        std::string coeff = to_string(shown);
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (mono.empty())
            out += coeff;
        else if (coeff == "1")
            out += mono;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

std::vector<std::string> qp_names(int n) {
    std::vector<std::string> names;
    for (int j = 1; j <= n; ++j) names.push_back("q" + std::to_string(j));
    for (int j = 1; j <= n; ++j) names.push_back("p" + std::to_string(j));
    return names;
}

std::vector<std::string> z_names(int n) {
    std::vector<std::string> names;
    for (int j = 1; j <= n; ++j) names.push_back("z" + std::to_string(j));
    for (int j = 1; j <= n; ++j) names.push_back("zb" + std::to_string(j));
    return names;
}

}  // namespace

std::string Poly::to_string() const { return poly_text(terms_, qp_names(n_)); }

std::string ComplexBasisPoly::to_string() const { return poly_text(terms_, z_names(n_)); }

namespace detail {

Poly substitute_linear(const Poly& f, const std::vector<Poly>& images) {
    if (images.size() != static_cast<size_t>(2 * f.n()))
        throw std::invalid_argument("one image per variable required");
    const int target_n = images.front().n();
    // Memoized powers of each image.
    std::vector<std::vector<Poly>> pows(images.size(), std::vector<Poly>{Poly::constant(target_n, GaussRational(1))});
    auto power = [&](size_t var, int e) -> const Poly& {
        auto& cache = pows[var];
        while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * images[var]);
        return cache[static_cast<size_t>(e)];
    };
    Poly out(target_n);
    for (const auto& [m, c] : f.terms()) {
        Poly term = Poly::constant(target_n, c);
        for (int var = 0; var < 2 * f.n(); ++var) {
            int e = m.exp(var);
            if (e > 0) term = term * power(static_cast<size_t>(var), e);
        }
        out += term;
    }
    return out;
}

}  // namespace detail

ComplexBasisPoly to_complex_basis(const Poly& f) {
    const int n = f.n();
    // q_j = (z_j + zb_j)/2, p_j = (z_j - zb_j)/(2i) = -i/2 z_j + i/2 zb_j.
    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(2 * n));
    const GaussRational half(Rational(1, 2));
    const GaussRational half_i = gauss_i() * half;
    for (int j = 0; j < n; ++j)
        images.push_back(Poly::q(n, j).scaled(half) + Poly::p(n, j).scaled(half));
    for (int j = 0; j < n; ++j)
        images.push_back(Poly::q(n, j).scaled(-half_i) + Poly::p(n, j).scaled(half_i));
    Poly g = detail::substitute_linear(f, images);
    return ComplexBasisPoly(n, g.terms());
}

Poly from_complex_basis(const ComplexBasisPoly& F) {
    const int n = F.n();
    // z_j = q_j + i p_j, zb_j = q_j - i p_j.
    std::vector<Poly> images;
    images.reserve(static_cast<size_t>(2 * n));
    for (int j = 0; j < n; ++j) images.push_back(Poly::q(n, j) + Poly::p(n, j).scaled(gauss_i()));
    for (int j = 0; j < n; ++j) images.push_back(Poly::q(n, j) - Poly::p(n, j).scaled(gauss_i()));
    Poly f(n);
    for (const auto& [m, c] : F.terms()) f.add_term(m, c);
    return detail::substitute_linear(f, images);
}

}  // namespace nf
