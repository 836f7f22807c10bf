#pragma once

// Sparse exact multivariate polynomials with per-variable weights.  Every
// form in this toolkit has at most a handful of terms, so terms live in an
// ordered map keyed by exponent vector; map order doubles as the canonical
// printing order.

#include "dp2cert/quadext.hpp"
#include "dp2cert/rational.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp2 {

inline bool coeff_is_zero(const Rational& c) { return c == 0; }
template <long long D>
bool coeff_is_zero(const QuadExt<D>& c) { return c.is_zero(); }
template <long long D>
bool coeff_is_zero(const Tower<D>& c) { return c.is_zero(); }

template <class C>
class WeightedForm {
 public:
  using Monomial = std::vector<unsigned>;
  // Descending lexicographic order puts the leading variable's powers first,
  // e.g. "w^2 + x^4 + ..." for the surface form.
  using TermMap  = std::map<Monomial, C, std::greater<Monomial>>;

  WeightedForm() = default;
  WeightedForm(std::vector<std::string> vars, std::vector<int> weights)
      : vars_(std::move(vars)), weights_(std::move(weights)) {
    if (vars_.size() != weights_.size())
      throw std::invalid_argument("WeightedForm: vars/weights length mismatch");
    for (int w : weights_)
      if (w <= 0) throw std::invalid_argument("WeightedForm: weights must be positive");
  }

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t num_vars() const { return vars_.size(); }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool same_context(const WeightedForm& o) const {
    return vars_ == o.vars_ && weights_ == o.weights_;
  }

  void add_term(const Monomial& m, const C& c) {
    if (m.size() != vars_.size())
      throw std::invalid_argument("WeightedForm: exponent vector length mismatch");
    if (coeff_is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second = it->second + c;
      if (coeff_is_zero(it->second)) terms_.erase(it);
    }
  }

  static WeightedForm constant(const std::vector<std::string>& vars,
                               const std::vector<int>& weights, const C& c) {
    WeightedForm f(vars, weights);
    f.add_term(Monomial(vars.size(), 0), c);
    return f;
  }

  static WeightedForm variable(const std::vector<std::string>& vars,
                               const std::vector<int>& weights, std::size_t index) {
    WeightedForm f(vars, weights);
    Monomial m(vars.size(), 0);
    m.at(index) = 1;
    f.add_term(m, C(1));
    return f;
  }

  friend WeightedForm operator+(const WeightedForm& f, const WeightedForm& g) {
    f.require_same_context(g);
    WeightedForm r = f;
    for (const auto& [m, c] : g.terms_) r.add_term(m, c);
    return r;
  }
  friend WeightedForm operator-(const WeightedForm& f, const WeightedForm& g) {
    f.require_same_context(g);
    WeightedForm r = f;
    for (const auto& [m, c] : g.terms_) r.add_term(m, -c);
    return r;
  }
  friend WeightedForm operator-(const WeightedForm& f) {
    WeightedForm r(f.vars_, f.weights_);
    for (const auto& [m, c] : f.terms_) r.terms_.emplace(m, -c);
    return r;
  }
  friend WeightedForm operator*(const WeightedForm& f, const WeightedForm& g) {
    f.require_same_context(g);
    WeightedForm r(f.vars_, f.weights_);
    for (const auto& [mf, cf] : f.terms_) {
      for (const auto& [mg, cg] : g.terms_) {
        Monomial m(mf.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = mf[i] + mg[i];
        r.add_term(m, cf * cg);
      }
    }
    return r;
  }

  WeightedForm scaled(const C& c) const {
    WeightedForm r(vars_, weights_);
    if (coeff_is_zero(c)) return r;
    for (const auto& [m, cf] : terms_) r.add_term(m, cf * c);
    return r;
  }

  WeightedForm pow(unsigned e) const {
    WeightedForm r = constant(vars_, weights_, C(1));
    for (unsigned i = 0; i < e; ++i) r = r * (*this);
    return r;
  }

  friend bool operator==(const WeightedForm& f, const WeightedForm& g) {
    return f.vars_ == g.vars_ && f.weights_ == g.weights_ && f.terms_ == g.terms_;
  }
  friend bool operator!=(const WeightedForm& f, const WeightedForm& g) { return !(f == g); }

  // Exact value at a point; the point supplies one coefficient per variable.
  C eval(const std::vector<C>& point) const {
    if (point.size() != vars_.size())
      throw std::invalid_argument("eval: dimension mismatch");
    C acc(0);
    for (const auto& [m, c] : terms_) {
      C t = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }

  // Formal partial derivative with respect to variable `index`.
  WeightedForm partial(std::size_t index) const {
    if (index >= vars_.size()) throw std::invalid_argument("partial: bad variable index");
    WeightedForm r(vars_, weights_);
    for (const auto& [m, c] : terms_) {
      if (m[index] == 0) continue;
      Monomial dm = m;
      dm[index] -= 1;
      r.add_term(dm, c * C(static_cast<long long>(m[index])));
    }
    return r;
  }

  // Substitute every variable by a form over a common (possibly different)
  // context; the result lives in the assignments' context.
  WeightedForm substitute(const std::vector<WeightedForm>& assignments) const {
    if (assignments.size() != vars_.size())
      throw std::invalid_argument("substitute: dimension mismatch");
    for (std::size_t i = 1; i < assignments.size(); ++i)
      if (!assignments[0].same_context(assignments[i]))
        throw std::invalid_argument("substitute: assignments disagree on context");
    WeightedForm r(assignments.empty() ? vars_ : assignments[0].vars_,
                   assignments.empty() ? weights_ : assignments[0].weights_);
    for (const auto& [m, c] : terms_) {
      WeightedForm t = constant(r.vars_, r.weights_, c);
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) t = t * assignments[i];
      r = r + t;
    }
    return r;
  }

  long weighted_term_degree(const Monomial& m) const {
    long d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(weights_[i]) * m[i];
    return d;
  }

  // Degree if every term has the same weighted degree; nullopt for the zero
  // form and for inhomogeneous forms.
  std::optional<long> weighted_homogeneous_degree() const {
    std::optional<long> deg;
    for (const auto& [m, c] : terms_) {
      long d = weighted_term_degree(m);
      if (!deg) deg = d;
      else if (*deg != d) return std::nullopt;
    }
    return deg;
  }

  bool has_integer_coefficients() const
    requires std::same_as<C, Rational>
  {
    for (const auto& [m, c] : terms_)
      if (!is_integer(c)) return false;
    return true;
  }

 private:
  void require_same_context(const WeightedForm& o) const {
    if (!same_context(o)) throw std::invalid_argument("WeightedForm: context mismatch");
  }

  std::vector<std::string> vars_;
  std::vector<int> weights_;
  TermMap terms_;
};

// Promote a form along Rational -> QuadExt<D> -> Tower<D>.
template <class To, class From>
WeightedForm<To> convert_form(const WeightedForm<From>& f) {
  WeightedForm<To> r(f.vars(), f.weights());
  for (const auto& [m, c] : f.terms()) r.add_term(m, To(c));
  return r;
}

}  // namespace dp2
