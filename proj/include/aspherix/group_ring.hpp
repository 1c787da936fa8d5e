#pragma once

#include "aspherix/dense_matrix.hpp"
#include "aspherix/errors.hpp"
#include "aspherix/group_model.hpp"
#include "aspherix/scalar.hpp"

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

namespace aspherix {

/// Finite formal sum  sum_g m_g g  in S[G]. Only nonzero coefficients are stored.
template <Scalar S>
class GroupRingElement {
 public:
  using scalar_type = S;
  using term_map = std::map<GroupElement, S>;

  explicit GroupRingElement(GroupModel model) : model_(std::move(model)) {}

  static GroupRingElement zero(GroupModel const& model) { return GroupRingElement(model); }
  static GroupRingElement one(GroupModel const& model) { return monomial(model, model.identity(), S(1)); }
  static GroupRingElement monomial(GroupModel const& model, GroupElement const& g, S const& c = S(1)) {
    GroupRingElement x(model);
    x.add_term(g, c);
    return x;
  }
  static GroupRingElement constant(GroupModel const& model, S const& c) { return monomial(model, model.identity(), c); }

  [[nodiscard]] GroupModel const& model() const noexcept { return model_; }
  [[nodiscard]] term_map const& terms() const noexcept { return terms_; }
  [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

  [[nodiscard]] S coefficient(GroupElement const& g) const {
    auto it = terms_.find(g);
    return it == terms_.end() ? S(0) : it->second;
  }

  void add_term(GroupElement const& g, S const& c) {
    if (aspherix::is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
      it->second += c;
      if (aspherix::is_zero(it->second)) terms_.erase(it);
    }
  }

  GroupRingElement& operator+=(GroupRingElement const& o) {
    require_same_model(o);
    for (auto const& [g, c] : o.terms_) add_term(g, c);
    return *this;
  }
  GroupRingElement& operator-=(GroupRingElement const& o) {
    require_same_model(o);
    for (auto const& [g, c] : o.terms_) add_term(g, -c);
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement a, GroupRingElement const& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, GroupRingElement const& b) { return a -= b; }
  friend GroupRingElement operator-(GroupRingElement const& a) {
    GroupRingElement out(a.model_);
    for (auto const& [g, c] : a.terms_) out.terms_.emplace(g, -c);
    return out;
  }

  // Convolution through the model's normal form.
  friend GroupRingElement operator*(GroupRingElement const& a, GroupRingElement const& b) {
    a.require_same_model(b);
    GroupRingElement out(a.model_);
    for (auto const& [g, c] : a.terms_)
      for (auto const& [h, d] : b.terms_) out.add_term(a.model_.multiply(g, h), c * d);
    return out;
  }

  friend GroupRingElement operator*(S const& s, GroupRingElement const& a) {
    GroupRingElement out(a.model_);
    if (aspherix::is_zero(s)) return out;
    for (auto const& [g, c] : a.terms_) out.add_term(g, s * c);
    return out;
  }

  friend bool operator==(GroupRingElement const& a, GroupRingElement const& b) {
    return a.model_ == b.model_ && a.terms_ == b.terms_;
  }

 private:
  void require_same_model(GroupRingElement const& o) const {
    if (!(model_ == o.model_))
      throw ModelMismatch("group ring elements over " + model_.describe() + " and " + o.model_.describe());
  }

  GroupModel model_;
  term_map terms_;
};

/// x* = sum conj(x_g) g^-1.
template <Scalar S>
GroupRingElement<S> involute(GroupRingElement<S> const& x) {
  GroupRingElement<S> out(x.model());
  for (auto const& [g, c] : x.terms()) out.add_term(x.model().inverse(g), conjugate(c));
  return out;
}

/// Augmentation: sum of all coefficients.
template <Scalar S>
S augment(GroupRingElement<S> const& x) {
  S sum(0);
  for (auto const& [g, c] : x.terms()) sum += c;
  return sum;
}

/// Pushes an element of S[F] forward along a homomorphism of groups.
template <Scalar S>
GroupRingElement<S> push_forward(GroupRingElement<S> const& x, FreeHomomorphism const& phi) {
  if (!(x.model() == phi.source())) throw ModelMismatch("element is not over the homomorphism's source");
  GroupRingElement<S> out(phi.target());
  for (auto const& [g, c] : x.terms()) out.add_term(phi(g), c);
  return out;
}

// ---------------------------------------------------------------------------

/// Dense matrix over S[G]; every entry shares the model.
template <Scalar S>
class GroupRingMatrix {
 public:
  using element_type = GroupRingElement<S>;

  GroupRingMatrix(GroupModel model, std::size_t rows, std::size_t cols)
      : model_(model), entries_(rows, cols, element_type(model)) {}

  static GroupRingMatrix zero(GroupModel const& model, std::size_t rows, std::size_t cols) {
    return GroupRingMatrix(model, rows, cols);
  }

  static GroupRingMatrix identity(GroupModel const& model, std::size_t n) {
    GroupRingMatrix m(model, n, n);
    for (std::size_t i = 0; i < n; ++i) m.entries_(i, i) = element_type::one(model);
    return m;
  }

  // g * Id_n
  static GroupRingMatrix scalar_diagonal(GroupModel const& model, std::size_t n, element_type const& x) {
    GroupRingMatrix m(model, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, x);
    return m;
  }

  // Lifts an ordinary scalar matrix to coefficients of the identity element.
  static GroupRingMatrix from_scalars(GroupModel const& model, DenseMatrix<S> const& a) {
    GroupRingMatrix m(model, a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) m.entries_(i, j) = element_type::constant(model, a(i, j));
    return m;
  }

  [[nodiscard]] GroupModel const& model() const noexcept { return model_; }
  [[nodiscard]] std::size_t rows() const noexcept { return entries_.rows(); }
  [[nodiscard]] std::size_t cols() const noexcept { return entries_.cols(); }
  [[nodiscard]] bool is_square() const noexcept { return rows() == cols(); }

  element_type const& operator()(std::size_t i, std::size_t j) const { return entries_.at(i, j); }

  void set(std::size_t i, std::size_t j, element_type x) {
    if (!(x.model() == model_)) throw ModelMismatch("entry model differs from matrix model");
    entries_.at(i, j) = std::move(x);
  }

  [[nodiscard]] bool is_zero() const {
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j)
        if (!entries_(i, j).is_zero()) return false;
    return true;
  }

  // Coefficient matrix m_g of the decomposition  x = sum_g m_g g.
  [[nodiscard]] DenseMatrix<S> coefficient_matrix(GroupElement const& g) const {
    DenseMatrix<S> m(rows(), cols(), S(0));
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) m(i, j) = entries_(i, j).coefficient(g);
    return m;
  }

  // Every group element carrying a nonzero coefficient somewhere.
  [[nodiscard]] std::vector<GroupElement> support() const {
    std::map<GroupElement, bool> seen;
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j)
        for (auto const& [g, c] : entries_(i, j).terms()) seen.emplace(g, true);
    std::vector<GroupElement> out;
    for (auto const& kv : seen) out.push_back(kv.first);
    return out;
  }

  friend GroupRingMatrix operator+(GroupRingMatrix a, GroupRingMatrix const& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.entries_(i, j) += b.entries_(i, j);
    return a;
  }

  friend GroupRingMatrix operator-(GroupRingMatrix a, GroupRingMatrix const& b) {
    a.require_same_shape(b);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.entries_(i, j) -= b.entries_(i, j);
    return a;
  }

  friend GroupRingMatrix operator*(GroupRingMatrix const& a, GroupRingMatrix const& b) {
    if (!(a.model_ == b.model_)) throw ModelMismatch("matrices over different group models");
    if (a.cols() != b.rows()) throw ShapeError("group ring matrix product shape mismatch");
    GroupRingMatrix c(a.model_, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < a.cols(); ++k) {
        auto const& aik = a.entries_(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          auto const& bkj = b.entries_(k, j);
          if (!bkj.is_zero()) c.entries_(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend GroupRingMatrix operator*(S const& s, GroupRingMatrix a) {
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) a.entries_(i, j) = s * a.entries_(i, j);
    return a;
  }

  friend bool operator==(GroupRingMatrix const& a, GroupRingMatrix const& b) {
    return a.model_ == b.model_ && a.entries_ == b.entries_;
  }

 private:
  void require_same_shape(GroupRingMatrix const& b) const {
    if (!(model_ == b.model_)) throw ModelMismatch("matrices over different group models");
    if (rows() != b.rows() || cols() != b.cols()) throw ShapeError("group ring matrix shape mismatch");
  }

  GroupModel model_;
  DenseMatrix<element_type> entries_;
};

/// Conjugate transpose with inverted group elements.
template <Scalar S>
GroupRingMatrix<S> involute(GroupRingMatrix<S> const& x) {
  GroupRingMatrix<S> out(x.model(), x.cols(), x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out.set(j, i, involute(x(i, j)));
  return out;
}

template <Scalar S>
DenseMatrix<S> augment(GroupRingMatrix<S> const& x) {
  DenseMatrix<S> out(x.rows(), x.cols(), S(0));
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out(i, j) = augment(x(i, j));
  return out;
}

/// t(x) = trace of the coefficient matrix of the identity element.
template <Scalar S>
S trace_t(GroupRingMatrix<S> const& x) {
  if (!x.is_square()) throw ShapeError("trace of a non-square group ring matrix");
  GroupElement const e = x.model().identity();
  S t(0);
  for (std::size_t i = 0; i < x.rows(); ++i) t += x(i, i).coefficient(e);
  return t;
}

/// <x, y> = t(x y*).
template <Scalar S>
S hermitian_pair(GroupRingMatrix<S> const& x, GroupRingMatrix<S> const& y) {
  if (!(x.model() == y.model())) throw ModelMismatch("inner product of matrices over different models");
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw ShapeError("inner product shape mismatch");
  return trace_t(x * involute(y));
}

template <Scalar S>
bool is_idempotent(GroupRingMatrix<S> const& e) {
  if (!e.is_square()) throw ShapeError("idempotency of a non-square matrix");
  return e * e == e;
}

/// Block diagonal  [[a, 0], [0, b]].
template <Scalar S>
GroupRingMatrix<S> direct_sum(GroupRingMatrix<S> const& a, GroupRingMatrix<S> const& b) {
  if (!(a.model() == b.model())) throw ModelMismatch("direct sum over different models");
  GroupRingMatrix<S> out(a.model(), a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a(i, j));
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b(i, j));
  return out;
}

template <Scalar S>
GroupRingMatrix<S> push_forward(GroupRingMatrix<S> const& x, FreeHomomorphism const& phi) {
  GroupRingMatrix<S> out(phi.target(), x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) out.set(i, j, push_forward(x(i, j), phi));
  return out;
}

/// Extends integer coefficients to Gaussian rationals.
inline GroupRingMatrix<GaussianRational> extend_scalars(GroupRingMatrix<Integer> const& x) {
  GroupRingMatrix<GaussianRational> out(x.model(), x.rows(), x.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      GroupRingElement<GaussianRational> e(x.model());
      for (auto const& [g, c] : x(i, j).terms()) e.add_term(g, GaussianRational(c));
      out.set(i, j, std::move(e));
    }
  return out;
}

}  // namespace aspherix
