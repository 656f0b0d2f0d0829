#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "pi3/errors.hpp"
#include "pi3/finite_group.hpp"
#include "pi3/matrix.hpp"

namespace pi3 {

/// Finitely supported element of ZG (Scalar = Integer) or QG (Scalar = Rational).
/// Zero coefficients are never stored.
template <class Scalar>
class GroupRingElement {
 public:
  explicit GroupRingElement(GroupPtr group) : group_(std::move(group)) {}

  static GroupRingElement basis(GroupPtr group, Element g, const Scalar& c = Scalar(1)) {
    GroupRingElement x(std::move(group));
    x.set(g, c);
    return x;
  }

  static GroupRingElement from_dense(GroupPtr group, std::span<const Scalar> coeffs) {
    GroupRingElement x(std::move(group));
    if (coeffs.size() != x.group_->order()) throw DimensionMismatch("dense coefficient vector has wrong length");
    for (Element g = 0; g < coeffs.size(); ++g) x.set(g, coeffs[g]);
    return x;
  }

  const GroupPtr& group() const { return group_; }
  const std::map<Element, Scalar>& terms() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  Scalar coefficient(Element g) const {
    auto it = coeffs_.find(g);
    return it == coeffs_.end() ? Scalar(0) : it->second;
  }

  void set(Element g, const Scalar& c) {
    if (g >= group_->order()) throw std::out_of_range("group element index out of range");
    if (c == 0)
      coeffs_.erase(g);
    else
      coeffs_[g] = c;
  }

  void add_to(Element g, const Scalar& c) { set(g, coefficient(g) + c); }

  std::vector<Scalar> dense() const {
    std::vector<Scalar> out(group_->order());
    for (const auto& [g, c] : coeffs_) out[g] = c;
    return out;
  }

  /// The anti-involution sum c_g g -> sum c_g g^-1.
  GroupRingElement conjugate() const {
    GroupRingElement out(group_);
    for (const auto& [g, c] : coeffs_) out.set(group_->inverse(g), c);
    return out;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

  friend GroupRingElement operator+(const GroupRingElement& a, const GroupRingElement& b) {
    check_same_group(a, b);
    GroupRingElement out = a;
    for (const auto& [g, c] : b.coeffs_) out.add_to(g, c);
    return out;
  }

  friend GroupRingElement operator-(const GroupRingElement& a, const GroupRingElement& b) {
    check_same_group(a, b);
    GroupRingElement out = a;
    for (const auto& [g, c] : b.coeffs_) out.add_to(g, -c);
    return out;
  }

  friend GroupRingElement operator-(const GroupRingElement& a) {
    GroupRingElement out(a.group_);
    for (const auto& [g, c] : a.coeffs_) out.coeffs_[g] = -c;
    return out;
  }

  /// Convolution through the multiplication table.
  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    check_same_group(a, b);
    std::vector<Scalar> acc(a.group_->order());
    for (const auto& [g, c] : a.coeffs_)
      for (const auto& [h, d] : b.coeffs_) acc[a.group_->mul(g, h)] += c * d;
    return from_dense(a.group_, acc);
  }

  friend GroupRingElement operator*(const Scalar& s, const GroupRingElement& a) {
    GroupRingElement out(a.group_);
    for (const auto& [g, c] : a.coeffs_) out.set(g, s * c);
    return out;
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (const auto& [g, c] : coeffs_) {
      std::string name = group_->name(g);
      if (!s.empty()) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      Scalar mag = c < 0 ? Scalar(-c) : c;
      if (mag != 1) s += mag.get_str() + "*";
      s += name;
    }
    return s;
  }

 private:
  static void check_same_group(const GroupRingElement& a, const GroupRingElement& b) {
    if (a.group_ != b.group_) throw GroupMismatch("group ring elements over different groups");
  }

  GroupPtr group_;
  std::map<Element, Scalar> coeffs_;
};

using ZGElement = GroupRingElement<Integer>;
using QGElement = GroupRingElement<Rational>;

enum class RingOp { Add, Sub, Mul };

template <class Scalar>
GroupRingElement<Scalar> ring_arithmetic(const GroupRingElement<Scalar>& a, const GroupRingElement<Scalar>& b,
                                         RingOp op) {
  switch (op) {
    case RingOp::Add: return a + b;
    case RingOp::Sub: return a - b;
    case RingOp::Mul: return a * b;
  }
  throw std::invalid_argument("unknown ring operation");
}

/// The sum of all group elements.
ZGElement sigma(const GroupPtr& group);

QGElement to_rational(const ZGElement& a);

/// Matrix with group ring entries, all over one group.
template <class Scalar>
class GroupRingMatrix {
 public:
  GroupRingMatrix(GroupPtr group, std::size_t rows, std::size_t cols)
      : group_(group), rows_(rows), cols_(cols), entries_(rows * cols, GroupRingElement<Scalar>(group)) {}

  const GroupPtr& group() const { return group_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const GroupRingElement<Scalar>& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, GroupRingElement<Scalar> v) {
    if (v.group() != group_) throw GroupMismatch("matrix entry over a different group");
    entries_[r * cols_ + c] = std::move(v);
  }

  bool is_zero() const {
    for (const auto& e : entries_)
      if (!e.is_zero()) return false;
    return true;
  }

  GroupRingMatrix transpose() const {
    GroupRingMatrix t(group_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t.entries_[c * rows_ + r] = (*this)(r, c);
    return t;
  }

  friend GroupRingMatrix operator*(const GroupRingMatrix& a, const GroupRingMatrix& b) {
    if (a.group_ != b.group_) throw GroupMismatch("group ring matrices over different groups");
    if (a.cols_ != b.rows_) throw DimensionMismatch("group ring matrix product shape mismatch");
    GroupRingMatrix out(a.group_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) {
        GroupRingElement<Scalar> acc(a.group_);
        for (std::size_t k = 0; k < a.cols_; ++k) acc = acc + a(i, k) * b(k, j);
        out.entries_[i * out.cols_ + j] = std::move(acc);
      }
    return out;
  }

 private:
  GroupPtr group_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<GroupRingElement<Scalar>> entries_;
};

using ZGMatrix = GroupRingMatrix<Integer>;

/// Integer matrix of v -> a v on ZG in the group-element basis; a ring homomorphism
/// ZG -> M_n(Z). Left multiplications are exactly the right-module endomorphisms of ZG.
IntMatrix regular_block(const ZGElement& a);

/// Block expansion of a ZG-matrix acting on column vectors of right modules.
IntMatrix expand_to_integer_matrix(const ZGMatrix& m);

/// Matrix of v -> v g on ZG (the right regular permutation representation).
IntMatrix right_regular_matrix(const FiniteGroup& group, Element g);

}  // namespace pi3
