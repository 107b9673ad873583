#pragma once

#include <map>
#include <optional>
#include <vector>

#include "linfty/graded_space.hpp"
#include "linfty/perm.hpp"

namespace linfty {

/// Basis-index tuple.
using Tuple = std::vector<int>;

/// Result of reordering a tuple into canonical (non-decreasing) form under
/// the wedge convention. `zero` marks tuples killed by antisymmetry:
/// a repeated entry of even degree.
struct TupleNorm {
    Tuple tuple;
    int sign = 1;
    bool zero = false;
};

TupleNorm normalize_tuple(const GradedSpace& space, Tuple t);

/// All canonical storage tuples of the given arity: indices non-decreasing,
/// repeats only on odd-degree basis vectors. Lexicographic order.
std::vector<Tuple> canonical_tuples(const GradedSpace& space, int arity);

/// Graded-antisymmetric n-ary map Lambda^n(source) -> target of fixed degree.
/// Values are stored on canonical tuples only; evaluation on any other tuple
/// goes through the Koszul-signed reordering. Absent tuple = zero value.
class MultiMap {
  public:
    MultiMap() = default;
    MultiMap(GradedSpace source, GradedSpace target, int arity, int degree);
    static MultiMap zero(const GradedSpace& space, int arity, int degree);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int arity() const { return arity_; }
    int degree() const { return degree_; }

    /// Stores a value on a canonical tuple. The value must be homogeneous of
    /// degree sum(deg t_i) + degree(). Zero values erase the slot.
    void set(const Tuple& canonical, Vec value);

    /// Accumulates coeff * e_target onto an arbitrary tuple, normalizing first.
    void add_entry(const Tuple& any, int target_index, const Scalar& coeff);

    /// Signed lookup on an arbitrary basis tuple.
    Vec eval_basis(const Tuple& any) const;

    /// Multilinear evaluation; every argument is a coefficient vector over source().
    Vec eval(const std::vector<Vec>& args) const;

    /// Evaluation with a vector in the first slot and basis indices after it.
    Vec eval_front(const Vec& head, const Tuple& rest) const;

    bool is_zero() const { return values_.empty(); }
    const std::map<Tuple, Vec>& entries() const { return values_; }

    void add_scaled(const MultiMap& other, const Scalar& c);
    bool operator==(const MultiMap& other) const;

  private:
    GradedSpace source_, target_;
    int arity_ = 0;
    int degree_ = 0;
    std::map<Tuple, Vec> values_;
};

/// n-ary map with no symmetry: tensor powers of the source. Values may sit
/// on every basis tuple. Used for A-infinity operations and products.
class TensorMap {
  public:
    TensorMap() = default;
    TensorMap(GradedSpace source, GradedSpace target, int arity, int degree);

    const GradedSpace& source() const { return source_; }
    const GradedSpace& target() const { return target_; }
    int arity() const { return arity_; }
    int degree() const { return degree_; }

    void set(const Tuple& t, Vec value);
    void add_entry(const Tuple& t, int target_index, const Scalar& coeff);

    Vec eval_basis(const Tuple& t) const;
    Vec eval(const std::vector<Vec>& args) const;

    /// Evaluation with one vector argument inserted between two basis blocks.
    Vec eval_insert(const Tuple& prefix, const Vec& mid, const Tuple& suffix) const;

    bool is_zero() const { return values_.empty(); }
    const std::map<Tuple, Vec>& entries() const { return values_; }
    bool operator==(const TensorMap& other) const;

  private:
    GradedSpace source_, target_;
    int arity_ = 0;
    int degree_ = 0;
    std::map<Tuple, Vec> values_;
};

}  // namespace linfty
