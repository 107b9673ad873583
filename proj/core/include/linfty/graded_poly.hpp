#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "linfty/graded_space.hpp"

namespace linfty {

/// Graded supercommutative variable. Odd-degree variables square to zero by
/// the sign rule; an explicit max_exponent can impose additional nilpotency
/// on even variables (for first-order directions like a tangency parameter).
/// Variables belong to a truncation group: supermanifold coordinates and
/// formal parameters truncate on independent budgets.
struct Variable {
    std::string name;
    int degree = 0;
    int max_exponent = -1;  // -1: unbounded
    int group = 0;
};

class VarFrame {
  public:
    explicit VarFrame(std::vector<Variable> vars, int min_groups = 1);

    int size() const { return static_cast<int>(vars_.size()); }
    int groups() const { return groups_; }
    const Variable& var(int i) const { return vars_[i]; }
    int degree(int i) const { return vars_[i].degree; }
    int par(int i) const { return parity(vars_[i].degree); }
    std::optional<int> index_of(const std::string& name) const;

    bool operator==(const VarFrame& other) const;

  private:
    std::vector<Variable> vars_;
    int groups_ = 1;
};

using VarFramePtr = std::shared_ptr<const VarFrame>;

VarFramePtr make_frame(std::vector<Variable> vars, int min_groups = 1);

/// Exponent vector over a frame. Ordered by total exponent, then
/// lexicographically; the zero monomial is the constant 1.
class Monomial {
  public:
    Monomial() = default;
    explicit Monomial(int nvars) : exp_(nvars, 0) {}
    static Monomial unit(int nvars, int var);

    int exponent(int i) const { return exp_[i]; }
    int nvars() const { return static_cast<int>(exp_.size()); }
    int total() const;
    int group_total(const VarFrame& frame, int group) const;
    int graded_degree(const VarFrame& frame) const;
    int par(const VarFrame& frame) const { return parity(graded_degree(frame)); }
    bool is_constant() const { return total() == 0; }

    Monomial with(int var, int delta) const;

    std::string str(const VarFrame& frame) const;

    bool operator<(const Monomial& other) const;
    bool operator==(const Monomial& other) const { return exp_ == other.exp_; }

  private:
    std::vector<int> exp_;
};

/// Product of two monomials in the supercommutative ring.
/// nullopt when the product vanishes (odd square or exponent cap).
/// sign collects the Koszul factors for interleaving the variables.
struct MonomialProduct {
    Monomial mono;
    int sign = 1;
};
std::optional<MonomialProduct> mono_mul(const VarFrame& frame, const Monomial& a, const Monomial& b);

/// Truncated polynomial in graded supercommutative variables over Q, with one
/// total-exponent cap per variable group. Monomials beyond a cap are dropped
/// by every operation; identities involving these objects hold "through the
/// truncation".
class GradedPoly {
  public:
    GradedPoly() = default;
    GradedPoly(VarFramePtr frame, std::vector<int> caps);
    GradedPoly(VarFramePtr frame, int cap);  // single-group convenience

    static GradedPoly constant(VarFramePtr frame, std::vector<int> caps, const Scalar& c);
    static GradedPoly variable(VarFramePtr frame, std::vector<int> caps, int var);
    static GradedPoly constant(VarFramePtr frame, int cap, const Scalar& c) {
        return constant(std::move(frame), std::vector<int>{cap}, c);
    }
    static GradedPoly variable(VarFramePtr frame, int cap, int var) {
        return variable(std::move(frame), std::vector<int>{cap}, var);
    }

    const VarFramePtr& frame() const { return frame_; }
    const std::vector<int>& caps() const { return caps_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    Scalar coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Scalar& c);

    /// Homogeneous graded degree, nullopt for 0 or mixed.
    std::optional<int> graded_degree() const;

    GradedPoly operator-() const;
    GradedPoly& operator+=(const GradedPoly& other);
    GradedPoly& operator-=(const GradedPoly& other);
    GradedPoly& operator*=(const Scalar& c);

    /// Left partial derivative along the given variable.
    GradedPoly derivative(int var) const;

    /// Substitutes every variable by a polynomial of the same degree over
    /// the same frame. Used for coordinate translations and for evaluating
    /// component functions at a point.
    GradedPoly substitute(const std::vector<GradedPoly>& images) const;

    /// Keeps only monomials supported on the allowed variables.
    GradedPoly drop_variables(const std::vector<bool>& keep) const;

    std::string str() const;

    bool operator==(const GradedPoly& other) const;

  private:
    VarFramePtr frame_;
    std::vector<int> caps_;
    std::map<Monomial, Scalar> terms_;
};

/// Every admissible monomial within the caps, in the canonical order.
std::vector<Monomial> all_monomials(const VarFrame& frame, const std::vector<int>& caps);

GradedPoly operator+(GradedPoly a, const GradedPoly& b);
GradedPoly operator-(GradedPoly a, const GradedPoly& b);
GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
GradedPoly operator*(const Scalar& c, GradedPoly p);

}  // namespace linfty
