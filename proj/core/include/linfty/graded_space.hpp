#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linfty/rational.hpp"

namespace linfty {

inline int parity(long degree) { return static_cast<int>(((degree % 2) + 2) % 2); }

/// Finite-dimensional Z-graded vector space with a labeled, ordered basis.
/// Immutable after construction. The degree shift g[n] is a view sharing
/// the basis payload: v[n] sits in degree deg(v) - n.
class GradedSpace {
  public:
    GradedSpace() = default;
    explicit GradedSpace(std::vector<std::pair<std::string, int>> basis);

    int dim() const { return basis_ ? static_cast<int>(basis_->degrees.size()) : 0; }
    int degree(int i) const { return basis_->degrees[i] - shift_; }
    int par(int i) const { return parity(degree(i)); }
    const std::string& label(int i) const { return basis_->labels[i]; }

    std::optional<int> index_of(const std::string& label) const;

    /// Basis indices living in the given degree, in basis order.
    std::vector<int> indices_in_degree(int degree) const;
    int dim_in_degree(int degree) const { return static_cast<int>(indices_in_degree(degree).size()); }

    /// Degrees that actually occur, increasing.
    std::vector<int> degrees_present() const;

    GradedSpace shifted(int n) const;

    bool operator==(const GradedSpace& other) const;
    bool operator!=(const GradedSpace& other) const { return !(*this == other); }

    /// Degree of a homogeneous vector, nullopt for 0 or a mixed vector.
    std::optional<int> homogeneous_degree(const Vec& v) const;

    Vec basis_vec(int i) const;
    std::string vec_str(const Vec& v) const;

  private:
    struct Basis {
        std::vector<std::string> labels;
        std::vector<int> degrees;
    };
    std::shared_ptr<const Basis> basis_;
    int shift_ = 0;
};

}  // namespace linfty
