#pragma once

#include <functional>
#include <map>
#include <mutex>

#include "linfty/homogeneous_map.hpp"
#include "linfty/multi_map.hpp"

namespace linfty {

struct DefectEntry {
    Tuple tuple;
    Vec defect;
};
using DefectList = std::vector<DefectEntry>;

/// Exhaustive per-arity defect listing produced by a structure checker.
struct StructureReport {
    std::map<int, DefectList> defects;
    int checked_arity = 0;
    bool valid() const {
        for (const auto& [n, list] : defects)
            if (!list.empty()) return false;
        return true;
    }
};

/// Arity-indexed family of graded-antisymmetric operations mu_n of degree
/// 2-n. Operations are stored sparsely: an absent arity within the cap is the
/// zero operation, unless a generator extends the family lazily (memoized).
/// Requests beyond the arity cap throw.
class LInfinityStructure {
  public:
    using Generator = std::function<MultiMap(const LInfinityStructure&, int)>;

    LInfinityStructure() = default;
    LInfinityStructure(GradedSpace space, int arity_cap);
    LInfinityStructure(const LInfinityStructure& other);
    LInfinityStructure& operator=(const LInfinityStructure& other);

    const GradedSpace& space() const { return space_; }
    int arity_cap() const { return cap_; }

    void set_op(MultiMap op);
    void set_generator(Generator gen) { gen_ = std::move(gen); }

    /// The arity-n operation; generated and memoized on first access.
    const MultiMap& op(int arity) const;

    /// Arities with explicitly stored (or already generated) operations.
    std::vector<int> stored_arities() const;

  private:
    GradedSpace space_;
    int cap_ = 0;
    Generator gen_;
    mutable std::mutex mu_;
    mutable std::map<int, MultiMap> ops_;
};

/// Left side of the arity-n higher Jacobi identity evaluated on a basis
/// tuple: the double sum over k+l = n+1 and (k, n-k)-shuffles with sign
/// (-1)^{parity(sigma) + k(l-1)} e(sigma).
Vec jacobi_defect(const LInfinityStructure& l, int n, const Tuple& tuple);

/// Evaluates every higher Jacobi identity over all canonical basis tuples
/// for arities 1..max_arity and lists the nonzero defects.
StructureReport check_l_infinity(const LInfinityStructure& l, int max_arity);

/// Abelian structure: mu_1 = d, everything else zero.
LInfinityStructure abelian_structure(const GradedSpace& space, const HomogeneousMap& d, int arity_cap);

MultiMap multimap_from_homogeneous(const HomogeneousMap& f);

}  // namespace linfty
