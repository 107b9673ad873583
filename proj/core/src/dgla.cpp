#include "linfty/dgla.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

Dgla::Dgla(GradedSpace space_, HomogeneousMap d_, MultiMap bracket_)
    : space(std::move(space_)), d(std::move(d_)), bracket(std::move(bracket_)) {
    if (d.source() != space || d.target() != space) throw std::invalid_argument("Dgla: d space mismatch");
    if (d.degree() != 1) throw std::invalid_argument("Dgla: d must have degree +1");
    if (bracket.source() != space || bracket.target() != space)
        throw std::invalid_argument("Dgla: bracket space mismatch");
    if (bracket.arity() != 2 || bracket.degree() != 0)
        throw std::invalid_argument("Dgla: bracket must be binary of degree 0");
}

DglaReport check_dgla(const Dgla& a) {
    LInfinityStructure l = as_l_infinity(a, 3);
    DglaReport report;
    for (int n = 1; n <= 3; ++n) {
        DefectList* bucket = n == 1 ? &report.d_squared : n == 2 ? &report.leibniz : &report.jacobi;
        for (const Tuple& t : canonical_tuples(a.space, n)) {
            Vec defect = jacobi_defect(l, n, t);
            if (!vec_is_zero(defect)) bucket->push_back({t, std::move(defect)});
        }
    }
    return report;
}

LInfinityStructure as_l_infinity(const Dgla& a, int arity_cap) {
    LInfinityStructure l(a.space, arity_cap);
    l.set_op(multimap_from_homogeneous(a.d));
    if (arity_cap >= 2) {
        MultiMap b = a.bracket;
        l.set_op(std::move(b));
    }
    return l;
}

Vec dgla_d(const Dgla& a, const Vec& v) { return a.d.apply(v); }

}  // namespace linfty
