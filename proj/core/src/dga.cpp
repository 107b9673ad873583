#include "linfty/dga.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

Dga::Dga(GradedSpace space_, HomogeneousMap d_, TensorMap product_)
    : space(std::move(space_)), d(std::move(d_)), product(std::move(product_)) {
    if (d.source() != space || d.target() != space) throw std::invalid_argument("Dga: d space mismatch");
    if (d.degree() != 1) throw std::invalid_argument("Dga: d must have degree +1");
    if (product.source() != space || product.target() != space)
        throw std::invalid_argument("Dga: product space mismatch");
    if (product.arity() != 2 || product.degree() != 0)
        throw std::invalid_argument("Dga: product must be binary of degree 0");
}

DgaReport check_dga(const Dga& a) {
    AInfinityStructure m = as_a_infinity(a, 3);
    DgaReport report;
    const int dim = a.space.dim();
    for (int n = 1; n <= 3; ++n) {
        DefectList* bucket = n == 1 ? &report.d_squared : n == 2 ? &report.leibniz : &report.associativity;
        Tuple t(n, 0);
        while (true) {
            Vec defect = associativity_defect(m, n, t);
            if (!vec_is_zero(defect)) bucket->push_back({t, std::move(defect)});
            int pos = n - 1;
            while (pos >= 0 && t[pos] == dim - 1) t[pos--] = 0;
            if (pos < 0) break;
            ++t[pos];
        }
    }
    return report;
}

AInfinityStructure as_a_infinity(const Dga& a, int arity_cap) {
    AInfinityStructure m(a.space, arity_cap);
    TensorMap m1(a.space, a.space, 1, 1);
    for (int i = 0; i < a.space.dim(); ++i) {
        Vec v = a.d.apply(a.space.basis_vec(i));
        if (!vec_is_zero(v)) m1.set({i}, std::move(v));
    }
    m.set_op(std::move(m1));
    if (arity_cap >= 2) {
        TensorMap p = a.product;
        m.set_op(std::move(p));
    }
    return m;
}

Dgla commutator_dgla(const Dga& a) {
    MultiMap bracket(a.space, a.space, 2, 0);
    for (const Tuple& t : canonical_tuples(a.space, 2)) {
        Vec xy = a.product.eval_basis(t);
        Vec yx = a.product.eval_basis({t[1], t[0]});
        int sign = a.space.par(t[0]) * a.space.par(t[1]);
        Vec val = sign ? vec_add(xy, yx) : vec_sub(xy, yx);
        if (!vec_is_zero(val)) bracket.set(t, std::move(val));
    }
    return Dgla(a.space, a.d, std::move(bracket));
}

}  // namespace linfty
