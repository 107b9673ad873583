#include "linfty/l_infinity.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

LInfinityStructure::LInfinityStructure(GradedSpace space, int arity_cap)
    : space_(std::move(space)), cap_(arity_cap) {
    if (cap_ < 1) throw std::invalid_argument("arity cap must be >= 1");
}

LInfinityStructure::LInfinityStructure(const LInfinityStructure& other) {
    std::scoped_lock lock(other.mu_);
    space_ = other.space_;
    cap_ = other.cap_;
    gen_ = other.gen_;
    ops_ = other.ops_;
}

LInfinityStructure& LInfinityStructure::operator=(const LInfinityStructure& other) {
    if (this == &other) return *this;
    std::scoped_lock lock(mu_, other.mu_);
    space_ = other.space_;
    cap_ = other.cap_;
    gen_ = other.gen_;
    ops_ = other.ops_;
    return *this;
}

void LInfinityStructure::set_op(MultiMap op) {
    if (op.source() != space_ || op.target() != space_)
        throw std::invalid_argument("operation space mismatch");
    if (op.degree() != 2 - op.arity())
        throw std::invalid_argument("mu_n must have degree 2-n");
    if (op.arity() > cap_) throw std::invalid_argument("operation arity beyond the cap");
    std::scoped_lock lock(mu_);
    int arity = op.arity();
    ops_.insert_or_assign(arity, std::move(op));
}

const MultiMap& LInfinityStructure::op(int arity) const {
    if (arity < 1 || arity > cap_)
        throw std::out_of_range("operation arity " + std::to_string(arity) + " outside the cap");
    {
        std::scoped_lock lock(mu_);
        auto it = ops_.find(arity);
        if (it != ops_.end()) return it->second;
    }
    MultiMap generated =
        gen_ ? gen_(*this, arity) : MultiMap::zero(space_, arity, 2 - arity);
    if (generated.arity() != arity || generated.degree() != 2 - arity)
        throw std::logic_error("generator returned an operation of the wrong shape");
    std::scoped_lock lock(mu_);
    auto [it, inserted] = ops_.emplace(arity, std::move(generated));
    return it->second;
}

std::vector<int> LInfinityStructure::stored_arities() const {
    std::scoped_lock lock(mu_);
    std::vector<int> out;
    for (const auto& [n, op] : ops_)
        if (!op.is_zero()) out.push_back(n);
    return out;
}

Vec jacobi_defect(const LInfinityStructure& l, int n, const Tuple& tuple) {
    if (static_cast<int>(tuple.size()) != n) throw std::invalid_argument("jacobi_defect: tuple size mismatch");
    const GradedSpace& space = l.space();
    std::vector<int> degrees(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) degrees[i] = space.degree(tuple[i]);

    Vec acc = vec_zero(space.dim());
    for (int k = 1; k <= n; ++k) {
        const int lw = n + 1 - k;
        const MultiMap& inner = l.op(k);
        const MultiMap& outer = l.op(lw);
        if (inner.is_zero() || outer.is_zero()) continue;
        for (const Shuffle& sh : shuffles(k, n)) {
            int sign_exp = perm_parity(sh.perm) + k * (lw - 1);
            int sign = (sign_exp & 1 ? -1 : 1) * koszul_sign(sh.perm, degrees);
            Tuple head(k), tail(n - k);
            for (int i = 0; i < k; ++i) head[i] = tuple[sh.perm[i]];
            for (int i = k; i < n; ++i) tail[i - k] = tuple[sh.perm[i]];
            Vec mid = inner.eval_basis(head);
            if (vec_is_zero(mid)) continue;
            vec_add_scaled(acc, Scalar(sign), outer.eval_front(mid, tail));
        }
    }
    return acc;
}

StructureReport check_l_infinity(const LInfinityStructure& l, int max_arity) {
    if (max_arity > l.arity_cap()) throw std::invalid_argument("check_l_infinity: max_arity beyond the cap");
    StructureReport report;
    report.checked_arity = max_arity;
    for (int n = 1; n <= max_arity; ++n) {
        DefectList list;
        for (const Tuple& t : canonical_tuples(l.space(), n)) {
            Vec defect = jacobi_defect(l, n, t);
            if (!vec_is_zero(defect)) list.push_back({t, std::move(defect)});
        }
        report.defects.emplace(n, std::move(list));
    }
    return report;
}

MultiMap multimap_from_homogeneous(const HomogeneousMap& f) {
    if (f.source() != f.target())
        throw std::invalid_argument("multimap_from_homogeneous: endomorphism expected");
    MultiMap m(f.source(), f.target(), 1, f.degree());
    for (int i = 0; i < f.source().dim(); ++i) {
        Vec v = f.apply(f.source().basis_vec(i));
        if (!vec_is_zero(v)) m.set({i}, std::move(v));
    }
    return m;
}

LInfinityStructure abelian_structure(const GradedSpace& space, const HomogeneousMap& d, int arity_cap) {
    if (d.degree() != 1) throw std::invalid_argument("differential must have degree +1");
    LInfinityStructure l(space, arity_cap);
    l.set_op(multimap_from_homogeneous(d));
    return l;
}

}  // namespace linfty
