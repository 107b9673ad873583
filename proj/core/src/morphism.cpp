#include "linfty/morphism.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

LMorphismToAbelian::LMorphismToAbelian(GradedSpace source, GradedSpace target, HomogeneousMap target_d)
    : source_(std::move(source)), target_(std::move(target)), target_d_(std::move(target_d)) {
    if (target_d_.source() != target_ || target_d_.target() != target_ || target_d_.degree() != 1)
        throw std::invalid_argument("LMorphismToAbelian: target differential must be degree +1 on the target");
}

void LMorphismToAbelian::set_component(MultiMap f) {
    if (f.source() != source_ || f.target() != target_)
        throw std::invalid_argument("morphism component space mismatch");
    if (f.degree() != 1 - f.arity())
        throw std::invalid_argument("F_n must have degree 1-n");
    int arity = f.arity();
    components_.insert_or_assign(arity, std::move(f));
}

MultiMap LMorphismToAbelian::component(int arity) const {
    auto it = components_.find(arity);
    if (it != components_.end()) return it->second;
    return MultiMap(source_, target_, arity, 1 - arity);
}

StructureReport check_morphism_to_abelian(const LMorphismToAbelian& f, const LInfinityStructure& source,
                                          int max_arity) {
    if (source.space() != f.source())
        throw std::invalid_argument("check_morphism_to_abelian: source space mismatch");
    if (max_arity > source.arity_cap())
        throw std::invalid_argument("check_morphism_to_abelian: max_arity beyond the source cap");
    StructureReport report;
    report.checked_arity = max_arity;
    const GradedSpace& space = source.space();
    for (int n = 1; n <= max_arity; ++n) {
        DefectList list;
        std::vector<MultiMap> fl;
        fl.reserve(n + 1);
        for (int l = 0; l <= n; ++l) fl.push_back(f.component(std::max(l, 1)));
        for (const Tuple& t : canonical_tuples(space, n)) {
            std::vector<int> degrees(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) degrees[i] = space.degree(t[i]);
            Vec lhs = f.target_d().apply(f.component(n).eval_basis(t));
            Vec rhs = vec_zero(f.target().dim());
            for (int k = 1; k <= n; ++k) {
                const int l = n + 1 - k;
                const MultiMap& inner = source.op(k);
                const MultiMap& outer = fl[l];
                if (inner.is_zero() || outer.is_zero()) continue;
                for (const Shuffle& sh : shuffles(k, n)) {
                    int sign_exp = perm_parity(sh.perm) + k * (l - 1);
                    int sign = (sign_exp & 1 ? -1 : 1) * koszul_sign(sh.perm, degrees);
                    Tuple head(k), tail(n - k);
                    for (int i = 0; i < k; ++i) head[i] = t[sh.perm[i]];
                    for (int i = k; i < n; ++i) tail[i - k] = t[sh.perm[i]];
                    Vec mid = inner.eval_basis(head);
                    if (vec_is_zero(mid)) continue;
                    vec_add_scaled(rhs, Scalar(sign), outer.eval_front(mid, tail));
                }
            }
            Vec defect = vec_sub(lhs, rhs);
            if (!vec_is_zero(defect)) list.push_back({t, std::move(defect)});
        }
        report.defects.emplace(n, std::move(list));
    }
    return report;
}

}  // namespace linfty
