#include "linfty/transfer.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

namespace {

void require_valid(const Dgla& a, const HomogeneousMap& eta) {
    if (eta.degree() != -1) throw std::invalid_argument("eta must have degree -1");
    if (eta.source() != a.space || eta.target() != a.space)
        throw std::invalid_argument("eta space mismatch");
    if (!check_dgla(a).valid()) throw std::invalid_argument("input does not satisfy the dgla identities");
}

MultiMap homotopy_smoothed_bracket(const Dgla& a, const HomogeneousMap& eta) {
    HomogeneousMap smooth = compose(a.d, eta) + compose(eta, a.d);
    MultiMap mu2(a.space, a.space, 2, 0);
    for (const auto& [t, v] : a.bracket.entries()) {
        Vec sv = smooth.apply(v);
        if (!vec_is_zero(sv)) mu2.set(t, std::move(sv));
    }
    return mu2;
}

}  // namespace

LInfinityStructure induce_l_infinity(const Dgla& a, const HomogeneousMap& eta, int max_arity) {
    require_valid(a, eta);
    LInfinityStructure l(a.space, max_arity);
    l.set_op(multimap_from_homogeneous(a.d));
    if (max_arity >= 2) l.set_op(homotopy_smoothed_bracket(a, eta));
    MultiMap bracket = a.bracket;
    HomogeneousMap eta_copy = eta;
    l.set_generator([bracket, eta_copy](const LInfinityStructure& self, int n) {
        const GradedSpace& space = self.space();
        MultiMap out(space, space, n, 2 - n);
        const MultiMap& prev = self.op(n - 1);
        if (prev.is_zero()) return out;
        for (const Tuple& t : canonical_tuples(space, n)) {
            std::vector<int> degrees(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) degrees[i] = space.degree(t[i]);
            Vec acc = vec_zero(space.dim());
            for (const Shuffle& sh : shuffles(n - 1, n)) {
                int sign_exp = n + perm_parity(sh.perm);
                int sign = (sign_exp & 1 ? -1 : 1) * koszul_sign(sh.perm, degrees);
                Tuple head(n - 1);
                for (int i = 0; i < n - 1; ++i) head[i] = t[sh.perm[i]];
                Vec inner = prev.eval_basis(head);
                if (vec_is_zero(inner)) continue;
                Vec br = bracket.eval_front(inner, {t[sh.perm[n - 1]]});
                vec_add_scaled(acc, Scalar(sign), eta_copy.apply(br));
            }
            if (!vec_is_zero(acc)) out.set(t, std::move(acc));
        }
        return out;
    });
    return l;
}

Vec fast_jacobi_defect(const Dgla& a, const HomogeneousMap& eta, const LInfinityStructure& l, int n,
                       const Tuple& tuple) {
    if (n < 2) return jacobi_defect(l, n, tuple);
    if (n == 2) return jacobi_defect(l, 2, tuple);
    const GradedSpace& space = a.space;
    std::vector<int> degrees(tuple.size());
    for (std::size_t i = 0; i < tuple.size(); ++i) degrees[i] = space.degree(tuple[i]);
    Vec acc = vec_zero(space.dim());
    for (const Shuffle& sh : shuffles(n - 1, n)) {
        int sign_exp = n + 1 + perm_parity(sh.perm);
        int sign = (sign_exp & 1 ? -1 : 1) * koszul_sign(sh.perm, degrees);
        Tuple head(n - 1);
        for (int i = 0; i < n - 1; ++i) head[i] = tuple[sh.perm[i]];
        Vec inner = fast_jacobi_defect(a, eta, l, n - 1, head);
        if (vec_is_zero(inner)) continue;
        Vec br = a.bracket.eval_front(inner, {tuple[sh.perm[n - 1]]});
        vec_add_scaled(acc, Scalar(sign), eta.apply(br));
    }
    return acc;
}

MultiMap complementary_lambda(const Dgla& a, const HomogeneousMap& eta, int n) {
    if (n < 2) throw std::invalid_argument("lambda_n is defined for n >= 2");
    const GradedSpace& space = a.space;
    // rho_1 = -Id; rho_k = eta lambda_k for k >= 2, memoized bottom-up
    std::vector<MultiMap> rho;
    rho.push_back(multimap_from_homogeneous(HomogeneousMap::identity(space).scaled(Scalar(-1))));
    MultiMap lambda(space, space, 2, 0);
    for (int m = 2; m <= n; ++m) {
        lambda = MultiMap(space, space, m, 2 - m);
        for (const Tuple& t : canonical_tuples(space, m)) {
            std::vector<int> degrees(t.size());
            for (std::size_t i = 0; i < t.size(); ++i) degrees[i] = space.degree(t[i]);
            Vec acc = vec_zero(space.dim());
            for (int k = 1; k <= m - 1; ++k) {
                const int lw = m - k;
                const MultiMap& rk = rho[k - 1];
                const MultiMap& rl = rho[lw - 1];
                if (rk.is_zero() || rl.is_zero()) continue;
                for (const Shuffle& sh : shuffles(k, m)) {
                    int block1_par = 0;
                    for (int i = 0; i < k; ++i) block1_par += parity(degrees[sh.perm[i]]);
                    int sign_exp = perm_parity(sh.perm) + k + 1 + (lw - 1) * block1_par;
                    int sign = (sign_exp & 1 ? -1 : 1) * koszul_sign(sh.perm, degrees);
                    Tuple left(k), right(lw);
                    for (int i = 0; i < k; ++i) left[i] = t[sh.perm[i]];
                    for (int i = 0; i < lw; ++i) right[i] = t[sh.perm[k + i]];
                    Vec lv = rk.eval_basis(left);
                    Vec rv = rl.eval_basis(right);
                    if (vec_is_zero(lv) || vec_is_zero(rv)) continue;
                    vec_add_scaled(acc, Scalar(sign), a.bracket.eval({lv, rv}));
                }
            }
            if (!vec_is_zero(acc)) lambda.set(t, std::move(acc));
        }
        if (m < n) {
            // rho_m = eta lambda_m
            MultiMap rm(space, space, m, 1 - m);
            for (const auto& [t, v] : lambda.entries()) {
                Vec ev = eta.apply(v);
                if (!vec_is_zero(ev)) rm.set(t, std::move(ev));
            }
            rho.push_back(std::move(rm));
        }
    }
    return lambda;
}

LInfinityStructure complementary_structure(const Dgla& a, const HomogeneousMap& eta, int max_arity) {
    require_valid(a, eta);
    LInfinityStructure l(a.space, max_arity);
    l.set_op(multimap_from_homogeneous(a.d));
    HomogeneousMap smooth = compose(a.d, eta) + compose(eta, a.d);
    for (int n = 2; n <= max_arity; ++n) {
        MultiMap lambda = complementary_lambda(a, eta, n);
        MultiMap mn(a.space, a.space, n, 2 - n);
        for (const auto& [t, v] : lambda.entries()) {
            Vec val = vec_sub(v, smooth.apply(v));
            if (!vec_is_zero(val)) mn.set(t, std::move(val));
        }
        l.set_op(std::move(mn));
    }
    return l;
}

AInfinityStructure induce_a_infinity(const Dga& a, const HomogeneousMap& eta, int max_arity) {
    if (eta.degree() != -1) throw std::invalid_argument("eta must have degree -1");
    if (eta.source() != a.space || eta.target() != a.space)
        throw std::invalid_argument("eta space mismatch");
    if (!check_dga(a).valid()) throw std::invalid_argument("input does not satisfy the dga identities");

    AInfinityStructure out(a.space, max_arity);
    TensorMap m1(a.space, a.space, 1, 1);
    for (int i = 0; i < a.space.dim(); ++i) {
        Vec v = a.d.apply(a.space.basis_vec(i));
        if (!vec_is_zero(v)) m1.set({i}, std::move(v));
    }
    out.set_op(std::move(m1));
    if (max_arity >= 2) {
        HomogeneousMap smooth = compose(a.d, eta) + compose(eta, a.d);
        TensorMap m2(a.space, a.space, 2, 0);
        for (const auto& [t, v] : a.product.entries()) {
            Vec sv = smooth.apply(v);
            if (!vec_is_zero(sv)) m2.set(t, std::move(sv));
        }
        out.set_op(std::move(m2));
    }
    TensorMap product = a.product;
    HomogeneousMap eta_copy = eta;
    out.set_generator([product, eta_copy](const AInfinityStructure& self, int n) {
        const GradedSpace& space = self.space();
        TensorMap mn(space, space, n, 2 - n);
        const TensorMap& prev = self.op(n - 1);
        if (prev.is_zero()) return mn;
        Tuple t(n, 0);
        const int dim = space.dim();
        while (true) {
            Tuple front(t.begin(), t.end() - 1);
            Tuple back(t.begin() + 1, t.end());
            Vec acc = vec_zero(dim);
            Vec mf = prev.eval_basis(front);
            if (!vec_is_zero(mf))
                vec_add_scaled(acc, Scalar(n % 2 ? -1 : 1), product.eval_insert({}, mf, {t.back()}));
            Vec mb = prev.eval_basis(back);
            if (!vec_is_zero(mb)) {
                int sign = ((n - 1) * space.par(t.front())) % 2 ? -1 : 1;
                vec_add_scaled(acc, Scalar(sign), product.eval_insert({t.front()}, mb, {}));
            }
            Vec val = eta_copy.apply(acc);
            if (!vec_is_zero(val)) mn.set(t, std::move(val));
            int pos = n - 1;
            while (pos >= 0 && t[pos] == dim - 1) t[pos--] = 0;
            if (pos < 0) break;
            ++t[pos];
        }
        return mn;
    });
    return out;
}

LMorphismToAbelian kuranishi_morphism(const Dgla& a, const HomogeneousMap& eta) {
    if (eta.degree() != -1) throw std::invalid_argument("eta must have degree -1");
    LMorphismToAbelian k(a.space, a.space, a.d);
    k.set_component(multimap_from_homogeneous(HomogeneousMap::identity(a.space)));
    MultiMap k2(a.space, a.space, 2, -1);
    for (const auto& [t, v] : a.bracket.entries()) {
        Vec ev = eta.apply(v);
        if (!vec_is_zero(ev)) k2.set(t, std::move(ev));
    }
    k.set_component(std::move(k2));
    return k;
}

}  // namespace linfty
