#include "linfty/hodge.hpp"

#include <stdexcept>

#include "linfty/linalg.hpp"

namespace linfty {

int HodgeData::betti(int degree) const {
    int b = 0;
    for (const auto& h : harmonics)
        if (h.degree == degree) ++b;
    return b;
}

std::vector<int> HodgeData::harmonic_indices(int degree) const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(harmonics.size()); ++i)
        if (harmonics[i].degree == degree) out.push_back(i);
    return out;
}

HodgeData build_hodge_data(const GradedSpace& space, const HomogeneousMap& d) {
    if (d.degree() != 1) throw std::invalid_argument("build_hodge_data: d must have degree +1");
    if (d.source() != space || d.target() != space)
        throw std::invalid_argument("build_hodge_data: space mismatch");
    if (!compose(d, d).is_zero()) throw std::invalid_argument("build_hodge_data: d^2 != 0");

    const int dim = space.dim();
    HodgeData out;
    out.space = space;
    out.p_h = HomogeneousMap(space, space, 0);
    out.eta = HomogeneousMap(space, space, -1);

    for (int deg : space.degrees_present()) {
        std::vector<int> here = space.indices_in_degree(deg);
        std::vector<int> above = space.indices_in_degree(deg + 1);
        std::vector<int> below = space.indices_in_degree(deg - 1);

        // d restricted to this degree, in the local bases
        QMat dm(static_cast<int>(above.size()), static_cast<int>(here.size()));
        for (std::size_t c = 0; c < here.size(); ++c)
            for (std::size_t r = 0; r < above.size(); ++r) dm.at(static_cast<int>(r), static_cast<int>(c)) = d.at(above[r], here[c]);

        QMat red = dm;
        std::vector<int> pivots = rref(red);

        // complement C of ker d: the pivot coordinate directions
        std::vector<Vec> c_basis;      // global coordinates
        std::vector<int> c_local;
        for (int p : pivots) {
            c_local.push_back(p);
            Vec v = vec_zero(dim);
            v[here[p]] = 1;
            c_basis.push_back(std::move(v));
        }

        // kernel of d in this degree, lifted to global coordinates
        std::vector<Vec> ker_local = kernel_basis(dm);
        std::vector<Vec> ker;
        for (const Vec& kl : ker_local) {
            Vec v = vec_zero(dim);
            for (std::size_t c = 0; c < here.size(); ++c) v[here[c]] = kl[c];
            ker.push_back(std::move(v));
        }

        // image of d from one degree below, with canonical preimages in the
        // pivot complement chosen there
        QMat dm_below(static_cast<int>(here.size()), static_cast<int>(below.size()));
        for (std::size_t c = 0; c < below.size(); ++c)
            for (std::size_t r = 0; r < here.size(); ++r)
                dm_below.at(static_cast<int>(r), static_cast<int>(c)) = d.at(here[r], below[c]);
        QMat red_below = dm_below;
        std::vector<int> pivots_below = rref(red_below);
        std::vector<Vec> im_basis;   // global coordinates, basis of im d in this degree
        std::vector<int> im_pre;     // global index of the preimage basis vector
        for (int p : pivots_below) {
            Vec v = vec_zero(dim);
            for (std::size_t r = 0; r < here.size(); ++r) v[here[r]] = dm_below.at(static_cast<int>(r), p);
            im_basis.push_back(std::move(v));
            im_pre.push_back(below[p]);
        }

        // greedy harmonic complement of im d inside ker d, in kernel order
        std::vector<Vec> span = im_basis;
        std::vector<Vec> h_basis;
        for (const Vec& k : ker) {
            if (coordinates_in_span(span, k)) continue;
            span.push_back(k);
            h_basis.push_back(k);
        }
        for (const Vec& h : h_basis) {
            Harmonic entry;
            entry.degree = deg;
            entry.label = "h" + std::to_string(out.harmonics.size() + 1);
            entry.rep = h;
            out.harmonics.push_back(std::move(entry));
        }

        // decompose every basis vector of this degree as h + c + m and read
        // off the projection and the homotopy
        std::vector<Vec> frame;
        frame.insert(frame.end(), h_basis.begin(), h_basis.end());
        frame.insert(frame.end(), c_basis.begin(), c_basis.end());
        frame.insert(frame.end(), im_basis.begin(), im_basis.end());
        for (int j : here) {
            Vec e = space.basis_vec(j);
            auto coords = coordinates_in_span(frame, e);
            if (!coords) throw std::logic_error("build_hodge_data: decomposition failed");
            Vec ph = vec_zero(dim);
            for (std::size_t i = 0; i < h_basis.size(); ++i) vec_add_scaled(ph, (*coords)[i], h_basis[i]);
            for (int r = 0; r < dim; ++r)
                if (!is_zero(ph[r])) out.p_h.set(r, j, ph[r]);
            Vec ev = vec_zero(dim);
            for (std::size_t i = 0; i < im_basis.size(); ++i) {
                const Scalar& c = (*coords)[h_basis.size() + c_basis.size() + i];
                if (!is_zero(c)) ev[im_pre[i]] += c;
            }
            for (int r = 0; r < dim; ++r)
                if (!is_zero(ev[r])) out.eta.set(r, j, ev[r]);
        }
    }
    return out;
}

std::vector<std::string> hodge_violations(const HodgeData& h, const HomogeneousMap& d) {
    std::vector<std::string> bad;
    const GradedSpace& s = h.space;
    HomogeneousMap id = HomogeneousMap::identity(s);
    if (!(h.p_h + compose(d, h.eta) + compose(h.eta, d) == id)) bad.push_back("Id = P_H + d eta + eta d");
    if (!(compose(h.p_h, h.p_h) == h.p_h)) bad.push_back("P_H projector");
    if (!compose(d, h.p_h).is_zero()) bad.push_back("d P_H = 0");
    if (!compose(h.p_h, d).is_zero()) bad.push_back("P_H d = 0");
    if (!compose(h.eta, h.eta).is_zero()) bad.push_back("eta eta = 0");
    if (!compose(h.eta, h.p_h).is_zero()) bad.push_back("eta P_H = 0");
    if (!compose(h.p_h, h.eta).is_zero()) bad.push_back("P_H eta = 0");
    for (const Harmonic& g : h.harmonics) {
        if (!vec_is_zero(d.apply(g.rep))) bad.push_back("harmonic " + g.label + " not closed");
        if (!(h.p_h.apply(g.rep) == g.rep)) bad.push_back("harmonic " + g.label + " not fixed by P_H");
    }
    // rank of P_H equals the number of harmonics: image isomorphic to cohomology
    if (rank(h.p_h.matrix()) != static_cast<int>(h.harmonics.size())) bad.push_back("rank P_H = dim H");
    return bad;
}

bool ObstructionForm::is_zero() const {
    for (const auto& row : table)
        for (const Vec& v : row)
            if (!vec_is_zero(v)) return false;
    return true;
}

ObstructionForm obstruction_map(const Dgla& a, const HodgeData& h) {
    if (a.space != h.space) throw std::invalid_argument("obstruction_map: incompatible Hodge data");
    ObstructionForm out;
    out.basis = h.harmonics;
    std::vector<Vec> reps;
    for (const auto& g : h.harmonics) reps.push_back(g.rep);
    out.table.resize(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) {
        out.table[i].resize(reps.size());
        for (std::size_t j = 0; j < reps.size(); ++j) {
            Vec v = h.p_h.apply(a.bracket.eval({reps[i], reps[j]}));
            auto coords = coordinates_in_span(reps, v);
            if (!coords) throw std::logic_error("obstruction_map: projection left the harmonic span");
            out.table[i][j] = *coords;
        }
    }
    return out;
}

}  // namespace linfty
