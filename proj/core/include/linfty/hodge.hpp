#pragma once

#include "linfty/dgla.hpp"
#include "linfty/homogeneous_map.hpp"

namespace linfty {

/// One chosen cohomology representative.
struct Harmonic {
    std::string label;
    int degree = 0;
    Vec rep;
};

/// Projection and homotopy witnessing Id = P_H + d eta + eta d, together
/// with the chosen harmonic representatives.
struct HodgeData {
    GradedSpace space;
    HomogeneousMap p_h;  // degree 0
    HomogeneousMap eta;  // degree -1
    std::vector<Harmonic> harmonics;

    int betti(int degree) const;
    std::vector<int> harmonic_indices(int degree) const;
};

/// Exact-arithmetic Hodge data for a finite complex: per degree, row
/// reduction picks the pivot-column complement C of ker d, the images d(C)
/// span im d with canonical preimages, and the kernel is extended greedily
/// over im d to a harmonic complement H. eta inverts d from im d back to C
/// and kills H and C; this particular construction also satisfies
/// eta eta = 0, eta P_H = 0 and P_H eta = 0.
/// Throws when d does not have degree +1 or does not square to zero.
HodgeData build_hodge_data(const GradedSpace& space, const HomogeneousMap& d);

/// All defining identities, checked exactly. Returns the failures by name.
std::vector<std::string> hodge_violations(const HodgeData& h, const HomogeneousMap& d);

/// Induced pairing on cohomology: entries P_H[rep_a, rep_b] expanded in the
/// harmonic basis. Zero iff the obstructions vanish.
struct ObstructionForm {
    std::vector<Harmonic> basis;
    std::vector<std::vector<Vec>> table;  // table[a][b]: harmonic coordinates
    bool is_zero() const;
};

ObstructionForm obstruction_map(const Dgla& a, const HodgeData& h);

}  // namespace linfty
