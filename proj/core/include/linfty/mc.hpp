#pragma once

#include "linfty/artin.hpp"
#include "linfty/deform.hpp"
#include "linfty/series.hpp"
#include "linfty/transfer.hpp"

namespace linfty {

/// Maurer-Cartan residual sum_k sign(k)/k! mu_k(Gamma,..,Gamma) truncated at
/// the given order, with the sign pattern +, +1/2!, -1/3!, -1/4!, ...
/// Zero iff Gamma solves the Maurer-Cartan equation mod t^{order+1}.
FormalSeries mc_residual(const LInfinityStructure& l, const FormalSeries& gamma, int order);

/// The versal recursion: Gamma_1 is the tautological harmonic term, and
/// Gamma_m = -1/2 eta(sum_{k} [Gamma_k, Gamma_{m-k}]).
FormalSeries versal_solution(const Dgla& a, const HodgeData& h, const ParameterFrame& frame, int order);

/// The defining relation of the versal solution:
/// Gamma + 1/2 eta[Gamma, Gamma] equals the tautological linear term.
bool kuranishi_relation_holds(const Dgla& a, const HodgeData& h, const ParameterFrame& frame,
                              const FormalSeries& gamma);

/// Polynomial generators of the classical locus P_H[Gamma, Gamma] = 0, one
/// per harmonic direction that receives a nonzero coefficient.
struct LocusIdeal {
    VarFramePtr vars;
    std::vector<int> caps;
    std::vector<std::pair<std::string, GradedPoly>> generators;
    bool is_zero() const { return generators.empty(); }
};

LocusIdeal kuranishi_locus(const Dgla& a, const HodgeData& h, const FormalSeries& gamma, int order);

/// Membership in the degree-truncated ideal: f lies in the span of
/// monomial multiples of the generators. Exact linear algebra.
bool poly_in_ideal(const GradedPoly& f, const LocusIdeal& ideal);
bool series_in_ideal(const FormalSeries& s, const LocusIdeal& ideal);

/// Coefficientwise verification that, modulo the locus ideal and the
/// truncation, the full Maurer-Cartan equation of the induced structure
/// degenerates into the classical one.
struct DegenerationReport {
    bool mu2_matches_bracket = false;
    std::map<int, bool> higher_vanish;  // arity -> vanishes mod ideal
    bool residual_classical = false;
    bool pass() const {
        if (!mu2_matches_bracket || !residual_classical) return false;
        for (const auto& [n, ok] : higher_vanish)
            if (!ok) return false;
        return true;
    }
};

DegenerationReport degeneration_check(const LInfinityStructure& l, const Dgla& a, const FormalSeries& gamma,
                                      const LocusIdeal& ideal, int order);

/// Symbolic verification, on generic coefficients in g tensor m, that the
/// Kuranishi map k(Gamma) = Gamma + 1/2 eta[Gamma, Gamma] is bijective with
/// Newton-type inverse, and that Gamma solves the induced Maurer-Cartan
/// equation exactly when d k(Gamma) = 0.
struct KuranishiBijectionReport {
    bool roundtrip = false;          // newton inverse undoes the map and back
    bool forward_identity = false;   // d k(Gamma) = R(Gamma) - eta[R(Gamma), Gamma]
    bool kernel_direction = false;   // generic d-closed elements pull back into MC
    bool tangent_linearized = true;  // nil index 2: the MC condition is d Gamma = 0
    bool pass() const { return roundtrip && forward_identity && kernel_direction && tangent_linearized; }
};

KuranishiBijectionReport kuranishi_bijection_check(const Dgla& a, const HomogeneousMap& eta,
                                                   const ArtinAlgebra& b);

/// Value at Gamma of the bracket of the homological field with the constant
/// field attached to a degree-0 vector. The sign of the identification with
/// g is pinned by the abelian case, where the direction is d alpha.
FormalSeries gauge_direction(const LInfinityStructure& l, const FormalSeries& gamma, const Vec& alpha,
                             int order);

/// Tangency: the directional derivative of the residual along the gauge
/// direction vanishes modulo the residual's own coefficient ideal and the
/// truncation. With a Maurer-Cartan Gamma the derivative vanishes outright.
bool gauge_tangency_holds(const LInfinityStructure& l, const FormalSeries& gamma, const Vec& alpha,
                          int order);

/// Everything the moduli pipeline produces for one algebra.
struct ModuliReport {
    char mode = '0';
    int order = 0;
    int max_arity = 0;
    std::map<int, int> betti;
    int moduli_dim = 0;
    std::vector<std::string> coordinates;
    ObstructionForm obstruction;
    ParameterFrame frame;
    FormalSeries versal;
    bool versal_relation = false;
    bool residual_zero = false;
    LocusIdeal locus;
    DegenerationReport degeneration;
    StructureReport induced_check;
    bool obstruction_zero = false;
    bool h2_zero = false;
    bool mdef_equals_def = false;  // vanishing obstructions shortcut
    bool pass() const;
};

ModuliReport moduli_report(const Dgla& a, const HodgeData& h, char mode, int order, int max_arity);

}  // namespace linfty
