#pragma once

#include "moricone/ratcone.hpp"

#include <map>
#include <string>
#include <vector>

namespace moricone::blowup {

/// Numerical data of two smooth centers A'' and B'' of codimensions a and b.
/// Each component of Z'' = A'' n B'' has codimension a + b - c_i.
struct ConstructionParams {
    int a = 2;
    int b = 2;
    std::vector<int> components{1};
    bool a_subset_b = false;
    bool b_subset_a = false;

    /// Throws InputError on any violated constraint.
    void validate() const;
};

enum class Modification { Flip, Flop, None };
std::string to_string(Modification m);

struct ContractionReport {
    bool is_small = false;
    bool is_K_extremal = false;
    int K_dot_e = 0;
    int K_dot_f = 0;
    std::vector<int> exceptional_component_codims;
    std::string target_description;
    Modification birational_modification = Modification::None;

    std::string contraction_type() const { return is_small ? "small" : "divisorial"; }
};

/// Rows (E, F), columns (e, f).
RationalMatrix relative_pairing();

/// Intersection vectors of e and f against (E, F).
ClassVector curve_e();
ClassVector curve_f();

struct RelativeCones {
    PolyCone nef;  // divisor coefficients over (E, F)
    PolyCone ne;   // curve intersection vectors
    bool dual_ne_is_nef = false;
    bool dual_nef_is_ne = false;

    bool verified() const { return dual_ne_is_nef && dual_nef_is_ne; }
};

RelativeCones relative_cones();

/// (K.e, K.f) from K = pullback + (a-1)E + (b-1)F.
std::pair<int, int> k_degree(const ConstructionParams& params);

ContractionReport classify(const ConstructionParams& params);

/// Degree -> multiplicity.
using DegreeMultiset = std::map<int, int>;

int total_multiplicity(const DegreeMultiset& m);

DegreeMultiset conormal_linear(int n, int c);
DegreeMultiset conormal_fiber(int dim_a);
DegreeMultiset conormal_restricted(int a, int b, int c);

struct FiberStructure {
    int w_ambient_dim = 0;   // W_z blows up P^{a-1}
    int w_center_codim = 0;  // along a linear subspace of codimension c
    int f_fiber_dim = 0;     // F_z is a P^{b-1}-bundle
    int f_base_dim = 0;      // over P^{a-1-c}
    int component_count = 0;

    std::string w_description() const;
    std::string f_description() const;
};

FiberStructure fiber_structure(int a, int b, int c);

struct FiberNefness {
    bool nef = false;
    DegreeMultiset twisted;
};

/// Twists conormal_restricted by O(1) and tests every degree is >= 0.
FiberNefness minus_EF_nef_on_fiber(int a, int b, int c);

}  // namespace moricone::blowup
