#include "moricone/blowup.hpp"

#include "moricone/errors.hpp"

#include <algorithm>

namespace moricone::blowup {

namespace {

void check_abc(int a, int b, int c) {
    if (a < 1 || b < 1) throw InputError("codimensions must be positive");
    if (c < 1 || c > std::min(a, b))
        throw InputError("defect c=" + std::to_string(c) + " outside 1..min(a,b)=" + std::to_string(std::min(a, b)));
}

std::string projective(int n) { return "P^" + std::to_string(n); }

}  // namespace

void ConstructionParams::validate() const {
    if (a < 2) throw InputError("a must be at least 2");
    if (b < 2) throw InputError("b must be at least 2");
    if (components.empty()) throw InputError("Z'' must have at least one component");
    for (int c : components) {
        check_abc(a, b, c);
        // c = a makes that component of Z'' all of B'', i.e. B'' inside A''.
        if (c == a) throw InputError("defect c=a forces B'' inside A'', which the construction excludes");
    }
    if (b_subset_a) throw InputError("B'' contained in A'' is excluded by the construction");
    bool has_full = std::any_of(components.begin(), components.end(), [&](int c) { return c == b; });
    if (a_subset_b != has_full)
        throw InputError(a_subset_b ? "A'' in B'' requires a component with c = b"
                                    : "a component with c = b means A'' lies in B''; pass the inclusion flag");
}

std::string to_string(Modification m) {
    switch (m) {
        case Modification::Flip: return "flip";
        case Modification::Flop: return "flop";
        case Modification::None: return "none";
    }
    return "none";
}

RationalMatrix relative_pairing() { return RationalMatrix(2, {ClassVector{-1, 0}, ClassVector{1, -1}}); }

ClassVector curve_e() { return ClassVector{-1, 1}; }
ClassVector curve_f() { return ClassVector{0, -1}; }

RelativeCones relative_cones() {
    std::vector<ClassVector> curves{curve_e(), curve_f()};
    std::vector<ClassVector> divisors{ClassVector{-1, 0}, ClassVector{-1, -1}};
    PolyCone ne = cone_from_rays(2, curves);
    PolyCone nef = cone_from_rays(2, divisors);
    RelativeCones out{nef, ne};
    out.dual_ne_is_nef = cones_equal(dual(cone_from_rays(2, ne.rays())), nef).equal;
    out.dual_nef_is_ne = cones_equal(dual(cone_from_rays(2, nef.rays())), ne).equal;
    return out;
}

std::pair<int, int> k_degree(const ConstructionParams& params) {
    params.validate();
    ClassVector k{params.a - 1, params.b - 1};
    int ke = static_cast<int>(dot(k, curve_e()).get_num().get_si());
    int kf = static_cast<int>(dot(k, curve_f()).get_num().get_si());
    return {ke, kf};
}

ContractionReport classify(const ConstructionParams& params) {
    params.validate();
    ContractionReport r;
    int max_c = *std::max_element(params.components.begin(), params.components.end());
    r.is_small = max_c < params.b;
    r.is_K_extremal = params.a > params.b;
    std::tie(r.K_dot_e, r.K_dot_f) = k_degree(params);
    for (int c : params.components) r.exceptional_component_codims.push_back(params.b - c + 1);
    r.target_description = "blowup of X'' along A''+B''";
    if (r.is_small && params.a > params.b) r.birational_modification = Modification::Flip;
    else if (r.is_small && params.a == params.b) r.birational_modification = Modification::Flop;
    return r;
}

int total_multiplicity(const DegreeMultiset& m) {
    int t = 0;
    for (const auto& [deg, mult] : m) t += mult;
    return t;
}

DegreeMultiset conormal_linear(int n, int c) {
    if (c < 0 || c > n) throw InputError("linear subspace codimension must lie in 0..n");
    DegreeMultiset m;
    if (c > 0) m[-1] = c;
    return m;
}

DegreeMultiset conormal_fiber(int dim_a) {
    if (dim_a < 0) throw InputError("center dimension must be nonnegative");
    DegreeMultiset m{{1, 1}};
    if (dim_a > 0) m[0] = dim_a;
    return m;
}

DegreeMultiset conormal_restricted(int a, int b, int c) {
    check_abc(a, b, c);
    DegreeMultiset m;
    if (b > c) m[0] = b - c;
    m[-1] = c;
    return m;
}

std::string FiberStructure::w_description() const {
    return "blowup of " + projective(w_ambient_dim) + " along a linear " + projective(w_ambient_dim - w_center_codim);
}

std::string FiberStructure::f_description() const {
    return projective(f_fiber_dim) + "-bundle over " + projective(f_base_dim);
}

FiberStructure fiber_structure(int a, int b, int c) {
    check_abc(a, b, c);
    if (c == a) throw InputError("defect c=a leaves the fiber center empty");
    FiberStructure f;
    f.w_ambient_dim = a - 1;
    f.w_center_codim = c;
    f.f_fiber_dim = b - 1;
    f.f_base_dim = a - 1 - c;
    f.component_count = b == c ? 1 : 2;
    return f;
}

FiberNefness minus_EF_nef_on_fiber(int a, int b, int c) {
    FiberNefness out;
    for (const auto& [deg, mult] : conormal_restricted(a, b, c)) out.twisted[deg + 1] += mult;
    out.nef = std::all_of(out.twisted.begin(), out.twisted.end(), [](const auto& kv) { return kv.first >= 0; });
    return out;
}

}  // namespace moricone::blowup
