#include "moricone/nefcert.hpp"

#include "moricone/errors.hpp"

#include <sstream>

namespace moricone::nefcert {

namespace {

[[noreturn]] void shape(const std::string& what) { throw CertificateShapeError(what); }

void check_map(const RationalMatrix& m, std::size_t from, std::size_t to, const std::string& where) {
    if (m.cols() != from || m.rows() != to)
        shape(where + ": restriction is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", expected " +
              std::to_string(to) + "x" + std::to_string(from));
}

void check_class(const std::optional<ClassVector>& v, std::size_t rank, const std::string& where) {
    if (v && v->size() != rank)
        shape(where + ": class has length " + std::to_string(v->size()) + ", stratum rank is " + std::to_string(rank));
}

StepReport test_nef(std::string label, const Stratum& s, const ClassVector& d) {
    StepReport r;
    r.label = std::move(label);
    r.stratum = s.id;
    r.tested = d;
    r.passed = true;
    for (std::size_t k = 0; k < s.oracle.size(); ++k) {
        Rational p = dot(d, s.oracle[k]);
        r.pairings.push_back(p);
        if (p < 0 && r.passed) {
            r.passed = false;
            r.witness_index = k;
            r.witness_curve = s.oracle[k];
        }
    }
    return r;
}

void record(Verdict& v, StepReport r) {
    if (!r.passed && !v.first_failure) v.first_failure = v.steps.size();
    v.steps.push_back(std::move(r));
}

void finish(Verdict& v, const std::string& conclusion) {
    v.passed = !v.first_failure.has_value();
    if (v.passed) v.conclusion = conclusion;
}

Verdict run_chain(const ChainCertificate& cert, bool final_restriction_check) {
    cert.validate();
    Verdict v;
    ClassVector d = cert.divisor;
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& st = cert.steps[i];
        d = st.restriction.apply(d);
        std::string label = "step " + std::to_string(i);
        if (st.next_class) {
            record(v, test_nef(label, st.stratum, d - *st.next_class));
        } else if (final_restriction_check) {
            record(v, test_nef(label, st.stratum, d));
        } else {
            shape(label + ": every step needs the class of the next stratum");
        }
    }
    return v;
}

}  // namespace

void Stratum::validate() const {
    for (const auto& c : oracle)
        if (c.size() != rank) shape("stratum '" + id + "': oracle curve of length " + std::to_string(c.size()) +
                                    ", rank " + std::to_string(rank));
    if (rank > 0 && oracle.empty()) shape("stratum '" + id + "' has no nef oracle");
}

void ChainCertificate::validate() const {
    if (steps.empty()) shape("chain has no strata");
    if (divisor.size() != root_rank) shape("divisor length differs from root rank");
    std::size_t prev = root_rank;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& st = steps[i];
        std::string where = "step " + std::to_string(i);
        st.stratum.validate();
        check_map(st.restriction, prev, st.stratum.rank, where);
        check_class(st.next_class, st.stratum.rank, where);
        if (i + 1 < steps.size() && !st.next_class) shape(where + ": a non-final step needs next_class");
        prev = st.stratum.rank;
    }
}

Verdict verify_chain(const ChainCertificate& cert) {
    cert.validate();
    if (cert.steps.back().next_class) shape("final step of a chain must not carry next_class");
    Verdict v = run_chain(cert, true);
    finish(v, "the divisor is nef (chain criterion)");
    return v;
}

Verdict verify_HE_hypotheses(const ChainCertificate& cert) {
    Verdict v = run_chain(cert, false);
    finish(v, "pi^*H' - E is nef on the blowup along the last stratum");
    return v;
}

void GridCertificate::validate() const {
    if (divisor.size() != root_rank) shape("divisor length differs from root rank");
    if (cells.size() != rows * cols) shape("grid has " + std::to_string(cells.size()) + " cells, expected " +
                                           std::to_string(rows * cols));
    std::size_t prev = root_rank;
    for (std::size_t i = 0; i < outer.size(); ++i) {
        const auto& st = outer[i];
        std::string where = "outer " + std::to_string(i);
        st.stratum.validate();
        check_map(st.restriction, prev, st.stratum.rank, where);
        if (!st.next_class) shape(where + ": outer steps need next_class");
        check_class(st.next_class, st.stratum.rank, where);
        prev = st.stratum.rank;
    }
    for (std::size_t u = 0; u < rows; ++u)
        for (std::size_t w = 0; w < cols; ++w) {
            const auto& c = cell(u, w);
            std::string where = "cell (" + std::to_string(u) + "," + std::to_string(w) + ")";
            c.stratum.validate();
            const std::size_t r = c.stratum.rank;
            if (u == 0 && w == 0) {
                if (!c.from_outer) shape(where + ": needs from_outer");
                check_map(*c.from_outer, prev, r, where);
            } else if (c.from_outer) {
                shape(where + ": only cell (0,0) takes from_outer");
            }
            if ((u > 0) != c.from_prev_a.has_value()) shape(where + ": from_prev_a present iff the row index is positive");
            if ((w > 0) != c.from_prev_b.has_value())
                shape(where + ": from_prev_b present iff the column index is positive");
            if (c.from_prev_a) check_map(*c.from_prev_a, cell(u - 1, w).stratum.rank, r, where);
            if (c.from_prev_b) check_map(*c.from_prev_b, cell(u, w - 1).stratum.rank, r, where);
            check_class(c.next_a, r, where);
            check_class(c.next_b, r, where);
        }
}

Verdict verify_HEF_hypotheses(const GridCertificate& cert) {
    cert.validate();
    Verdict v;
    // Composite maps from the root lattice.
    RationalMatrix acc = RationalMatrix::identity(cert.root_rank);
    for (std::size_t i = 0; i < cert.outer.size(); ++i) {
        const auto& st = cert.outer[i];
        acc = st.restriction.compose_after(acc);
        ClassVector d = acc.apply(cert.divisor);
        record(v, test_nef("outer " + std::to_string(i), st.stratum, d - *st.next_class));
    }
    std::vector<RationalMatrix> comp(cert.cells.size());
    for (std::size_t u = 0; u < cert.rows; ++u)
        for (std::size_t w = 0; w < cert.cols; ++w) {
            const auto& c = cert.cell(u, w);
            std::string label = "cell (" + std::to_string(u) + "," + std::to_string(w) + ")";
            RationalMatrix m;
            if (u == 0 && w == 0) {
                m = c.from_outer->compose_after(acc);
            } else if (u > 0) {
                m = c.from_prev_a->compose_after(comp[(u - 1) * cert.cols + w]);
                if (w > 0) {
                    RationalMatrix other = c.from_prev_b->compose_after(comp[u * cert.cols + w - 1]);
                    if (!(other == m)) shape(label + ": restriction maps along the two axes do not commute");
                }
            } else {
                m = c.from_prev_b->compose_after(comp[w - 1]);
            }
            ClassVector d = m.apply(cert.divisor);
            record(v, test_nef(label, c.stratum, d - c.next_a - c.next_b));
            comp[u * cert.cols + w] = std::move(m);
        }
    finish(v, "phi^*H'' - E - F is nef on the two-step blowup");
    return v;
}

// ---------------------------------------------------------------------------

Stratum product_stratum(const Stratum& s1, const Stratum& s2) {
    Stratum p;
    p.id = s1.id + " x " + s2.id;
    p.rank = s1.rank + s2.rank;
    for (const auto& c : s1.oracle) p.oracle.push_back(c.concat(ClassVector(s2.rank)));
    for (const auto& c : s2.oracle) p.oracle.push_back(ClassVector(s1.rank).concat(c));
    return p;
}

const FactorNode& FactorGrid::node(int p, int q) const {
    if (p < c || p > a || q < c || q > b) throw std::out_of_range("factor grid index out of range");
    return nodes[static_cast<std::size_t>((p - c) * (b - c + 1) + (q - c))];
}

void FactorGrid::validate() const {
    if (c < 0 || a < c || b < c) shape("factor grid needs 0 <= c <= a, b");
    if (outer.size() != static_cast<std::size_t>(c) + 1) shape("factor outer chain must have c + 1 strata");
    if (nodes.size() != static_cast<std::size_t>((a - c + 1) * (b - c + 1))) shape("factor grid has wrong node count");
    std::size_t prev = divisor.size();
    for (int j = 0; j <= c; ++j) {
        const auto& st = outer[static_cast<std::size_t>(j)];
        std::string where = "factor outer " + std::to_string(j);
        st.stratum.validate();
        check_map(st.restriction, prev, st.stratum.rank, where);
        if (j < c && !st.next_class) shape(where + ": needs next_class");
        check_class(st.next_class, st.stratum.rank, where);
        prev = st.stratum.rank;
    }
    if (node(c, c).stratum.rank != outer.back().stratum.rank) shape("grid corner differs from the last outer stratum");
    for (int p = c; p <= a; ++p)
        for (int q = c; q <= b; ++q) {
            const auto& n = node(p, q);
            std::string where = "factor node (" + std::to_string(p) + "," + std::to_string(q) + ")";
            n.stratum.validate();
            if ((p > c) != n.from_prev_a.has_value()) shape(where + ": from_prev_a present iff p > c");
            if ((q > c) != n.from_prev_b.has_value()) shape(where + ": from_prev_b present iff q > c");
            if (p < a && !n.next_a) shape(where + ": needs next_a");
            if (q < b && !n.next_b) shape(where + ": needs next_b");
            if (n.from_prev_a) check_map(*n.from_prev_a, node(p - 1, q).stratum.rank, n.stratum.rank, where);
            if (n.from_prev_b) check_map(*n.from_prev_b, node(p, q - 1).stratum.rank, n.stratum.rank, where);
            check_class(n.next_a, n.stratum.rank, where);
            check_class(n.next_b, n.stratum.rank, where);
        }
}

namespace {

RationalMatrix block(const RationalMatrix& m1, const RationalMatrix& m2) { return RationalMatrix::block_diagonal(m1, m2); }

RationalMatrix id(std::size_t n) { return RationalMatrix::identity(n); }

ClassVector pad_left(const ClassVector& v, std::size_t n) { return ClassVector(n).concat(v); }
ClassVector pad_right(const ClassVector& v, std::size_t n) { return v.concat(ClassVector(n)); }

// Divisor restricted along a factor's outer chain.
std::vector<ClassVector> outer_restrictions(const ClassVector& d, const std::vector<ChainStep>& steps) {
    std::vector<ClassVector> out;
    ClassVector cur = d;
    for (const auto& st : steps) {
        cur = st.restriction.apply(cur);
        out.push_back(cur);
    }
    return out;
}

// First failing oracle pairing, as text; empty when nef.
std::string nef_failure(const Stratum& s, const ClassVector& d) {
    for (std::size_t k = 0; k < s.oracle.size(); ++k) {
        Rational p = dot(d, s.oracle[k]);
        if (p < 0) {
            std::ostringstream os;
            os << "class " << d << " pairs to " << to_string(p) << " with oracle curve " << k << " on '" << s.id << "'";
            return os.str();
        }
    }
    return {};
}

struct FactorView {
    const FactorGrid& g;
    std::vector<ClassVector> outer_d;  // restricted divisor along the outer chain
    std::vector<ClassVector> node_d;   // restricted divisor on every node

    explicit FactorView(const FactorGrid& grid) : g(grid) {
        g.validate();
        outer_d = outer_restrictions(g.divisor, g.outer);
        node_d.resize(g.nodes.size());
        for (int p = g.c; p <= g.a; ++p)
            for (int q = g.c; q <= g.b; ++q) {
                const auto& n = g.node(p, q);
                ClassVector d = q > g.c   ? n.from_prev_b->apply(at(p, q - 1))
                                : p > g.c ? n.from_prev_a->apply(at(p - 1, q))
                                          : outer_d.back();
                node_d[idx(p, q)] = d;
            }
    }
    std::size_t idx(int p, int q) const { return static_cast<std::size_t>((p - g.c) * (g.b - g.c + 1) + (q - g.c)); }
    const ClassVector& at(int p, int q) const { return node_d[idx(p, q)]; }

    std::string root_nef() const { return nef_failure(g.outer[0].stratum, outer_d[0]); }
    std::string a_steps() const {
        for (int p = g.c; p < g.a; ++p) {
            const auto& n = g.node(p, g.c);
            auto f = nef_failure(n.stratum, at(p, g.c) - *n.next_a);
            if (!f.empty()) return "A-step " + std::to_string(p) + ": " + f;
        }
        return {};
    }
    std::string b_steps() const {
        for (int q = g.c; q < g.b; ++q) {
            const auto& n = g.node(g.c, q);
            auto f = nef_failure(n.stratum, at(g.c, q) - *n.next_b);
            if (!f.empty()) return "B-step " + std::to_string(q) + ": " + f;
        }
        return {};
    }
};

// Picks the first admitted alternative whose condition is empty (holds).
int choose(const CaseSelector& sel, std::initializer_list<std::pair<int, std::string>> options, const char* group) {
    std::string first_violation;
    bool any = false;
    for (const auto& [k, failure] : options) {
        if (!sel.allowed[static_cast<std::size_t>(k - 1)]) continue;
        any = true;
        if (failure.empty()) return k;
        if (first_violation.empty()) first_violation = "(" + std::to_string(k) + ") fails: " + failure;
    }
    if (!any) throw InputError(std::string("no alternative admitted for the ") + group);
    throw InputError(std::string("no admissible alternative for the ") + group + "; " + first_violation);
}

}  // namespace

ProductChain build_product_HE(const FactorChain& f1, const FactorChain& f2, const CaseSelector& sel) {
    for (const auto* f : {&f1, &f2}) {
        if (f->steps.empty()) shape("factor chain has no strata");
        for (std::size_t j = 0; j + 1 < f->steps.size(); ++j)
            if (!f->steps[j].next_class) shape("factor chain step " + std::to_string(j) + " needs next_class");
    }
    auto d1 = outer_restrictions(f1.divisor, f1.steps);
    auto d2 = outer_restrictions(f2.divisor, f2.steps);
    const std::size_t a1 = f1.steps.size() - 1, a2 = f2.steps.size() - 1;

    ProductChain out;
    out.outer_case = choose(sel,
                            {{1, nef_failure(f1.steps[0].stratum, d1[0])}, {2, nef_failure(f2.steps[0].stratum, d2[0])}},
                            "outer chain");
    const bool first_factor_first = out.outer_case == 2;

    auto& cert = out.certificate;
    cert.root_rank = f1.divisor.size() + f2.divisor.size();
    cert.divisor = f1.divisor.concat(f2.divisor);
    auto index = [&](std::size_t j) -> std::pair<std::size_t, std::size_t> {
        if (first_factor_first) return {std::min(j, a1), j > a1 ? j - a1 : 0};
        return {j > a2 ? j - a2 : 0, std::min(j, a2)};
    };
    for (std::size_t j = 0; j < a1 + a2; ++j) {
        auto [x1, x2] = index(j);
        auto [n1, n2] = index(j + 1);
        const auto& s1 = f1.steps[x1];
        const auto& s2 = f2.steps[x2];
        ChainStep st;
        st.stratum = product_stratum(s1.stratum, s2.stratum);
        if (j == 0) {
            st.restriction = block(s1.restriction, s2.restriction);
        } else {
            auto [p1, p2] = index(j - 1);
            st.restriction = x1 != p1 ? block(s1.restriction, id(s2.stratum.rank)) : block(id(s1.stratum.rank), s2.restriction);
        }
        st.next_class = n1 != x1 ? pad_right(*s1.next_class, s2.stratum.rank) : pad_left(*s2.next_class, s1.stratum.rank);
        cert.steps.push_back(std::move(st));
    }
    if (cert.steps.empty()) shape("product chain is empty: both centers are the whole factor");
    return out;
}

ProductGrid build_product_HEF(const FactorGrid& g1, const FactorGrid& g2, const CaseSelector& sel) {
    FactorView v1(g1), v2(g2);
    ProductGrid out;
    out.cases[0] = choose(sel, {{1, v1.root_nef()}, {2, v2.root_nef()}}, "outer chain");
    out.cases[1] = choose(sel, {{5, v1.b_steps()}, {6, v2.b_steps()}}, "A-chain");
    out.cases[2] = choose(sel, {{3, v1.a_steps()}, {4, v2.a_steps()}}, "B-chain");

    const int c1 = g1.c, c2 = g2.c, c = c1 + c2;
    const int a = g1.a + g2.a, b = g1.b + g2.b;

    // Index maps from product chain positions to factor positions.
    auto outer_index = [&](int j) -> std::pair<int, int> {
        if (out.cases[0] == 2) return {std::min(j, c1), std::max(0, j - c1)};
        return {std::max(0, j - c2), std::min(j, c2)};
    };
    auto a_index = [&](int j) -> std::pair<int, int> {
        if (out.cases[1] == 6) return {std::min(j - c2, g1.a), std::max(c2, j - g1.a)};
        return {std::max(c1, j - g2.a), std::min(j - c1, g2.a)};
    };
    auto b_index = [&](int k) -> std::pair<int, int> {
        if (out.cases[2] == 4) return {std::min(k - c2, g1.b), std::max(c2, k - g1.b)};
        return {std::max(c1, k - g2.b), std::min(k - c1, g2.b)};
    };
    auto outer_step = [](const FactorGrid& g, int x) -> const ChainStep& { return g.outer[static_cast<std::size_t>(x)]; };

    auto& cert = out.certificate;
    cert.root_rank = g1.divisor.size() + g2.divisor.size();
    cert.divisor = g1.divisor.concat(g2.divisor);

    // Map from outer position j-1 (or the root) to outer position j.
    auto outer_map = [&](int j) {
        auto [x1, x2] = outer_index(j);
        const auto& s1 = outer_step(g1, x1);
        const auto& s2 = outer_step(g2, x2);
        if (j == 0) return block(s1.restriction, s2.restriction);
        auto [p1, p2] = outer_index(j - 1);
        return x1 != p1 ? block(s1.restriction, id(s2.stratum.rank)) : block(id(s1.stratum.rank), s2.restriction);
    };
    for (int j = 0; j < c; ++j) {
        auto [x1, x2] = outer_index(j);
        auto [n1, n2] = outer_index(j + 1);
        const auto& s1 = outer_step(g1, x1);
        const auto& s2 = outer_step(g2, x2);
        ChainStep st;
        st.stratum = product_stratum(s1.stratum, s2.stratum);
        st.restriction = outer_map(j);
        st.next_class = n1 != x1 ? pad_right(*s1.next_class, s2.stratum.rank) : pad_left(*s2.next_class, s1.stratum.rank);
        cert.outer.push_back(std::move(st));
    }

    cert.rows = static_cast<std::size_t>(a - c);
    cert.cols = static_cast<std::size_t>(b - c);
    for (int j = c; j < a; ++j)
        for (int k = c; k < b; ++k) {
            auto [p1, p2] = a_index(j);
            auto [q1, q2] = b_index(k);
            const auto& z1 = g1.node(p1, q1);
            const auto& z2 = g2.node(p2, q2);
            const std::size_t r1 = z1.stratum.rank, r2 = z2.stratum.rank;
            GridCell cell;
            cell.stratum = product_stratum(z1.stratum, z2.stratum);
            if (j == c && k == c) cell.from_outer = outer_map(c);
            if (j > c) {
                auto [o1, o2] = a_index(j - 1);
                cell.from_prev_a = o1 != p1 ? block(*z1.from_prev_a, id(r2)) : block(id(r1), *z2.from_prev_a);
            }
            if (k > c) {
                auto [o1, o2] = b_index(k - 1);
                cell.from_prev_b = o1 != q1 ? block(*z1.from_prev_b, id(r2)) : block(id(r1), *z2.from_prev_b);
            }
            auto [na1, na2] = a_index(j + 1);
            cell.next_a = na1 != p1 ? pad_right(*z1.next_a, r2) : pad_left(*z2.next_a, r1);
            auto [nb1, nb2] = b_index(k + 1);
            cell.next_b = nb1 != q1 ? pad_right(*z1.next_b, r2) : pad_left(*z2.next_b, r1);
            cert.cells.push_back(std::move(cell));
        }
    return out;
}

ProductGrid build_product_HEF_simple(const FactorChain& f1, const FactorChain& f2, int a2, const CaseSelector& sel) {
    if (f1.steps.empty() || f2.steps.empty()) shape("factor chain has no strata");
    if (a2 < 0 || static_cast<std::size_t>(a2) >= f2.steps.size()) shape("index of A_2 lies outside the second chain");

    // Factor 1: B_1 = X_1, so c = b = 0 and the grid is the single column A_{1,p}.
    FactorGrid g1;
    g1.divisor = f1.divisor;
    g1.c = 0;
    g1.b = 0;
    g1.a = static_cast<int>(f1.steps.size()) - 1;
    g1.outer = {f1.steps[0]};
    for (int p = 0; p <= g1.a; ++p) {
        const auto& st = f1.steps[static_cast<std::size_t>(p)];
        FactorNode n{st.stratum, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
        if (p > 0) n.from_prev_a = st.restriction;
        if (p < g1.a) n.next_a = st.next_class;
        g1.nodes.push_back(std::move(n));
    }
    // Factor 2: A_2 contains B_2, so c = a = a2 and the grid is the single row B_{2,q}.
    FactorGrid g2;
    g2.divisor = f2.divisor;
    g2.c = a2;
    g2.a = a2;
    g2.b = static_cast<int>(f2.steps.size()) - 1;
    g2.outer.assign(f2.steps.begin(), f2.steps.begin() + a2 + 1);
    for (int q = a2; q <= g2.b; ++q) {
        const auto& st = f2.steps[static_cast<std::size_t>(q)];
        FactorNode n{st.stratum, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
        if (q > a2) n.from_prev_b = st.restriction;
        if (q < g2.b) n.next_b = st.next_class;
        g2.nodes.push_back(std::move(n));
    }
    return build_product_HEF(g1, g2, sel);
}

// ---------------------------------------------------------------------------

Stratum projective_space(int m) {
    if (m < 0) throw InputError("projective space of negative dimension");
    if (m == 0) return Stratum{"pt", 0, {}};
    return Stratum{"P^" + std::to_string(m), 1, {ClassVector{1}}};
}

namespace {

RationalMatrix scalar(long x) { return RationalMatrix(1, {ClassVector{x}}); }
RationalMatrix to_point(std::size_t from) { return RationalMatrix(0, from); }

}  // namespace

TsukiokaCertificates tsukioka_example(int n1, int n2, int d) {
    if (n1 < 1 || n2 < 2 || d < 1) throw InputError("the example needs n1 >= 1, n2 >= 2, d >= 1");

    // P^{n1} = A_{1,0} > A_{1,1} > ... > A_{1,n1} = point, by hyperplanes.
    FactorChain f1;
    f1.divisor = ClassVector{1};
    for (int j = 0; j <= n1; ++j) {
        ChainStep st;
        st.stratum = projective_space(n1 - j);
        st.restriction = j == 0 ? scalar(1) : (j == n1 ? to_point(1) : scalar(1));
        if (j < n1) st.next_class = ClassVector{1};
        f1.steps.push_back(std::move(st));
    }

    // P^{n2} > L_d = B_{2,1} > B_{2,2} > ... > B_{2,n2} = point, with the
    // divisor d times the hyperplane class. Surfaces and up keep the
    // hyperplane generator; the curve B_{2,n2-1} has degree d.
    FactorChain f2;
    f2.divisor = ClassVector{d};
    {
        ChainStep root;
        root.stratum = projective_space(n2);
        root.restriction = scalar(1);
        root.next_class = ClassVector{d};
        f2.steps.push_back(std::move(root));
    }
    for (int q = 1; q <= n2; ++q) {
        const int dim = n2 - q;
        ChainStep st;
        if (dim == 0) {
            st.stratum = Stratum{"pt", 0, {}};
            st.restriction = to_point(1);
        } else if (dim == 1) {
            st.stratum = Stratum{q == 1 ? "L_d" : "B_2," + std::to_string(q) + " (curve)", 1, {ClassVector{1}}};
            st.restriction = scalar(d);  // degree of the hyperplane class on the curve
            st.next_class = ClassVector{1};
        } else {
            st.stratum = Stratum{q == 1 ? "L_d" : "B_2," + std::to_string(q), 1, {ClassVector{1}}};
            st.restriction = scalar(1);
            st.next_class = ClassVector{1};
        }
        f2.steps.push_back(std::move(st));
    }

    TsukiokaCertificates out;
    // H_1 + dH_2 - E uses the chain down to A_2 = L_d only.
    FactorChain f2_he{f2.divisor, {f2.steps[0], f2.steps[1]}};
    f2_he.steps[1].next_class.reset();
    out.he = build_product_HE(f1, f2_he).certificate;
    out.hef = build_product_HEF_simple(f1, f2, 1).certificate;
    return out;
}

}  // namespace moricone::nefcert
