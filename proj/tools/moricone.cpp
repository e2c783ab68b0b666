// Command-line front end for the moricone library.

#include "moricone/blowup.hpp"
#include "moricone/certificate_io.hpp"
#include "moricone/delpezzo.hpp"
#include "moricone/errors.hpp"
#include "moricone/scenario.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace moricone;
using Json = json_io::Json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr double kDefaultBudgetSeconds = 120;

enum Exit { Verified = 0, Refuted = 1, Failure = 2 };

struct Outcome {
    Exit code = Verified;
    Json payload = Json::object();
    std::string text;  // human-readable summary
};

struct Options {
    std::string out;
    bool json = false;
    std::optional<std::size_t> budget_rays;
    std::optional<double> budget_seconds;

    Budget budget() const {
        Budget b;
        b.max_rays = budget_rays;
        if (budget_seconds) {
            b.max_seconds = budget_seconds;
        } else if (const char* env = std::getenv("MORICONE_BUDGET_SECONDS")) {
            try {
                b.max_seconds = std::stod(env);
            } catch (const std::exception&) {
                throw InputError("MORICONE_BUDGET_SECONDS is not a number: '" + std::string(env) + "'");
            }
        } else {
            b.max_seconds = kDefaultBudgetSeconds;
        }
        return b;
    }
};

Json strings(const std::vector<std::string>& v) { return Json(v); }

std::string status_name(Exit e) { return e == Verified ? "verified" : e == Refuted ? "refuted" : "error"; }

// ---------------------------------------------------------------------------

Outcome cones_relative() {
    auto rc = blowup::relative_cones();
    Outcome o;
    o.payload["pairing"] = json_io::matrix(blowup::relative_pairing());
    o.payload["rows"] = strings({"E", "F"});
    o.payload["columns"] = strings({"e", "f"});
    o.payload["nef_generators"] = json_io::vectors(rc.nef.rays());
    o.payload["ne_generators"] = json_io::vectors(rc.ne.rays());
    o.payload["dual_ne_is_nef"] = rc.dual_ne_is_nef;
    o.payload["dual_nef_is_ne"] = rc.dual_nef_is_ne;
    if (!rc.verified()) {
        o.code = Refuted;
        auto eq = cones_equal(dual(rc.ne), rc.nef);
        if (eq.witness) o.payload["witness"] = json_io::vector(*eq.witness);
    }
    std::ostringstream os;
    os << "        e    f\n";
    os << "  E   -1    0\n";
    os << "  F    1   -1\n";
    os << "Nef(X/Y) = cone(-E, -E-F), NE(X/Y) = cone(e, f): "
       << (rc.verified() ? "mutually dual" : "NOT dual") << "\n";
    o.text = os.str();
    return o;
}

Outcome classify_construction(int a, int b, const std::vector<int>& cs, bool a_in_b, bool b_in_a) {
    blowup::ConstructionParams p;
    p.a = a;
    p.b = b;
    p.components = cs;
    p.a_subset_b = a_in_b;
    p.b_subset_a = b_in_a;
    auto r = blowup::classify(p);
    Outcome o;
    o.payload["a"] = a;
    o.payload["b"] = b;
    o.payload["components"] = cs;
    o.payload["contraction"] = r.contraction_type();
    o.payload["small"] = r.is_small;
    o.payload["K_extremal"] = r.is_K_extremal;
    o.payload["K_dot_e"] = r.K_dot_e;
    o.payload["K_dot_f"] = r.K_dot_f;
    o.payload["exceptional_component_codims"] = r.exceptional_component_codims;
    o.payload["target"] = r.target_description;
    o.payload["modification"] = blowup::to_string(r.birational_modification);
    std::ostringstream os;
    os << "contraction: " << r.contraction_type() << (r.is_K_extremal ? ", K-extremal" : ", not K-extremal") << "\n"
       << "K.e = " << r.K_dot_e << ", K.f = " << r.K_dot_f << "\n"
       << "target: " << r.target_description << "\n"
       << "modification: " << blowup::to_string(r.birational_modification) << "\n";
    o.text = os.str();
    return o;
}

Json pairing_json(const scenario::CurvePairing& p) { return Json{{"curve", p.curve}, {"value", json_io::rational(p.value)}}; }

Json feasibility_json(const LinearProgram& lp, const Feasibility& f) {
    Json j;
    j["feasible"] = f.feasible;
    Json cs = Json::array();
    for (const auto& c : lp.constraints)
        cs.push_back({{"label", c.label},
                      {"functional", json_io::vector(c.functional)},
                      {"relation", to_string(c.relation)},
                      {"bound", json_io::rational(c.bound)}});
    j["constraints"] = cs;
    if (f.feasible) {
        j["point"] = json_io::vector(f.point);
        j["point_valid"] = f.point_valid(lp);
    } else {
        Json m = Json::array();
        for (const auto& x : f.multipliers) m.push_back(json_io::rational(x));
        j["multipliers"] = m;
        auto ex = f.expand(lp);
        j["combination"] = {{"functional", json_io::vector(ex.functional)},
                            {"relation", ex.strict ? ">" : ">="},
                            {"bound", json_io::rational(ex.bound)}};
        j["certificate_valid"] = f.certificate_valid(lp);
    }
    return j;
}

Json classification_json(const scenario::ClassificationResult& c) {
    Json j;
    j["r1"] = c.r1;
    j["r2"] = c.r2;
    j["fano"] = c.fano;
    j["weak_fano"] = c.weak_fano;
    j["fano_type"] = c.fano_type;
    Json mk = Json::array();
    for (const auto& p : c.minus_k) mk.push_back(pairing_json(p));
    j["minus_K"] = mk;
    if (!c.delta_certificate.empty()) {
        Json dc = Json::array();
        for (const auto& p : c.delta_certificate) dc.push_back(pairing_json(p));
        j["delta_certificate"] = dc;
        j["delta_passes"] = c.delta_passes;
    }
    if (c.not_fano_witness) j["not_fano_witness"] = pairing_json(*c.not_fano_witness);
    if (c.not_weak_fano_witness) j["not_weak_fano_witness"] = pairing_json(*c.not_weak_fano_witness);
    if (c.not_fano_type_certificate) {
        auto r = scenario::not_fano_type_refutation(scenario::build_scenario(c.r1, c.r2));
        j["not_fano_type_certificate"] = feasibility_json(r.system, r.verdict);
        j["relaxed_system"] = feasibility_json(r.relaxed, r.relaxed_verdict);
    }
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

std::string verdict_word(const scenario::ClassificationResult& c) {
    return c.fano ? "Fano" : c.weak_fano ? "weak Fano" : "neither";
}

Outcome dp_scenario(int r1, int r2, bool verify_cones, bool do_classify, const Options& opt) {
    auto s = scenario::build_scenario(r1, r2);
    Outcome o;
    o.payload["r1"] = r1;
    o.payload["r2"] = r2;
    o.payload["basis"] = s.basis_names();
    Json curves = Json::array();
    for (const auto& c : s.curves()) curves.push_back({{"name", c.name}, {"vector", json_io::vector(c.vector)}});
    o.payload["ne_generators"] = curves;
    Json t = Json::array();
    for (const auto& d : scenario::t_divisors(s)) t.push_back({{"name", d.name}, {"class", json_io::vector(d.coefficients)}});
    o.payload["T"] = t;

    std::ostringstream os;
    os << "scenario (" << r1 << "," << r2 << "), Picard rank " << s.rank() << ", " << s.curves().size()
       << " NE generators, " << scenario::t_divisors(s).size() << " divisors in T\n";

    if (verify_cones) {
        auto v = scenario::verify_theorem(s, opt.budget());
        Json j;
        j["containment"] = v.containment;
        j["containment_method"] = v.containment_method;
        j["equality"] = scenario::to_string(v.equality);
        j["dual_ray_count"] = v.dual_ray_count;
        j["claimed_ray_count"] = v.claimed_ray_count;
        if (v.containment_witness) j["witness"] = {{"containment", *v.containment_witness}};
        if (v.equality_witness)
            j["witness"] = {{"generator", json_io::vector(*v.equality_witness)},
                            {"side", v.witness_in_dual_of_ne ? "dual(NE) ray outside the claimed cone"
                                                             : "claimed generator outside dual(NE)"}};
        if (v.budget_message) j["budget"] = *v.budget_message;
        o.payload["cones"] = j;
        if (v.refuted()) o.code = Refuted;
        else if (!v.verified()) o.code = Failure;
        os << "containment Nef claimed in dual(NE): " << (v.containment ? "yes" : "NO") << " (" << v.containment_method
           << ")\n"
           << "equality: " << scenario::to_string(v.equality);
        if (v.equality == scenario::EqualityStatus::Equal) os << " (" << v.dual_ray_count << " rays)";
        os << "\n";
    }
    if (do_classify) {
        auto c = scenario::classify(s);
        o.payload["classification"] = classification_json(c);
        os << "classification: " << verdict_word(c) << (c.fano_type ? ", Fano type" : ", not Fano type") << "\n";
        for (const auto& n : c.notes) os << "note: " << n << "\n";
    }
    o.text = os.str();
    return o;
}

Outcome dp_classify_all(const std::string& format) {
    auto grid = scenario::classify_all();
    Outcome o;
    Json cells = Json::array();
    for (const auto& row : grid)
        for (const auto& c : row) cells.push_back(classification_json(c));
    o.payload["cells"] = cells;
    std::ostringstream os;
    if (format == "md") {
        os << "| r1 \\ r2 |";
        for (int r2 = 0; r2 <= 8; ++r2) os << " " << r2 << " |";
        os << "\n|---|";
        for (int r2 = 0; r2 <= 8; ++r2) os << "---|";
        os << "\n";
        for (std::size_t r1 = 0; r1 < grid.size(); ++r1) {
            os << "| " << r1 << " |";
            for (const auto& c : grid[r1]) os << " " << (c.fano ? "Fano" : c.weak_fano ? "weak Fano" : "-") << " |";
            os << "\n";
        }
        os << "\nweak Fano and Fano type coincide in every cell; '-' is neither.\n";
    } else {
        os << o.payload.dump(2) << "\n";
    }
    o.text = os.str();
    return o;
}

Outcome dp_minus_one(int r) {
    delpezzo::Lattice x(r);
    auto classes = delpezzo::minus_one_classes(x);
    Outcome o;
    o.payload["r"] = r;
    o.payload["basis"] = x.basis_names();
    o.payload["count"] = classes.size();
    o.payload["classes"] = json_io::vectors(classes);
    std::ostringstream os;
    os << classes.size() << " (-1)-classes on the plane blown up at " << r << " points\n";
    for (const auto& c : classes) os << "  " << c << "\n";
    o.text = os.str();
    return o;
}

Json failure_witness(const nefcert::Verdict& v) {
    const auto& s = v.steps[*v.first_failure];
    Json w{{"step", s.label}, {"stratum", s.stratum}, {"tested", json_io::vector(s.tested)}};
    if (s.witness_curve) w["curve"] = json_io::vector(*s.witness_curve);
    if (s.witness_index) w["pairing"] = json_io::rational(s.pairings[*s.witness_index]);
    return w;
}

std::string verdict_text(const nefcert::Verdict& v) {
    std::ostringstream os;
    for (const auto& s : v.steps) os << "  " << s.label << " on " << s.stratum << ": " << (s.passed ? "ok" : "FAILS") << "\n";
    os << (v.passed ? "verified: " + v.conclusion : "refuted") << "\n";
    return os.str();
}

Outcome cert_verify(const std::string& path) {
    auto doc = nefcert::load_certificate(path);
    auto v = nefcert::verify(doc);
    Outcome o;
    o.payload["file"] = path;
    o.payload["kind"] = doc.kind;
    o.payload["verdict"] = nefcert::to_json(v);
    if (!v.passed) {
        o.code = Refuted;
        o.payload["witness"] = failure_witness(v);
    }
    o.text = verdict_text(v);
    return o;
}

Outcome cert_example(int n1, int n2, int d, const std::string& write_dir) {
    auto ex = nefcert::tsukioka_example(n1, n2, d);
    auto he = nefcert::verify_HE_hypotheses(ex.he);
    auto hef = nefcert::verify_HEF_hypotheses(ex.hef);
    Outcome o;
    o.payload["n1"] = n1;
    o.payload["n2"] = n2;
    o.payload["d"] = d;
    o.payload["he"] = nefcert::to_json(he);
    o.payload["hef"] = nefcert::to_json(hef);
    if (!he.passed || !hef.passed) {
        o.code = Refuted;
        o.payload["witness"] = failure_witness(he.passed ? hef : he);
    }
    if (!write_dir.empty()) {
        std::filesystem::create_directories(write_dir);
        const std::string stem = write_dir + "/example_" + std::to_string(n1) + "_" + std::to_string(n2) + "_" +
                                 std::to_string(d);
        std::ofstream(stem + "_he.json") << nefcert::to_json(ex.he, "he").dump(2) << "\n";
        std::ofstream(stem + "_hef.json") << nefcert::to_json(ex.hef).dump(2) << "\n";
        o.payload["written"] = strings({stem + "_he.json", stem + "_hef.json"});
    }
    std::ostringstream os;
    os << "H1+" << d << "H2-E:\n" << verdict_text(he) << "H1+" << d << "H2-E-F:\n" << verdict_text(hef);
    o.text = os.str();
    return o;
}

std::vector<int> parse_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw InputError("--c expects a comma-separated list of integers, got '" + text + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cone and nefness verifier for two-step blowups"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--out", opt.out, "Also write the JSON report to this file");
    app.add_flag("--json", opt.json, "Print the JSON report instead of a summary");
    app.add_option("--budget-rays", opt.budget_rays, "Ray budget for dualizations");
    app.add_option("--budget-seconds", opt.budget_seconds,
                   "Time budget for dualizations (default: MORICONE_BUDGET_SECONDS, else 120)");

    std::function<Outcome()> action;

    auto* cones = app.add_subcommand("cones", "Relative cones of the two-step blowup");
    cones->require_subcommand(1);
    cones->add_subcommand("relative", "Check that Nef(X/Y) and NE(X/Y) are dual")->callback([&] {
        action = [] { return cones_relative(); };
    });

    auto* cls = app.add_subcommand("classify", "Classify contractions");
    cls->require_subcommand(1);
    auto* construction = cls->add_subcommand("construction", "Contraction type for centers of codimension a and b");
    int a = 0, b = 0;
    std::string clist;
    bool a_in_b = false, b_in_a = false;
    construction->add_option("--a", a, "Codimension of A''")->required();
    construction->add_option("--b", b, "Codimension of B''")->required();
    construction->add_option("--c", clist, "Comma-separated c_i for the components of A'' n B''")->required();
    construction->add_flag("--a-in-b", a_in_b, "A'' is contained in B''");
    construction->add_flag("--b-in-a", b_in_a, "B'' is contained in A'' (rejected)");
    construction->callback([&] { action = [&] { return classify_construction(a, b, parse_list(clist), a_in_b, b_in_a); }; });

    auto* dp = app.add_subcommand("dp", "Products of del Pezzo surfaces");
    dp->require_subcommand(1);
    auto* sc = dp->add_subcommand("scenario", "One product scenario");
    int r1 = 0, r2 = 0;
    bool verify_cones = false, do_classify = false;
    sc->add_option("--r1", r1, "Points blown up on the first factor (0..3)")->required();
    sc->add_option("--r2", r2, "Points blown up on the second factor (0..8)")->required();
    sc->add_flag("--verify-cones", verify_cones, "Check Nef = dual(NE)");
    sc->add_flag("--classify", do_classify, "Fano / weak Fano / Fano type");
    sc->callback([&] { action = [&] { return dp_scenario(r1, r2, verify_cones, do_classify, opt); }; });

    auto* all = dp->add_subcommand("classify-all", "Classification for every (r1, r2)");
    std::string format = "md";
    all->add_option("--format", format, "md or json")->check(CLI::IsMember({"md", "json"}));
    all->callback([&] { action = [&] { return dp_classify_all(format); }; });

    auto* mo = dp->add_subcommand("minus-one", "(-1)-classes of a del Pezzo surface");
    int r = 0;
    mo->add_option("--r", r, "Number of points (0..8)")->required();
    mo->callback([&] { action = [&] { return dp_minus_one(r); }; });

    auto* cert = app.add_subcommand("cert", "Nefness certificates");
    cert->require_subcommand(1);
    auto* cv = cert->add_subcommand("verify", "Verify a certificate file");
    std::string path;
    cv->add_option("FILE", path, "Certificate JSON")->required();
    cv->callback([&] { action = [&] { return cert_verify(path); }; });
    auto* ce = cert->add_subcommand("example-tsukioka", "Build and verify the worked example on P^n1 x P^n2");
    int n1 = 2, n2 = 2, d = 2;
    std::string write_dir;
    ce->add_option("--n1", n1)->required();
    ce->add_option("--n2", n2)->required();
    ce->add_option("--d", d)->required();
    ce->add_option("--write-dir", write_dir, "Write the two certificates as JSON into this directory");
    ce->callback([&] { action = [&] { return cert_example(n1, n2, d, write_dir); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return Failure;
    }

    Json report;
    report["tool"] = "moricone";
    report["version"] = kVersion;
    report["command"] = std::vector<std::string>(argv + 1, argv + argc);
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = action();
    } catch (const Error& e) {
        o.code = Failure;
        o.payload = {{"error", e.what()}};
        o.text = std::string("error: ") + e.what() + "\n";
    } catch (const std::exception& e) {
        o.code = Failure;
        o.payload = {{"error", e.what()}};
        o.text = std::string("error: ") + e.what() + "\n";
    }
    report["status"] = status_name(o.code);
    report["payload"] = o.payload;
    report["timing"] = {{"seconds", std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()}};

    if (opt.json) std::cout << report.dump(2) << "\n";
    else (o.code == Failure ? std::cerr : std::cout) << o.text;
    if (!opt.out.empty()) {
        std::ofstream f(opt.out);
        if (!f) {
            std::cerr << "error: cannot write " << opt.out << "\n";
            return Failure;
        }
        f << report.dump(2) << "\n";
    }
    return o.code;
}
