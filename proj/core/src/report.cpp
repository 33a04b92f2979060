#include "adegree/report.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>

#include "adegree/budget.hpp"
#include "adegree/parse.hpp"

namespace adegree {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kSchema = "adegree/1";
constexpr const char* kVersion = "1.0.0";

json point_json(const ProjPoint& p) {
    json arr = json::array();
    for (const auto& c : p.coords()) arr.push_back(c.get_str());
    return arr;
}

json rats_json(const std::vector<Rat>& v) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(to_string(q));
    return arr;
}

json doubles_json(const std::vector<double>& v) {
    json arr = json::array();
    for (double x : v) arr.push_back(x);
    return arr;
}

json ints_json(const std::vector<Int>& v) {
    json arr = json::array();
    for (const auto& x : v) arr.push_back(x.get_str());
    return arr;
}

json header(const ExperimentConfig& config) {
    json j;
    j["schema"] = kSchema;
    j["command"] = config.command;
    json inputs;
    if (!config.map_source.empty()) inputs["map"] = config.map_source;
    if (!config.catalog_id.empty()) inputs["catalog"] = config.catalog_id;
    if (!config.matrix.empty()) inputs["matrix"] = config.matrix;
    if (!config.points.empty()) {
        json pts = json::array();
        for (const auto& p : config.points) pts.push_back(rats_json(p));
        inputs["points"] = pts;
    }
    if (!config.params.empty()) {
        json ps;
        for (const auto& [k, v] : config.params) ps[k] = to_string(v);
        inputs["params"] = ps;
    }
    if (config.max_n > 0) inputs["n"] = config.max_n;
    if (config.prime) inputs["prime"] = config.prime->get_str();
    if (!config.kind.empty()) inputs["kind"] = config.kind;
    inputs["seed"] = config.seed;
    j["inputs"] = inputs;
    return j;
}

ProjPoint point_for_map(const RationalMap& f, const std::vector<Rat>& coords) {
    std::size_t nv = static_cast<std::size_t>(f.num_vars());
    if (coords.size() == nv) return ProjPoint::from_rationals(coords);
    if (coords.size() + 1 == nv) return ProjPoint::from_affine(coords);
    throw std::invalid_argument("point arity does not match the map");
}

json delta_json(const DeltaEstimate& est) {
    json j;
    j["best"] = est.value();
    j["method"] = to_string(est.method);
    if (est.exact) {
        j["exact"] = *est.exact;
        switch (*est.exact_source) {
            case ExactDeltaSource::StableDegree: j["exact_source"] = "stable-degree"; break;
            case ExactDeltaSource::MonomialSpectral: j["exact_source"] = "monomial-spectral"; break;
            case ExactDeltaSource::Catalog: j["exact_source"] = "catalog"; break;
        }
    }
    j["root_estimates"] = doubles_json(est.root_estimates);
    j["ratio_estimates"] = doubles_json(est.ratio_estimates);
    return j;
}

json boundary_json(const BoundaryOrbit& orbit) {
    json j;
    j["verdict"] = orbit.stable() ? "STABLE" : "UNSTABLE";
    if (!orbit.stable()) j["unstable_step"] = orbit.unstable_step;
    if (orbit.cycle_period > 0) j["cycle_period"] = orbit.cycle_period;
    j["heuristic"] = orbit.heuristic;
    j["note"] = orbit.note;
    json steps = json::array();
    for (const auto& v : orbit.varieties) {
        switch (v.kind) {
            case BoundaryKind::Line: steps.push_back("LINE"); break;
            case BoundaryKind::Curve: steps.push_back("CURVE " + v.description); break;
            case BoundaryKind::Point: steps.push_back("POINT " + v.description); break;
            case BoundaryKind::Empty: steps.push_back("EMPTY"); break;
        }
    }
    j["varieties"] = steps;
    return j;
}

json alpha_json(const AlphaEstimate& est) {
    json j;
    j["best"] = est.best;
    j["upper"] = est.upper;
    j["lower"] = est.lower;
    j["method"] = to_string(est.method);
    j["window"] = est.window;
    j["per_step_roots"] = doubles_json(est.per_step_roots);
    return j;
}

json certificate_json(const GrowthCertificate& cert, const RationalMap& f) {
    json j;
    j["map"] = map_to_string(f);
    j["point"] = cert.point.to_string();
    j["prime"] = cert.spec.prime.get_str();
    j["kind"] = to_string(cert.spec.kind);
    j["lowerBound"] = cert.lower_bound;
    j["growthLaw"] = to_string(cert.growth_law);
    j["verifiedSteps"] = cert.verified_steps;
    j["pass"] = cert.pass;
    if (!cert.pass) j["failed_step"] = cert.failed_step;
    j["message"] = cert.message;
    return j;
}

std::string orbit_csv(const OrbitProfile& profile, double delta) {
    std::ostringstream out;
    out << "n,h,h_over_delta_n,root_estimate\n";
    double dn = 1.0;
    for (std::size_t n = 0; n < profile.heights.size(); ++n) {
        double h = profile.heights[n];
        out << n << "," << h << "," << (h / dn) << ",";
        if (n >= 1) out << std::pow(std::max(1.0, h), 1.0 / static_cast<double>(n));
        out << "\n";
        dn *= delta;
    }
    return out.str();
}

int default_n(const ExperimentConfig& config, const RationalMap& f) {
    if (config.max_n > 0) return config.max_n;
    return f.degree() >= 3 ? 8 : 12;
}

// --- command implementations ----------------------------------------------

ReportDocument cmd_degseq(const ExperimentConfig& config) {
    ReportDocument doc;
    RationalMap f = resolve_map(config);
    int n = default_n(config, f);

    DegreeSequence seq = degree_sequence(f, n);
    BoundaryOrbit boundary = f.num_vars() == 3 && f.extends_affine()
                                 ? stability_analysis(f)
                                 : BoundaryOrbit{};
    bool have_boundary = f.num_vars() == 3 && f.extends_affine();
    std::optional<ExactDeltaHint> hint;
    if (have_boundary && boundary.stable() && !boundary.heuristic)
        hint = ExactDeltaHint{static_cast<double>(f.degree()), ExactDeltaSource::StableDegree};
    DeltaEstimate delta = delta_estimate(seq, hint);

    json j = header(config);
    json results;
    results["map"] = map_to_string(f);
    results["degree"] = f.degree();
    results["degrees"] = ints_json(seq.degs);
    results["truncated"] = seq.truncated;
    if (seq.truncated) results["truncation_reason"] = seq.truncation_reason;
    results["delta"] = delta_json(delta);
    if (have_boundary) results["stability"] = boundary_json(boundary);
    j["results"] = results;
    j["pass"] = true;
    j["versions"] = {{"adegree", kVersion}};
    doc.json = j;

    std::ostringstream text;
    text << "map: " << map_to_string(f) << "\n";
    text << "deg(f^n) for n = 1.." << seq.degs.size() << ":";
    for (const auto& d : seq.degs) text << " " << d.get_str();
    text << (seq.truncated ? "  (truncated: " + seq.truncation_reason + ")" : "") << "\n";
    text << "delta estimate: " << delta.value() << " (" << to_string(delta.method) << ")";
    if (delta.exact) text << " [exact]";
    text << "\n";
    if (have_boundary)
        text << "stability: " << (boundary.stable() ? "STABLE" : "UNSTABLE") << " — "
             << boundary.note << "\n";
    doc.text = text.str();
    return doc;
}

ReportDocument cmd_stable(const ExperimentConfig& config) {
    ReportDocument doc;
    RationalMap f = resolve_map(config);
    BoundaryOrbit orbit = stability_analysis(f, config.max_n > 0 ? config.max_n : 16);

    json j = header(config);
    json results;
    results["map"] = map_to_string(f);
    results["stability"] = boundary_json(orbit);
    j["results"] = results;
    j["pass"] = true;
    j["versions"] = {{"adegree", kVersion}};
    doc.json = j;

    std::ostringstream text;
    text << "map: " << map_to_string(f) << "\n";
    text << "verdict: " << (orbit.stable() ? "STABLE" : "UNSTABLE");
    if (!orbit.stable()) text << "(" << orbit.unstable_step << ")";
    if (orbit.cycle_period > 0) text << " cycle period " << orbit.cycle_period;
    text << "\n" << orbit.note << "\n";
    doc.text = text.str();
    return doc;
}

ReportDocument cmd_alpha(const ExperimentConfig& config) {
    ReportDocument doc;
    RationalMap f = resolve_map(config);
    if (config.points.empty()) throw std::invalid_argument("alpha needs --point");
    int n = default_n(config, f);

    DegreeSequence seq = degree_sequence(f, n);
    std::optional<ExactDeltaHint> hint;
    if (f.num_vars() == 3 && f.extends_affine()) {
        BoundaryOrbit boundary = stability_analysis(f);
        if (boundary.stable() && !boundary.heuristic)
            hint = ExactDeltaHint{static_cast<double>(f.degree()), ExactDeltaSource::StableDegree};
    }
    if (config.delta_override > 0)
        hint = ExactDeltaHint{config.delta_override, ExactDeltaSource::Catalog};
    DeltaEstimate delta = delta_estimate(seq, hint);
    double tol = config.tolerance >= 0 ? config.tolerance : default_inequality_tolerance(delta);

    json j = header(config);
    json per_point = json::array();
    std::ostringstream text;
    text << "map: " << map_to_string(f) << "\n";
    text << "delta: " << delta.value() << (delta.exact ? " (exact)" : " (estimate)") << "\n";

    // Orbits for distinct points are independent; fan them out when asked.
    std::vector<OrbitProfile> profiles;
    if (config.parallel && config.points.size() > 1) {
        std::vector<std::future<OrbitProfile>> futures;
        for (const auto& coords : config.points) {
            futures.push_back(std::async(std::launch::async, [&f, coords, n] {
                return orbit_profile(f, point_for_map(f, coords), n);
            }));
        }
        for (auto& fut : futures) profiles.push_back(fut.get());
    } else {
        for (const auto& coords : config.points)
            profiles.push_back(orbit_profile(f, point_for_map(f, coords), n));
    }

    for (std::size_t idx = 0; idx < config.points.size(); ++idx) {
        OrbitProfile& profile = profiles[idx];
        ProjPoint P = profile.start;
        json entry;
        entry["point"] = point_json(P);
        entry["heights"] = doubles_json(profile.heights);
        entry["truncated"] = profile.truncated;
        if (profile.truncated) {
            entry["truncation_step"] = profile.truncation_step;
            entry["truncation_reason"] =
                profile.reason == OrbitProfile::Reason::Indeterminacy ? "indeterminacy" : "budget";
        }
        text << "point " << P.to_string() << ": ";
        if (static_cast<int>(profile.points.size()) >= std::max(4, config.window + 2)) {
            AlphaEstimate alpha = alpha_estimate(profile, config.window);
            InequalityVerdict verdict = check_fundamental_inequality(alpha, delta, tol);
            entry["alpha"] = alpha_json(alpha);
            entry["fundamental_inequality"] = {
                {"pass", verdict.pass},
                {"margin", verdict.margin},
                {"tolerance", verdict.tolerance},
            };
            doc.all_pass = doc.all_pass && verdict.pass;
            text << "alpha ~ " << alpha.best << " [" << alpha.lower << ", " << alpha.upper
                 << "], inequality " << (verdict.pass ? "PASS" : "FAIL") << "\n";
            doc.csv += orbit_csv(profile, delta.value());
        } else {
            entry["alpha"] = nullptr;
            entry["note"] = "orbit too short for an estimate";
            text << "orbit truncated at step " << profile.truncation_step << "\n";
        }
        per_point.push_back(entry);
    }
    j["results"] = {{"map", map_to_string(f)}, {"delta", delta_json(delta)},
                    {"points", per_point}};
    j["pass"] = doc.all_pass;
    j["versions"] = {{"adegree", kVersion}};
    doc.json = j;
    doc.text = text.str();
    return doc;
}

ReportDocument cmd_hcanon(const ExperimentConfig& config) {
    ReportDocument doc;
    RationalMap f = resolve_map(config);
    if (config.points.empty()) throw std::invalid_argument("hcanon needs --point");
    int n = default_n(config, f);

    double delta = config.delta_override > 0 ? config.delta_override
                                             : static_cast<double>(f.degree());

    json j = header(config);
    json per_point = json::array();
    std::ostringstream text;
    text << "map: " << map_to_string(f) << ", delta = " << delta << "\n";
    for (const auto& coords : config.points) {
        ProjPoint P = point_for_map(f, coords);
        OrbitProfile profile = orbit_profile(f, P, n);
        json entry;
        entry["point"] = point_json(P);
        CanonicalEstimate plus = canonical_plus(profile, f.degree());
        entry["canonical_plus"] = {{"value", plus.value},
                                   {"cauchy_constant", plus.cauchy_constant},
                                   {"samples", doubles_json(plus.samples)}};
        text << "point " << P.to_string() << ": h+ = " << plus.value;
        if (delta > 1.0) {
            CanonicalEstimate weak = weak_lower_canonical(profile, delta);
            entry["weak_lower"] = {{"value", weak.value},
                                   {"delta", delta},
                                   {"samples", doubles_json(weak.samples)},
                                   {"flag", "ESTIMATE"}};
            text << ", hcirc >= " << weak.value << " (estimate)";
            doc.csv += orbit_csv(profile, delta);
        }
        text << "\n";
        per_point.push_back(entry);
    }
    j["results"] = {{"map", map_to_string(f)}, {"points", per_point}};
    j["pass"] = true;
    j["versions"] = {{"adegree", kVersion}};
    doc.json = j;
    doc.text = text.str();
    return doc;
}

ReportDocument cmd_hcirc(const ExperimentConfig& config) {
    ReportDocument doc;
    RationalMap f = resolve_map(config);
    if (config.points.empty()) throw std::invalid_argument("hcirc needs --point");
    if (config.delta_override <= 1.0)
        throw std::invalid_argument("hcirc needs --delta > 1");
    int n = config.max_n > 0 ? config.max_n : 8;

    json j = header(config);
    json per_point = json::array();
    std::ostringstream text;
    text << "map: " << map_to_string(f) << ", m = " << config.m << "\n";
    for (const auto& coords : config.points) {
        ProjPoint P = point_for_map(f, coords);
        IterateIdentityReport rep = hcirc_iterate_identity(f, P, config.m, n,
                                                           config.delta_override);
        bool ok = rep.relative_discrepancy <= (config.tolerance >= 0 ? config.tolerance : 1e-2);
        doc.all_pass = doc.all_pass && ok;
        json entry;
        entry["point"] = point_json(P);
        entry["lhs"] = rep.lhs;
        entry["rhs"] = rep.rhs;
        entry["rhs_terms"] = doubles_json(rep.rhs_terms);
        entry["relative_discrepancy"] = rep.relative_discrepancy;
        entry["truncated"] = rep.truncated;
        entry["pass"] = ok;
        per_point.push_back(entry);
        text << "point " << P.to_string() << ": lhs " << rep.lhs << " rhs " << rep.rhs
             << " rel " << rep.relative_discrepancy << (ok ? " PASS" : " FAIL") << "\n";
    }
    j["results"] = {{"map", map_to_string(f)}, {"points", per_point}};
    j["pass"] = doc.all_pass;
    j["versions"] = {{"adegree", kVersion}};
    doc.json = j;
    doc.text = text.str();
    return doc;
}

ReportDocument cmd_monomial(const ExperimentConfig& config) {
    ReportDocument doc;
    if (config.matrix.empty()) throw std::invalid_argument("monomial needs a matrix");
    IntMatrix a = parse_int_matrix(config.matrix);
    MonomialMap m = make_monomial_map(a);
    int n = config.max_n > 0 ? config.max_n : 20;

    json j = header(config);
    json results;
    results["matrix"] = matrix_to_string(a);
    results["char_poly"] = ints_json(m.char_poly);
    results["delta"] = {{"lo", m.spectral_radius.lo},
                        {"hi", m.spectral_radius.hi},
                        {"width", m.spectral_radius.width()}};
    std::ostringstream text;
    text << "matrix " << matrix_to_string(a) << "\n";
    text << "char poly coefficients (lambda^N..1):";
    for (const auto& c : m.char_poly) text << " " << c.get_str();
    text << "\ndelta = [" << m.spectral_radius.lo << ", " << m.spectral_radius.hi << "]\n";

    json per_point = json::array();
    for (const auto& coords : config.points) {
        ExponentOrbit orbit = monomial_orbit(a, coords, n);
        MonomialAlphaReport rep = monomial_alpha_check(orbit, a,
                                                       config.tolerance >= 0 ? config.tolerance
                                                                             : 0.05);
        doc.all_pass = doc.all_pass && rep.pass;
        json entry;
        entry["point"] = rats_json(coords);
        entry["heights"] = doubles_json(orbit.heights);
        entry["alpha"] = rep.alpha;
        entry["nearest_eigenvalue_modulus"] = rep.nearest_eigenvalue_modulus;
        entry["distance"] = rep.distance;
        entry["torsion"] = rep.torsion;
        entry["pass"] = rep.pass;
        per_point.push_back(entry);
        text << "point (" << to_string(coords[0]);
        for (std::size_t i = 1; i < coords.size(); ++i) text << ", " << to_string(coords[i]);
        text << "): alpha ~ " << rep.alpha << ", nearest eigenvalue modulus "
             << rep.nearest_eigenvalue_modulus << " (distance " << rep.distance << ") "
             << (rep.pass ? "PASS" : "FAIL") << "\n";
    }
    results["points"] = per_point;
    j["results"] = results;
    j["pass"] = doc.all_pass;
    j["versions"] = {{"adegree", kVersion}};
    doc.json = j;
    doc.text = text.str();
    return doc;
}

NeighborhoodKind kind_from_string(const std::string& kind) {
    if (kind == "fixed-point") return NeighborhoodKind::FixedPointU;
    if (kind == "case3") return NeighborhoodKind::Case3U;
    if (kind == "case11") return NeighborhoodKind::Case11Set;
    if (kind == "case32") return NeighborhoodKind::Case32Set;
    throw std::invalid_argument("unknown certificate kind: " + kind);
}

ReportDocument cmd_certify(const ExperimentConfig& config) {
    ReportDocument doc;
    RationalMap f = resolve_map(config);
    if (config.points.empty()) throw std::invalid_argument("certify needs --point");
    if (config.kind.empty()) throw std::invalid_argument("certify needs --kind");
    int n = config.max_n > 0 ? config.max_n : 10;

    RationalMap target = config.period > 1 ? map_iterate(f, config.period) : f;
    NeighborhoodKind kind = kind_from_string(config.kind);
    Int p = config.prime ? *config.prime : choose_prime(target);
    if (config.prime && !is_prime(*config.prime))
        throw std::invalid_argument("invalid prime");

    json j = header(config);
    json per_point = json::array();
    std::ostringstream text;
    text << "map: " << map_to_string(target);
    if (config.period > 1) text << " (iterate " << config.period << ")";
    text << ", p = " << p.get_str() << ", kind = " << config.kind << "\n";
    for (const auto& coords : config.points) {
        if (static_cast<std::size_t>(target.num_vars()) != coords.size() + 1)
            throw std::invalid_argument("certify expects affine points");
        NeighborhoodSpec spec{p, kind, target.degree()};
        GrowthCertificate cert = certify(target, coords, spec, n);
        doc.all_pass = doc.all_pass && cert.pass;
        per_point.push_back(certificate_json(cert, target));
        text << "point (" << to_string(coords[0]) << ", " << to_string(coords[1])
             << "): " << (cert.pass ? "PASS" : "FAIL") << " lower bound " << cert.lower_bound
             << " [" << cert.message << "]\n";
    }
    j["results"] = {{"certificates", per_point}};
    j["pass"] = doc.all_pass;
    j["versions"] = {{"adegree", kVersion}};
    doc.json = j;
    doc.text = text.str();
    return doc;
}

json case_report_json(const CaseReport& report) {
    json entry;
    entry["case"] = report.item.case_id;
    entry["formula"] = report.item.formula;
    json params;
    for (const auto& [k, v] : report.item.parameters) params[k] = to_string(v);
    entry["parameters"] = params;
    entry["map"] = map_to_string(report.item.map);
    entry["expected_delta"] = report.item.delta_description;
    entry["delta_estimate"] = report.delta.value();
    json checks = json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    entry["checks"] = checks;
    entry["pass"] = report.pass;
    return entry;
}

ReportDocument cmd_catalog(const ExperimentConfig& config) {
    ReportDocument doc;
    json j = header(config);
    std::ostringstream text;

    if (config.catalog_id.empty() || config.catalog_id == "list") {
        json cases = json::array();
        for (const auto& id : guedj_case_ids()) {
            GuedjCase gc = guedj(id);
            cases.push_back({{"case", id},
                             {"formula", gc.formula},
                             {"condition", gc.condition},
                             {"delta", gc.delta_description},
                             {"representative", gc.representative}});
            text << id << ": " << gc.formula << "  [delta = " << gc.delta_description << "]\n";
        }
        json examples = json::array();
        for (const auto& name : example_names()) {
            PaperExample ex = example(name);
            examples.push_back({{"name", name},
                                {"map", map_to_string(ex.map)},
                                {"delta", ex.delta_description},
                                {"degree_law", ex.degree_law_description}});
            text << name << ": " << map_to_string(ex.map) << "  [deg(f^n) = "
                 << ex.degree_law_description << "]\n";
        }
        j["results"] = {{"cases", cases}, {"examples", examples}};
        j["pass"] = true;
    } else {
        std::vector<std::string> ids;
        if (config.catalog_id == "all") ids = guedj_case_ids();
        else ids.push_back(config.catalog_id);

        json reports = json::array();
        auto run_one = [&](const std::string& id) {
            return verify_case(guedj(id, config.params), config.max_n,
                               config.tolerance >= 0 ? config.tolerance : 1e-2);
        };
        std::vector<CaseReport> results;
        if (config.parallel && ids.size() > 1) {
            std::vector<std::future<CaseReport>> futures;
            for (const auto& id : ids)
                futures.push_back(std::async(std::launch::async, run_one, id));
            for (auto& fut : futures) results.push_back(fut.get());
        } else {
            for (const auto& id : ids) results.push_back(run_one(id));
        }
        for (const auto& report : results) {
            doc.all_pass = doc.all_pass && report.pass;
            reports.push_back(case_report_json(report));
            text << "case " << report.item.case_id << ": "
                 << (report.pass ? "PASS" : "FAIL") << "  delta " << report.delta.value()
                 << " (expected " << report.item.delta_description << ")\n";
            for (const auto& c : report.checks)
                text << "  - " << c.name << ": " << (c.pass ? "ok" : "FAIL") << " (" << c.detail
                     << ")\n";
        }
        j["results"] = {{"reports", reports}};
        j["pass"] = doc.all_pass;
    }
    j["versions"] = {{"adegree", kVersion}};
    doc.json = j;
    doc.text = text.str();
    return doc;
}

ReportDocument cmd_report(const ExperimentConfig& config) {
    ReportDocument doc;
    RationalMap f = resolve_map(config);
    json j = header(config);
    j["defaults"] = defaults_json();

    ExperimentConfig sub = config;
    sub.command = "degseq";
    ReportDocument degseq = cmd_degseq(sub);
    json results;
    results["degseq"] = degseq.json["results"];
    if (!config.points.empty()) {
        sub.command = "alpha";
        ReportDocument alpha = cmd_alpha(sub);
        results["alpha"] = alpha.json["results"];
        doc.all_pass = doc.all_pass && alpha.all_pass;
        doc.csv = alpha.csv;
    }
    j["results"] = results;
    j["pass"] = doc.all_pass;
    j["versions"] = {{"adegree", kVersion}};
    doc.json = j;
    doc.text = degseq.text;
    return doc;
}

} // namespace

std::string ReportDocument::rendered(OutputFormat format) const {
    switch (format) {
        case OutputFormat::Json: return json.dump(2) + "\n";
        case OutputFormat::Csv: return csv.empty() ? "n,h,h_over_delta_n,root_estimate\n" : csv;
        case OutputFormat::Text: return text;
    }
    return text;
}

RationalMap resolve_map(const ExperimentConfig& config) {
    if (!config.map_source.empty()) return parse_map(config.map_source);
    if (!config.catalog_id.empty()) {
        auto ids = guedj_case_ids();
        if (std::find(ids.begin(), ids.end(), config.catalog_id) != ids.end())
            return guedj(config.catalog_id, config.params).map;
        auto names = example_names();
        if (std::find(names.begin(), names.end(), config.catalog_id) != names.end())
            return example(config.catalog_id, config.params).map;
        throw std::invalid_argument("unknown catalog entry: " + config.catalog_id);
    }
    throw std::invalid_argument("no map given (use a DSL string or --catalog)");
}

nlohmann::ordered_json defaults_json() {
    json d;
    d["budget_bits"] = coefficient_bit_budget();
    d["max_n_quadratic"] = 12;
    d["max_n_cubic"] = 8;
    d["window"] = "half of the profile";
    d["inequality_tolerance_estimated"] = 0.05;
    d["inequality_tolerance_exact"] = 1e-9;
    d["catalog_tolerance"] = 1e-2;
    d["certificate_steps"] = 10;
    d["seed"] = 0;
    return d;
}

ReportDocument run_command(const ExperimentConfig& config) {
    if (config.command == "degseq") return cmd_degseq(config);
    if (config.command == "alpha") return cmd_alpha(config);
    if (config.command == "hcanon") return cmd_hcanon(config);
    if (config.command == "hcirc") return cmd_hcirc(config);
    if (config.command == "stable") return cmd_stable(config);
    if (config.command == "monomial") return cmd_monomial(config);
    if (config.command == "certify") return cmd_certify(config);
    if (config.command == "catalog") return cmd_catalog(config);
    if (config.command == "report") return cmd_report(config);
    throw std::invalid_argument("unknown command: " + config.command);
}

} // namespace adegree
