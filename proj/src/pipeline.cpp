#include "jelonek/pipeline.hpp"

#include <sstream>

#include "jelonek/dicritical.hpp"
#include "jelonek/errors.hpp"
#include "jelonek/puiseux.hpp"
#include "jelonek/resultant.hpp"
#include "jelonek/verifier.hpp"

namespace jelonek {

namespace {

const std::set<std::string> kStages{"normalize", "resultant", "puiseux", "dicritical", "verify"};

Json scalar_json(const Scalar& s) {
    if (s.is_exact()) return rat_to_string(s.rational());
    Json j = Json::array();
    j.push_back(s.ball().re.str());
    j.push_back(s.ball().im.str());
    j.push_back(s.ball().rad);
    return j;
}

Json xipoly_json(const XiPoly& p) {
    Json j;
    j["degree"] = p.degree();
    j["coeffs"] = Json::array();
    for (const auto& c : p.coeffs()) j["coeffs"].push_back(scalar_json(c));
    j["text"] = p.str();
    return j;
}

Json puiseux_json(const PuiseuxSeries& s) {
    Json j;
    j["m"] = s.m;
    j["terms"] = Json::array();
    for (const auto& [k, c] : s.terms) {
        Json t = Json::array();
        t.push_back(k);
        t.push_back(scalar_json(c));
        j["terms"].push_back(t);
    }
    j["exact"] = s.exact;
    j["expanded_to"] = s.expanded_to;
    j["multiplicity"] = s.multiplicity;
    return j;
}

Json checklist_json(const CheckList& cl, const std::string& name) {
    Json j;
    j["name"] = name;
    j["checked"] = cl.checked;
    j["ok"] = cl.all_ok();
    j["failures"] = Json::array();
    for (const auto& it : cl.items)
        if (!it.ok) j["failures"].push_back({{"what", it.what}, {"detail", it.detail}});
    return j;
}

struct CheckRow {
    std::string name;
    std::string status;  // PASS / FAIL / VACUOUS / N/A
    std::string detail;
};

Poly parse_component(const Json& input, const char* key, const std::vector<std::string>& vars) {
    if (!input.contains(key) || !input[key].is_string())
        throw input_error("input", std::string("missing polynomial field \"") + key + "\"");
    Poly raw = parse_polynomial(input[key].get<std::string>(), vars);
    // Re-label onto the engine's source coordinates.
    Poly out(source_vars());
    for (const auto& [mono, c] : raw.terms()) out.add_term(mono, c);
    return out;
}

} // namespace

void RunConfig::validate() const {
    if (precision < 64) throw input_error("config", "precision must be at least 64 bits");
    if (tol <= 0) throw input_error("config", "tolerance must be positive");
    if (max_order < 0 || depth_cap < 0) throw input_error("config", "negative cap");
    for (const auto& s : stages)
        if (!kStages.count(s)) throw input_error("config", "unknown stage: " + s);
}

bool RunConfig::wants(const std::string& stage) const {
    if (stages.empty()) return true;
    if (stages.count(stage)) return true;
    // Dependency closure: verification pulls in everything before it.
    if (stages.count("verify")) return true;
    if (stage == "normalize") return true;  // everything needs the normal form
    return false;
}

RunReport run_pipeline(const Json& input, const RunConfig& cfg) {
    RunReport rep;
    Json& doc = rep.doc;
    doc["schema"] = 1;
    cfg.validate();

    doc["config"] = {{"mode", cfg.mode == RunConfig::Mode::exact ? "exact" : "ball"},
                     {"precision", cfg.precision},
                     {"max_order", cfg.max_order},
                     {"depth_cap", cfg.depth_cap},
                     {"tol", cfg.tol},
                     {"seed", cfg.seed}};

    std::vector<CheckRow> checks;
    auto finish = [&](const std::string& status, int code) {
        Json cj = Json::array();
        bool any_fail = false;
        for (const auto& c : checks) {
            cj.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
            if (c.status == "FAIL") any_fail = true;
        }
        doc["checks"] = cj;
        if (status == "ok" && any_fail) {
            doc["status"] = "check_failed";
            rep.exit_code = 1;
        } else {
            doc["status"] = status;
            rep.exit_code = code;
        }
        return rep;
    };

    RootOptions ropts;
    ropts.prec = cfg.precision;
    ropts.force_ball = cfg.mode == RunConfig::Mode::ball;

    // ---- input + normalize -------------------------------------------------
    NormalForm nf;
    std::optional<Rational> jconst;
    try {
        std::vector<std::string> vars{"x", "y"};
        if (input.contains("vars")) {
            if (!input["vars"].is_array() || input["vars"].size() != 2)
                throw input_error("input", "vars must list exactly two names");
            vars = {input["vars"][0].get<std::string>(), input["vars"][1].get<std::string>()};
        }
        doc["input"] = {{"P", input.value("P", "")}, {"Q", input.value("Q", "")},
                        {"vars", vars}};
        PolyMap f = make_map(parse_component(input, "P", vars), parse_component(input, "Q", vars));
        Poly J = jacobian(f);
        jconst = jacobian_constancy(f);
        nf = normalize_monic(f);
        LeadingRelation lr = leading_relation_check(nf);
        doc["normalize"] = {{"lambda", nf.lambda},
                            {"P", nf.map.P.str()},
                            {"Q", nf.map.Q.str()},
                            {"A", rat_to_string(nf.A)},
                            {"B", rat_to_string(nf.B)},
                            {"K", nf.K},
                            {"d", nf.d},
                            {"e", nf.e},
                            {"jacobian", J.str()},
                            {"jacobian_constant", jconst ? Json(rat_to_string(*jconst)) : Json()}};
        doc["normalize"]["leading_relation"] =
            {{"applicable", lr.applicable}, {"holds", lr.holds}, {"ratio", rat_to_string(lr.ratio)}};
        if (lr.applicable)
            checks.push_back({"leading_relation", jconst ? (lr.holds ? "PASS" : "FAIL")
                                                         : (lr.holds ? "PASS" : "N/A"),
                              "P+^e = (B^d/A^e) Q+^d"});
        else
            checks.push_back({"leading_relation", "N/A", "degree <= 1 component"});
    } catch (const input_error& e) {
        doc["error"] = {{"code", e.code()}, {"message", e.what()}};
        return finish("input_error", 2);
    } catch (const resource_error& e) {
        doc["error"] = {{"code", e.code()}, {"message", e.what()}};
        return finish("resource_error", 3);
    }

    // ---- resultant ---------------------------------------------------------
    std::optional<ResultantData> rd;
    std::optional<R0Extract> ex;
    if (cfg.wants("resultant")) {
        try {
            rd = resultant_in_y(nf);
            ex = extract_R0(*rd);
            R0ShapeReport shape = r0_shape_check(ex->R0, nf);
            Json sec;
            sec["N"] = rd->N;
            sec["coeffs"] = Json::array();
            for (const auto& c : rd->coeffs) sec["coeffs"].push_back(c.str());
            sec["R0"] = ex->R0.str();
            sec["A_f_empty"] = ex->A_f_empty;
            Json sj = {{"applicable", shape.applicable},
                       {"M", shape.M},
                       {"C", rat_to_string(shape.C)},
                       {"leading_ok", shape.leading_ok},
                       {"support_ok", shape.support_ok},
                       {"diagnostic", shape.diagnostic}};
            sj["violating"] = Json::array();
            for (auto [i, j] : shape.violating) sj["violating"].push_back({i, j});
            sec["shape"] = sj;
            doc["resultant"] = sec;
            if (!shape.applicable)
                checks.push_back({"r0_shape", "VACUOUS", "constant R0"});
            else if (shape.leading_ok && shape.support_ok)
                checks.push_back({"r0_shape", "PASS", ""});
            else
                checks.push_back({"r0_shape", jconst ? "FAIL" : "N/A",
                                  "shape theorem needs a constant Jacobian"});
        } catch (const resource_error& e) {
            doc["resultant"] = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
            return finish("resource_error", 3);
        }
    }

    // ---- puiseux -----------------------------------------------------------
    if (cfg.wants("puiseux")) {
        try {
            PuiseuxOptions popts;
            popts.max_order =
                cfg.max_order > 0 ? cfg.max_order : nf.degP() + nf.degQ() + 4;
            popts.roots = ropts;
            auto rootsP = roots_at_infinity(nf.map.P, popts);
            auto rootsQ = roots_at_infinity(nf.map.Q, popts);
            auto fp = factorization_check(nf.map.P, rootsP, nf.A, cfg.tol, cfg.precision);
            auto fq = factorization_check(nf.map.Q, rootsQ, nf.B, cfg.tol, cfg.precision);
            Json sec;
            sec["P_roots"] = Json::array();
            for (const auto& r : rootsP) sec["P_roots"].push_back(puiseux_json(r));
            sec["Q_roots"] = Json::array();
            for (const auto& r : rootsQ) sec["Q_roots"].push_back(puiseux_json(r));
            sec["factorization"] = {{"P", {{"ok", fp.ok}, {"residual", fp.residual}}},
                                    {"Q", {{"ok", fq.ok}, {"residual", fq.residual}}}};
            doc["puiseux"] = sec;
            checks.push_back({"factorization_P", fp.ok ? "PASS" : "FAIL", fp.first_mismatch});
            checks.push_back({"factorization_Q", fq.ok ? "PASS" : "FAIL", fq.first_mismatch});
        } catch (const resource_error& e) {
            doc["puiseux"] = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
            return finish("resource_error", 3);
        }
    }

    // ---- dicritical ----------------------------------------------------------
    std::optional<DicriticalResult> dres;
    if (cfg.wants("dicritical")) {
        try {
            DicriticalOptions dopts;
            dopts.prec = cfg.precision;
            dopts.tol = cfg.tol;
            dopts.depth_cap = cfg.depth_cap;
            dopts.initial_order = cfg.max_order;
            dopts.roots = ropts;
            dres = enumerate_dicritical(nf, dopts);
            Json sec;
            sec["components"] = Json::array();
            for (const auto& c : dres->components) {
                Json cj;
                cj["phi"] = c.phi.str();
                cj["f_phi"] = Json::array({xipoly_json(c.p), xipoly_json(c.q)});
                cj["C_phi"] = c.C_phi ? scalar_json(*c.C_phi) : Json();
                cj["D_phi"] = c.D_phi ? Json(*c.D_phi) : Json();
                sec["components"].push_back(cj);
            }
            sec["node_count"] = dres->node_count;
            sec["expansion_order"] = dres->expansion_order;
            sec["lemma2"] = checklist_json(dres->lemma2, "lemma2");
            sec["lemma3"] = checklist_json(dres->lemma3, "lemma3");
            sec["assertion"] = checklist_json(dres->assertion, "assertion");
            sec["conservation"] = checklist_json(dres->conservation, "conservation");
            doc["dicritical"] = sec;
            auto ledger = [&](const CheckList& cl, const std::string& name, bool applicable) {
                if (!applicable)
                    checks.push_back({name, "N/A", "needs a constant Jacobian"});
                else if (cl.checked == 0)
                    checks.push_back({name, "VACUOUS", "no applicable nodes"});
                else
                    checks.push_back({name, cl.all_ok() ? "PASS" : "FAIL",
                                      std::to_string(cl.checked) + " identities"});
            };
            ledger(dres->lemma2, "lemma2_ledger", true);
            ledger(dres->lemma3, "lemma3_ledger", jconst.has_value());
            ledger(dres->assertion, "assertion_ledger", jconst.has_value());
            ledger(dres->conservation, "conservation_ledger", true);
        } catch (const resource_error& e) {
            doc["dicritical"] = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
            return finish("resource_error", 3);
        }
    }

    // ---- verify --------------------------------------------------------------
    if (cfg.wants("verify") && rd && dres) {
        try {
            std::mt19937_64 rng(cfg.seed);
            Theorem1Result t1 = verify_theorem1(nf, dres->components, cfg.tol);
            Cor2Result c2 = verify_cor2(nf, dres->components);
            CrossValidation cv =
                cross_validate(ex->R0, dres->components, cfg.tol, cfg.precision, rng);
            Json sec;
            sec["jacobian_constant"] = jconst ? Json(rat_to_string(*jconst)) : Json();
            sec["theorem1"] = {{"applicable", t1.applicable}, {"vacuous", t1.vacuous}};
            sec["theorem1"]["components"] = Json::array();
            for (const auto& c : t1.components)
                sec["theorem1"]["components"].push_back(
                    {{"shape_ok", c.shape_ok},
                     {"m", c.m},
                     {"C_phi", c.C_phi ? scalar_json(*c.C_phi) : Json()},
                     {"detail", c.detail}});
            sec["cor2"] = {{"applicable", c2.applicable},
                           {"one_point_at_infinity", c2.one_point_at_infinity}};
            sec["cor2"]["components"] = Json::array();
            for (const auto& c : c2.components) {
                Json cj = {{"special", c.special}, {"direction", c.direction}};
                cj["relation_head"] = c.relation_head ? Json(*c.relation_head) : Json();
                cj["relation_radical"] = c.relation_radical ? Json(*c.relation_radical) : Json();
                sec["cor2"]["components"].push_back(cj);
            }
            sec["cross_validation"] = Json::array();
            for (const auto& c : cv.components)
                sec["cross_validation"].push_back(
                    {{"ok", c.ok}, {"residual", c.residual}, {"exact_zero", c.exact_zero}});
            sec["converse_samples"] = cv.converse_checked;

            long n_numeric = -1;
            bool fibers_ok = true;
            for (int i = 0; i < 5; ++i) {
                long c = fiber_count_generic(nf, rd->N, cfg.precision, rng);
                n_numeric = c;
                if (c != rd->N) fibers_ok = false;
            }
            sec["fiber_count"] = {{"N_resultant", rd->N}, {"N_numeric", n_numeric},
                                  {"samples", 5}};
            doc["verify"] = sec;

            checks.push_back({"theorem1", !t1.applicable ? "N/A"
                                          : t1.vacuous   ? "VACUOUS"
                                          : t1.all_ok()  ? "PASS"
                                                         : "FAIL",
                              ""});
            if (!c2.applicable)
                checks.push_back({"cor2_one_point_at_infinity", "VACUOUS", "A_f empty"});
            else
                checks.push_back({"cor2_one_point_at_infinity",
                                  jconst ? (c2.one_point_at_infinity ? "PASS" : "FAIL")
                                         : (c2.one_point_at_infinity ? "PASS" : "N/A"),
                                  "informational unless the Jacobian is constant"});
            checks.push_back({"cross_validation",
                              dres->components.empty() ? "VACUOUS" : (cv.all_ok() ? "PASS" : "FAIL"),
                              ""});
            checks.push_back({"fiber_count_agreement", fibers_ok ? "PASS" : "FAIL",
                              "N = " + std::to_string(rd->N)});
            if (jconst) {
                bool coherent = (ex->A_f_empty == dres->components.empty()) &&
                                (ex->A_f_empty == t1.vacuous);
                checks.push_back({"constant_jacobian_coherence", coherent ? "PASS" : "FAIL",
                                  "R0 constant, components empty, theorem vacuous co-occur"});
            } else {
                checks.push_back({"constant_jacobian_coherence", "N/A", ""});
            }
        } catch (const resource_error& e) {
            doc["verify"] = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
            return finish("resource_error", 3);
        }
    }

    return finish("ok", 0);
}

std::string render_text(const Json& doc) {
    std::ostringstream out;
    out << "schema " << doc.value("schema", 0) << ", status " << doc.value("status", "?") << "\n";
    if (doc.contains("input"))
        out << "map: P = " << doc["input"].value("P", "") << ", Q = " << doc["input"].value("Q", "")
            << "\n";
    if (doc.contains("error"))
        out << "error: " << doc["error"].value("message", "") << "\n";
    if (doc.contains("normalize")) {
        const auto& n = doc["normalize"];
        out << "normal form: lambda = " << n.value("lambda", 0)
            << ", (K, d, e) = (" << n.value("K", 0) << ", " << n.value("d", 0) << ", "
            << n.value("e", 0) << ")"
            << ", J = " << n.value("jacobian", "") << "\n";
    }
    if (doc.contains("resultant")) {
        const auto& r = doc["resultant"];
        if (r.contains("N"))
            out << "resultant: N = " << r.value("N", 0) << ", R0 = " << r.value("R0", "")
                << (r.value("A_f_empty", false) ? " (A_f empty)" : "") << "\n";
    }
    if (doc.contains("dicritical") && doc["dicritical"].contains("components")) {
        const auto& cs = doc["dicritical"]["components"];
        out << "components: " << cs.size() << "\n";
        for (const auto& c : cs)
            out << "  f_phi = (" << c["f_phi"][0].value("text", "") << ", "
                << c["f_phi"][1].value("text", "") << ")  along  " << c.value("phi", "") << "\n";
    }
    if (doc.contains("checks")) {
        out << "checks:\n";
        for (const auto& c : doc["checks"]) {
            out << "  [" << c.value("status", "?") << "] " << c.value("name", "");
            std::string d = c.value("detail", "");
            if (!d.empty()) out << "  (" << d << ")";
            out << "\n";
        }
    }
    return out.str();
}

} // namespace jelonek
