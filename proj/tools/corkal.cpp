// corkal: exact verification CLI for the 2-bridge family invariants.
//
// Subcommands: alex, classify, equiv, product, recover, verify, homology, snf.
// Every command prints a human-readable line followed by a single-line JSON
// report (or only the JSON with --json-only).  Exit codes:
//   0 ok, 2 parse error, 3 unsupported parameters, 4 budget exceeded,
//   5 ambiguity or collision found.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corkal/alexander.hpp"
#include "corkal/constellation.hpp"
#include "corkal/family_search.hpp"
#include "corkal/homology.hpp"
#include "corkal/json_io.hpp"
#include "corkal/twobridge.hpp"
#include "corkal/verify.hpp"

namespace {

using namespace corkal;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitBudget = 4;
constexpr int kExitCollision = 5;

struct GlobalOpts {
    bool json_only = false;
    bool no_meta = false;
    unsigned jobs = 0;
};

void emit(const GlobalOpts& g, const std::string& human, const Json& j) {
    if (!g.json_only) std::cout << human << "\n";
    std::cout << j.dump() << "\n";
}

std::pair<long long, long long> parse_family_pair(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ParseError("family parameters must be written m,n");
    size_t i = 0;
    long long m = 0, n = 0;
    const std::string ms = s.substr(0, comma), ns = s.substr(comma + 1);
    if (!detail::parse_ll(ms, i, m) || i != ms.size())
        throw ParseError("bad family parameter '" + ms + "'");
    i = 0;
    if (!detail::parse_ll(ns, i, n) || i != ns.size())
        throw ParseError("bad family parameter '" + ns + "'");
    return {m, n};
}

std::vector<long long> parse_tuple(const std::string& s, int k) {
    std::vector<long long> tuple;
    size_t i = 0;
    while (true) {
        detail::skip_ws(s, i);
        long long v = 0;
        if (!detail::parse_ll(s, i, v)) throw ParseError("bad tuple entry in '" + s + "'");
        tuple.push_back(v);
        detail::skip_ws(s, i);
        if (i == s.size()) break;
        if (s[i] != ',') throw ParseError("tuple entries must be comma-separated");
        ++i;
    }
    if (k > 0 && tuple.size() != static_cast<size_t>(k))
        throw ParseError("tuple length does not match k");
    return tuple;
}

Json poly_report(const LaurentPoly& poly) {
    Json j;
    j["poly"] = to_text(poly);
    j["coefficients"] = poly_to_json(poly);
    j["determinant"] = Int(boost::multiprecision::abs(evaluate_int(poly, -1))).str();
    const auto [lo, hi] = degree_span(poly);
    j["degree_span"] = Json::array({lo, hi});
    j["normalized"] = to_text(conway_normalize(poly));
    return j;
}

int cmd_alex(const GlobalOpts& g, const std::string& family, const std::string& cf_text,
             const std::string& twist, bool have_twist) {
    const int given = int(!family.empty()) + int(!cf_text.empty()) + int(have_twist);
    if (given != 1) throw ParseError("alex needs exactly one of --family, --cf, --twist");
    LaurentPoly poly;
    Json j;
    if (!family.empty()) {
        const auto [m, n] = parse_family_pair(family);
        poly = delta_closed(m, n);
        j = poly_report(poly);
        j["family"] = Json::array({m, n});
        j["cf"] = to_text(family_cf(m, n));
    } else if (have_twist) {
        size_t i = 0;
        long long k = 0;
        if (!detail::parse_ll(twist, i, k) || i != twist.size())
            throw ParseError("bad twist parameter '" + twist + "'");
        poly = delta_closed(0, k);
        j = poly_report(poly);
        j["cf"] = to_text(twist_knot_cf(k));
    } else {
        const auto cf = parse_cf(cf_text);
        poly = alex_from_seifert(seifert_from_cf(cf));
        j = poly_report(poly);
        j["cf"] = to_text(cf);
    }
    emit(g, to_text(poly), j);
    return kExitOk;
}

int cmd_classify(const GlobalOpts& g, const std::string& family) {
    const auto [m, n] = parse_family_pair(family);
    const auto cls = classify(m, n);
    const auto cf = family_cf(m, n);
    const auto frac = fraction_from_cf(cf);
    std::string label;
    Json j;
    switch (cls.kind) {
        case KnotClass::Unknot: label = "unknot"; break;
        case KnotClass::TorusKnot:
            label = "torus T(2," + std::to_string(cls.torus_q) + ")";
            break;
        case KnotClass::LeftTrefoil: label = "left trefoil T(2,-3)"; break;
        case KnotClass::NonTorus2Bridge: label = "non-torus 2-bridge knot"; break;
    }
    j["family"] = Json::array({m, n});
    j["class"] = label;
    if (cls.kind == KnotClass::TorusKnot || cls.kind == KnotClass::LeftTrefoil)
        j["torus"] = Json::array({2, cls.kind == KnotClass::LeftTrefoil ? -3 : cls.torus_q});
    j["fraction"] = to_text(frac);
    j["cf"] = to_text(cf);
    emit(g, label + "  (fraction " + to_text(frac) + ")", j);
    return kExitOk;
}

int cmd_equiv(const GlobalOpts& g, const std::string& a_text, const std::string& b_text) {
    const auto a = parse_fraction(a_text);
    const auto b = parse_fraction(b_text);
    const bool eq = equivalent(a, b);
    Json j;
    j["a"] = to_text(a);
    j["b"] = to_text(b);
    j["equivalent"] = eq;
    emit(g, eq ? "equivalent" : "distinct", j);
    return kExitOk;
}

int cmd_product(const GlobalOpts& g, int k, const std::string& tuple_text) {
    const auto tuple = parse_tuple(tuple_text, k);
    const auto sig = sw_product(k, std::span<const long long>(tuple));
    Json j;
    j["k"] = sig.k;
    j["tuple"] = sig.tuple;
    j["common_factor"] = sig.common_factor;
    j["product"] = to_text(sig.product);
    j["coefficients"] = poly_to_json(sig.product);
    const auto [lo, hi] = degree_span(sig.product);
    j["degree_span"] = Json::array({lo, hi});
    emit(g, sig.common_factor + " * (" + to_text(sig.product) + ")", j);
    return kExitOk;
}

int cmd_recover(const GlobalOpts& g, int k, const std::string& poly_text, long long bound) {
    const auto poly = parse_poly(poly_text);
    const auto rec = recover_tuple(k, poly, bound);
    Json j;
    j["k"] = k;
    j["bound"] = bound;
    switch (rec.status) {
        case RecoverResult::Found: {
            j["status"] = "found";
            j["tuple"] = rec.tuple;
            emit(g, detail::tuple_text(rec.tuple), j);
            return kExitOk;
        }
        case RecoverResult::NoSolution: {
            j["status"] = "no-solution";
            emit(g, "NoSolution", j);
            return kExitOk;
        }
        case RecoverResult::Ambiguous: {
            j["status"] = "ambiguous";
            j["witnesses"] = Json::array({rec.tuple, rec.second_witness});
            emit(g,
                 "Ambiguous: " + detail::tuple_text(rec.tuple) + " and " +
                     detail::tuple_text(rec.second_witness),
                 j);
            return kExitCollision;
        }
    }
    return kExitFailure;
}

Json report_to_json(const GlobalOpts& g, const VerificationReport& rep) {
    Json j;
    j["suite"] = rep.suite;
    j["cases"] = rep.cases;
    Json fails = Json::array();
    for (const auto& f : rep.failures) {
        Json jf;
        jf["case"] = f.case_id;
        jf["expected"] = f.expected;
        jf["got"] = f.got;
        fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
    if (!g.no_meta) j["wall_time_ms"] = rep.wall_time_ms;
    return j;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, int k, long long bound) {
    std::vector<VerificationReport> reports;
    InjectivityReport inj;
    if (suite == "lemma" || suite == "all") reports.push_back(run_lemma_suite());
    if (suite == "claim" || suite == "all")
        reports.push_back(run_claim_suite(k, bound, g.jobs, &inj));
    if (suite == "crosscheck" || suite == "all") reports.push_back(run_crosscheck_suite());
    if (suite == "homology" || suite == "all") reports.push_back(run_homology_suite());
    if (reports.empty())
        throw ParseError("unknown suite '" + suite + "' (lemma|claim|crosscheck|homology|all)");

    Json out;
    bool any_failure = false, any_collision = false;
    std::string human;
    Json jreports = Json::array();
    for (const auto& rep : reports) {
        Json j = report_to_json(g, rep);
        if (rep.suite == "claim") {
            // claim reports carry the box parameters and the collision groups
            const Json jinj = injectivity_to_json(inj);
            j["k"] = jinj["k"];
            j["bound"] = jinj["bound"];
            j["count"] = jinj["count"];
            j["collisions"] = jinj["collisions"];
        }
        jreports.push_back(std::move(j));
        any_failure |= !rep.ok();
        any_collision |= rep.collision_found;
        human += rep.suite + ": " + std::to_string(rep.cases) + " cases, " +
                 std::to_string(rep.failures.size()) + " failures\n";
    }
    if (reports.size() == 1) {
        out = std::move(jreports[0]);
    } else {
        out["suite"] = "all";
        out["reports"] = std::move(jreports);
    }
    if (!human.empty()) human.pop_back();
    emit(g, human, out);
    if (any_collision) return kExitCollision;
    return any_failure ? kExitFailure : kExitOk;
}

int cmd_homology(const GlobalOpts& g, const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw ParseError("cannot open '" + path + "'");
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw ParseError("malformed JSON in '" + path + "'");
    const auto complex = complex_from_json(j);
    const auto h = homology_of(complex);
    const Json out = homology_to_json(h, complex);
    std::string human = "betti (";
    for (size_t i = 0; i < h.groups.size(); ++i)
        human += (i ? "," : "") + std::to_string(h.groups[i].betti);
    human += ")";
    emit(g, human, out);
    return kExitOk;
}

int cmd_snf(const GlobalOpts& g, const std::string& path, const std::string& inline_matrix,
            bool full) {
    Json j;
    if (!inline_matrix.empty()) {
        j = Json::parse(inline_matrix, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed inline matrix JSON");
    } else if (!path.empty()) {
        std::ifstream in(path);
        if (!in.good()) throw ParseError("cannot open '" + path + "'");
        j = Json::parse(in, nullptr, false);
        if (j.is_discarded()) throw ParseError("malformed JSON in '" + path + "'");
    } else {
        throw ParseError("snf needs --file or --matrix");
    }
    const auto a = matrix_from_json(j);
    const auto snf = smith_normal_form(a);
    Json out;
    out["rows"] = a.rows();
    out["cols"] = a.cols();
    Json diag = Json::array();
    std::string human = "diagonal (";
    const auto d = snf.diagonal();
    for (size_t i = 0; i < d.size(); ++i) {
        diag.push_back(d[i].str());
        human += (i ? "," : "") + d[i].str();
    }
    human += ")";
    out["diagonal"] = std::move(diag);
    out["factorization_ok"] = (snf.u * snf.s * snf.v == a);
    if (full) {
        out["u"] = matrix_to_json(snf.u);
        out["s"] = matrix_to_json(snf.s);
        out["v"] = matrix_to_json(snf.v);
    }
    emit(g, human, out);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic toolkit for 2-bridge knot families and their invariants"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json-only", g.json_only, "suppress the human-readable line");
    app.add_flag("--no-meta", g.no_meta, "omit wall-clock fields for byte-stable output");
    app.add_option("--jobs", g.jobs, "worker threads (0 = all cores)");
    // let the global flags appear after the subcommand as well
    app.fallthrough();

    auto* alex = app.add_subcommand("alex", "Alexander polynomial of a family member or CF");
    std::string alex_family, alex_cf, alex_twist;
    alex->add_option("--family", alex_family, "family parameters m,n");
    alex->add_option("--cf", alex_cf, "even continued fraction, e.g. [2,-2]");
    alex->add_option("--twist", alex_twist, "twist parameter k for the 2k-twist knot");

    auto* classify_cmd = app.add_subcommand("classify", "classify a family member");
    std::string classify_family;
    classify_cmd->add_option("--family", classify_family, "family parameters m,n")->required();

    auto* equiv = app.add_subcommand("equiv", "unoriented 2-bridge equivalence of two fractions");
    std::string equiv_a, equiv_b;
    equiv->add_option("a", equiv_a, "first fraction p/q")->required();
    equiv->add_option("b", equiv_b, "second fraction p/q")->required();

    auto* product = app.add_subcommand("product", "formal knot-surgery product over a tuple");
    int product_k = 1;
    std::string product_tuple;
    product->add_option("--k", product_k, "number of factors")->required();
    product->add_option("--tuple", product_tuple, "twist parameters n1,...,nk")->required();

    auto* recover = app.add_subcommand("recover", "recover the tuple from a product polynomial");
    int recover_k = 1;
    long long recover_bound = 5;
    std::string recover_poly;
    recover->add_option("--k", recover_k, "tuple length")->required();
    recover->add_option("--poly", recover_poly, "product polynomial (text or JSON)")->required();
    recover->add_option("--bound", recover_bound, "search box half-width");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite = "all";
    int verify_k = 2;
    long long verify_bound = 3;
    verify->add_option("--suite", verify_suite, "lemma|claim|crosscheck|homology|all");
    verify->add_option("--k", verify_k, "claim suite: number of factors");
    verify->add_option("--bound", verify_bound, "claim suite: box half-width");

    auto* homology = app.add_subcommand("homology", "homology of a chain complex file");
    std::string homology_file;
    homology->add_option("--file", homology_file, "chain complex JSON")->required();

    auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
    std::string snf_file, snf_matrix;
    bool snf_full = false;
    snf->add_option("--file", snf_file, "matrix JSON file");
    snf->add_option("--matrix", snf_matrix, "inline matrix JSON, e.g. [[2,4],[6,8]]");
    snf->add_flag("--full", snf_full, "include U, S, V in the report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }

    try {
        if (alex->parsed())
            return cmd_alex(g, alex_family, alex_cf, alex_twist, alex->count("--twist") > 0);
        if (classify_cmd->parsed()) return cmd_classify(g, classify_family);
        if (equiv->parsed()) return cmd_equiv(g, equiv_a, equiv_b);
        if (product->parsed()) return cmd_product(g, product_k, product_tuple);
        if (recover->parsed()) return cmd_recover(g, recover_k, recover_poly, recover_bound);
        if (verify->parsed()) return cmd_verify(g, verify_suite, verify_k, verify_bound);
        if (homology->parsed()) return cmd_homology(g, homology_file);
        if (snf->parsed()) return cmd_snf(g, snf_file, snf_matrix, snf_full);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UnsupportedParams& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const NotAComplex& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitParse;
}
