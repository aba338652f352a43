// Command-line front end: graded traces of automorphisms on layered-graph
// algebras, dual traces, irreducible multiplicities, and cross-engine
// verification, with text/json/csv output.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lga/dual.hpp"
#include "lga/graph_io.hpp"
#include "lga/oracle.hpp"
#include "lga/rep.hpp"
#include "lga/trace.hpp"

using json = nlohmann::ordered_json;
using namespace lga;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;

struct CommandRequest {
    std::string command;
    std::string family = "dn";
    int n = 0;
    std::string sigma;
    int degree = 10;
    std::string method;
    std::string format = "text";
    std::string graph_path;
};

long long enumeration_cap() {
    if (const char* env = std::getenv("LGA_ENUM_CAP")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("LGA_ENUM_CAP is not an integer");
        }
    }
    return kDefaultEnumerationCap;
}

std::vector<std::string> coeff_strings(const TruncatedSeries& s) {
    std::vector<std::string> out;
    for (int k = 0; k <= s.truncation_degree(); ++k) out.push_back(rat_to_string(s[k]));
    return out;
}

std::vector<std::string> coeff_strings(const Poly& p, int degree) {
    return coeff_strings(series_from_poly(p, degree));
}

// Everything needed to run trace engines for one request.
struct Target {
    LayeredGraph graph;
    VertexPermutation sigma;
    std::optional<RationalFunction> closed;        // built-in families only
    std::optional<Poly> dual_closed;               // dual trace polynomial
    std::optional<Poly> dual_oracle;               // Q_n only
    std::string sigma_name;
};

VertexPermutation parse_sigma_map(const LayeredGraph& g, const std::string& spec) {
    VertexPermutation p = identity_permutation(g);
    std::stringstream ss(spec);
    std::string item;
    // ';'-separated entries: labels themselves may contain commas.
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        auto sep = item.find(':');
        if (sep == std::string::npos)
            throw std::invalid_argument("sigma map entries look like fromLabel:toLabel");
        int from = g.find_label(item.substr(0, sep));
        int to = g.find_label(item.substr(sep + 1));
        if (from < 0 || to < 0) throw std::invalid_argument("sigma map names unknown vertex label");
        p.map[static_cast<size_t>(from)] = to;
    }
    if (!is_automorphism(g, p.map))
        throw std::invalid_argument("sigma map is not a graph automorphism");
    return p;
}

Perm parse_qn_sigma(const std::string& spec, int n) {
    if (spec.empty() || spec == "id") return identity_perm(n);
    if (spec.front() == '(') return parse_cycles(spec, n);
    Partition mu = parse_partition(spec);
    if (mu.n() != n) throw std::invalid_argument("cycle type does not sum to n");
    return representative_of(mu);
}

Target make_target(const CommandRequest& req) {
    if (req.family == "dn") {
        if (req.n < 3) throw std::invalid_argument("family dn needs --n at least 3");
        DnFamily fam = build_dn(req.n);
        DihedralElement e = parse_dihedral(req.sigma.empty() ? "id" : req.sigma);
        Target t{fam.graph, dihedral_element(fam, e), closed_form_dn(req.n, e),
                 dual_trace_dn(req.n, e), std::nullopt, dihedral_name(e)};
        return t;
    }
    if (req.family == "qn") {
        if (req.n < 1) throw std::invalid_argument("family qn needs --n at least 1");
        BooleanLattice lat = build_boolean_lattice(req.n);
        Perm perm = parse_qn_sigma(req.sigma, req.n);
        Partition mu = cycle_type(perm);
        Target t{lat.graph, permutation_on_lattice(lat, perm), closed_form_qn(req.n, mu),
                 dual_trace_qn_closed(req.n, mu), std::nullopt, mu.to_string()};
        if (req.n <= 7) t.dual_oracle = dual_trace_qn_oracle(req.n, perm);
        return t;
    }
    if (req.family == "file") {
        if (req.graph_path.empty()) throw std::invalid_argument("family file needs --graph <path>");
        LayeredGraph g = parse_graph_file(req.graph_path);
        VertexPermutation sigma =
            req.sigma.empty() ? identity_permutation(g) : parse_sigma_map(g, req.sigma);
        return Target{std::move(g), std::move(sigma), std::nullopt, std::nullopt, std::nullopt,
                      req.sigma.empty() ? "id" : req.sigma};
    }
    throw std::invalid_argument("unknown family: " + req.family + " (expected dn, qn, file)");
}

std::string csv_cell(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

json base_json(const CommandRequest& req, const std::string& sigma_name) {
    json j;
    j["command"] = req.command;
    j["family"] = req.family;
    j["n"] = req.n;
    j["sigma"] = sigma_name;
    j["degree"] = req.degree;
    return j;
}

void emit_series(const CommandRequest& req, const std::string& sigma_name,
                 const std::map<std::string, TruncatedSeries>& engines,
                 const std::string& primary, bool agreement, std::ostream& os) {
    if (req.format == "json") {
        json j = base_json(req, sigma_name);
        j["coefficients"] = coeff_strings(engines.at(primary));
        json e = json::object();
        for (const auto& [name, series] : engines) e[name] = coeff_strings(series);
        j["engines"] = e;
        j["agreement"] = agreement;
        os << j.dump(2) << "\n";
    } else if (req.format == "csv") {
        os << "degree";
        for (const auto& [name, series] : engines) os << "," << name;
        os << "\n";
        for (int k = 0; k <= req.degree; ++k) {
            os << k;
            for (const auto& [name, series] : engines) os << "," << rat_to_string(series[k]);
            os << "\n";
        }
    } else {
        for (const auto& [name, series] : engines) {
            os << name << ":";
            for (int k = 0; k <= req.degree; ++k) os << " " << rat_to_string(series[k]);
            os << "\n";
        }
        if (engines.size() > 1) os << "agreement: " << (agreement ? "yes" : "no") << "\n";
    }
}

void emit_table(const CommandRequest& req, const GradedMultiplicity& m, std::ostream& os) {
    if (req.format == "json") {
        json j = base_json(req, req.sigma.empty() ? "id" : req.sigma);
        j["columns"] = m.names;
        json rows = json::array();
        for (int d = 0; d <= m.degree(); ++d) {
            json row = json::array();
            for (int c = 0; c < m.columns(); ++c)
                row.push_back(rat_to_string(m.series[static_cast<size_t>(c)][d]));
            rows.push_back(row);
        }
        j["table"] = rows;
        os << j.dump(2) << "\n";
    } else if (req.format == "csv") {
        os << "degree";
        for (const auto& name : m.names) os << "," << csv_cell(name);
        os << "\n";
        for (int d = 0; d <= m.degree(); ++d) {
            os << d;
            for (int c = 0; c < m.columns(); ++c)
                os << "," << rat_to_string(m.series[static_cast<size_t>(c)][d]);
            os << "\n";
        }
    } else {
        os << "degree";
        for (const auto& name : m.names) os << "\t" << name;
        os << "\n";
        for (int d = 0; d <= m.degree(); ++d) {
            os << d;
            for (int c = 0; c < m.columns(); ++c)
                os << "\t" << rat_to_string(m.series[static_cast<size_t>(c)][d]);
            os << "\n";
        }
    }
}

int run_hilbert(const CommandRequest& req, std::ostream& os) {
    Target t = make_target(req);
    RationalFunction h = hilbert_series(t.graph);
    std::map<std::string, TruncatedSeries> engines{{"moebius", expand(h, req.degree)}};
    bool agreement = true;
    if (t.closed) {
        engines.emplace("closed", expand(*t.closed, req.degree));
        agreement = engines.at("moebius") == engines.at("closed");
    }
    if (req.format == "text") {
        os << "numerator: " << h.num.to_string() << "\n";
        os << "denominator: " << h.den.to_string() << "\n";
    }
    emit_series(req, "id", engines, "moebius", agreement, os);
    return agreement ? kExitOk : kExitMismatch;
}

int run_trace(const CommandRequest& req, std::ostream& os) {
    Target t = make_target(req);
    const std::string method = req.method.empty() ? "moebius" : req.method;
    std::map<std::string, TruncatedSeries> engines;
    auto want = [&](const std::string& name) { return method == name || method == "all"; };
    if (want("moebius"))
        engines.emplace("moebius", expand(graded_trace_moebius(t.graph, t.sigma), req.degree));
    if (want("wordcount"))
        engines.emplace("wordcount", graded_trace_wordcount(t.graph, t.sigma, req.degree));
    if (want("closed")) {
        if (!t.closed) {
            if (method == "closed")
                throw std::invalid_argument("no closed form for user graphs; use moebius or wordcount");
        } else {
            engines.emplace("closed", expand(*t.closed, req.degree));
        }
    }
    if (want("oracle"))
        engines.emplace("oracle", count_fixed_words(t.graph, t.sigma, req.degree, enumeration_cap()));
    if (engines.empty()) throw std::invalid_argument("unknown method: " + method);
    bool agreement = true;
    for (const auto& [name, series] : engines) agreement &= series == engines.begin()->second;
    emit_series(req, t.sigma_name, engines, engines.begin()->first, agreement, os);
    return agreement ? kExitOk : kExitMismatch;
}

int run_dual_trace(const CommandRequest& req, std::ostream& os) {
    Target t = make_target(req);
    if (!t.dual_closed)
        throw std::invalid_argument("dual traces exist for the built-in families only");
    const std::string method = req.method.empty() ? "closed" : req.method;
    std::map<std::string, TruncatedSeries> engines;
    int degree = req.degree;
    if (method == "closed" || method == "all")
        engines.emplace("closed", series_from_poly(*t.dual_closed, degree));
    if (method == "oracle" || method == "all") {
        if (t.dual_oracle) engines.emplace("oracle", series_from_poly(*t.dual_oracle, degree));
        else if (method == "oracle")
            throw std::invalid_argument("the dual-trace oracle covers the qn family with n <= 7");
    }
    if (engines.empty()) throw std::invalid_argument("unknown dual-trace method: " + method);
    bool agreement = true;
    for (const auto& [name, series] : engines) agreement &= series == engines.begin()->second;
    if (req.format == "text") os << "polynomial: " << t.dual_closed->to_string() << "\n";
    emit_series(req, t.sigma_name, engines, engines.begin()->first, agreement, os);
    return agreement ? kExitOk : kExitMismatch;
}

int run_multiplicities(const CommandRequest& req, std::ostream& os) {
    if (req.family == "dn") {
        if (req.n < 3) throw std::invalid_argument("family dn needs --n at least 3");
        TruncatedSeries a = expand(closed_form_dn(req.n, DihedralElement::identity()), req.degree);
        TruncatedSeries b = expand(closed_form_dn(req.n, DihedralElement::rotation(1)), req.degree);
        TruncatedSeries c = expand(closed_form_dn(req.n, DihedralElement::s()), req.degree);
        emit_table(req, multiplicities_dn(req.n, a, b, c), os);
        return kExitOk;
    }
    if (req.family == "qn") {
        if (req.n < 1) throw std::invalid_argument("family qn needs --n at least 1");
        std::vector<TruncatedSeries> traces;
        for (const Partition& mu : partitions(req.n))
            traces.push_back(expand(closed_form_qn(req.n, mu), req.degree));
        GradedMultiplicity m = multiplicities_sn(req.n, traces);
        if (req.method == "all") {
            GradedMultiplicity m2 = multiplicities_sn_matrix(req.n, traces);
            if (m.series != m2.series) return kExitMismatch;
        }
        emit_table(req, m, os);
        return kExitOk;
    }
    throw std::invalid_argument("multiplicities needs family dn or qn");
}

int run_dual_multiplicities(const CommandRequest& req, std::ostream& os) {
    if (req.family == "dn") {
        if (req.n < 3) throw std::invalid_argument("family dn needs --n at least 3");
        emit_table(req, dual_multiplicities_dn(req.n, req.degree), os);
        return kExitOk;
    }
    if (req.family == "qn") {
        if (req.n < 2) throw std::invalid_argument("family qn needs --n at least 2");
        emit_table(req, dual_multiplicities_sn(req.n, req.degree), os);
        return kExitOk;
    }
    throw std::invalid_argument("dual-multiplicities needs family dn or qn");
}

int run_koszul(const CommandRequest& req, std::ostream& os) {
    Target t = make_target(req);
    if (!t.closed || !t.dual_closed)
        throw std::invalid_argument("the Koszul identity check needs a built-in family");
    bool ok = koszul_identity_check(*t.closed, *t.dual_closed, req.degree);
    if (req.format == "json") {
        json j = base_json(req, t.sigma_name);
        j["identity_holds"] = ok;
        os << j.dump(2) << "\n";
    } else {
        os << "Tr_sigma(A,t) * Tr_sigma(A^!,-t) == 1 through degree " << req.degree << ": "
           << (ok ? "yes" : "no") << "\n";
    }
    return ok ? kExitOk : kExitMismatch;
}

int run_verify(const CommandRequest& req, std::ostream& os) {
    Target t = make_target(req);
    TraceVerificationReport r = verify_trace(t.graph, t.sigma, req.degree, enumeration_cap());
    std::map<std::string, TruncatedSeries> engines{
        {"moebius", r.moebius}, {"oracle", r.oracle}, {"wordcount", r.wordcount}};
    bool agreement = r.equal;
    if (t.closed) {
        engines.emplace("closed", expand(*t.closed, req.degree));
        agreement = agreement && engines.at("closed") == r.moebius;
    }
    if (req.format == "text" && !agreement)
        os << "first mismatch at degree " << r.first_mismatch_degree << "\n";
    emit_series(req, t.sigma_name, engines, "oracle", agreement, os);
    return agreement ? kExitOk : kExitMismatch;
}

int run_validate(const CommandRequest& req, std::ostream& os) {
    LayeredGraph g = [&] {
        if (req.family == "file" || !req.graph_path.empty()) {
            if (req.graph_path.empty()) throw std::invalid_argument("validate needs --graph <path>");
            return parse_graph_file(req.graph_path);
        }
        return make_target(req).graph;
    }();
    auto diags = validate(g);
    bool ok = !has_errors(diags);
    if (req.format == "json") {
        json j = base_json(req, "id");
        json errors = json::array(), warnings = json::array();
        for (const auto& d : diags)
            (d.severity == Diagnostic::Severity::error ? errors : warnings).push_back(d.message);
        j["errors"] = errors;
        j["warnings"] = warnings;
        j["valid"] = ok;
        os << j.dump(2) << "\n";
    } else {
        for (const auto& d : diags)
            os << (d.severity == Diagnostic::Severity::error ? "error: " : "warning: ") << d.message
               << "\n";
        os << "vertices: " << g.vertex_count() << ", edges: " << g.edges().size()
           << ", levels: " << g.max_level() << "\n";
        os << (ok ? "valid" : "invalid") << "\n";
    }
    return ok ? kExitOk : kExitParse;
}

int run(const CommandRequest& req, std::ostream& os) {
    if (req.command == "hilbert") return run_hilbert(req, os);
    if (req.command == "trace") return run_trace(req, os);
    if (req.command == "dual-trace") return run_dual_trace(req, os);
    if (req.command == "multiplicities") return run_multiplicities(req, os);
    if (req.command == "dual-multiplicities") return run_dual_multiplicities(req, os);
    if (req.command == "koszul") return run_koszul(req, os);
    if (req.command == "verify") return run_verify(req, os);
    if (req.command == "validate") return run_validate(req, os);
    throw std::invalid_argument("unknown command: " + req.command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graded traces and representation multiplicities of layered-graph algebras"};
    app.require_subcommand(1);

    CommandRequest req;
    for (const char* name :
         {"hilbert", "trace", "dual-trace", "multiplicities", "dual-multiplicities", "koszul",
          "verify", "validate"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--family", req.family, "dn, qn or file");
        sub->add_option("--n", req.n, "family size parameter");
        sub->add_option("--sigma", req.sigma,
                        "dn: id, r^i, s, rs; qn: cycle type like 2,1,1 or cycles like (12)(34); "
                        "file: label:label pairs");
        sub->add_option("--degree", req.degree, "truncation degree (default 10)");
        sub->add_option("--method", req.method, "moebius, wordcount, closed, oracle or all");
        sub->add_option("--format", req.format, "text, json or csv");
        sub->add_option("--graph", req.graph_path, "graph file for family=file");
        sub->callback([&req, name] { req.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }
    if (!req.graph_path.empty() && req.family == "dn") req.family = "file";
    if (req.command == "verify" && req.method.empty()) req.method = "all";

    try {
        return run(req, std::cout);
    } catch (const GraphParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const GraphValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputation;
    }
}
