#include "perron/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "perron/measures.hpp"
#include "perron/oracle.hpp"

namespace perron {
namespace cli {

using nlohmann::json;

namespace {

Word parse_word_json(const json& j, int q) {
    if (j.is_string()) {
        if (q > 10)
            throw_invalid("ParseError", "digit-string words are only unambiguous for q <= 10; "
                                        "use integer arrays");
        return Word::from_digits(j.get<std::string>());
    }
    if (j.is_array()) {
        std::vector<Symbol> syms;
        for (const auto& e : j) {
            if (!e.is_number_integer())
                throw_invalid("ParseError", "word arrays must contain integers");
            syms.push_back(e.get<int>());
        }
        return Word(std::move(syms));
    }
    throw_invalid("ParseError", "a word must be a digit string or an integer array");
}

Word parse_word_arg(const std::string& text, int q) {
    if (!text.empty() && (text[0] == '[')) {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw_invalid("ParseError", "malformed word array: " + text);
        return parse_word_json(j, q);
    }
    if (q > 10)
        throw_invalid("ParseError", "digit-string words are only unambiguous for q <= 10; "
                                    "pass a JSON integer array");
    return Word::from_digits(text);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_invalid("ParseError", "cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json word_to_json(const Word& w, int q) {
    if (q <= 10) return w.str();
    return json(w.symbols());
}

json bigint_to_json(const BigInt& v) {
    static const BigInt lo = -(BigInt(1) << 53), hi = BigInt(1) << 53;
    if (v >= lo && v <= hi) return json(v.convert_to<long long>());
    return json(v.str());
}

json poly_to_json(const IntPolynomial& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(bigint_to_json(c));
    if (p.is_zero()) arr.push_back(0);
    return arr;
}

void dump_rec(const json& j, std::string& out, int indent, int depth) {
    auto pad = [&](int d) { out.append(static_cast<size_t>(indent * d), ' '); };
    switch (j.type()) {
        case json::value_t::object: {
            if (j.empty()) { out += "{}"; return; }
            out += "{\n";
            size_t k = 0;
            for (auto it = j.begin(); it != j.end(); ++it, ++k) {
                pad(depth + 1);
                out += json(it.key()).dump();
                out += ": ";
                dump_rec(it.value(), out, indent, depth + 1);
                if (k + 1 < j.size()) out += ',';
                out += '\n';
            }
            pad(depth);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (j.empty()) { out += "[]"; return; }
            out += "[\n";
            for (size_t k = 0; k < j.size(); ++k) {
                pad(depth + 1);
                dump_rec(j[k], out, indent, depth + 1);
                if (k + 1 < j.size()) out += ',';
                out += '\n';
            }
            pad(depth);
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            double v = j.get<double>();
            if (std::isfinite(v)) {
                char buf[40];
                std::snprintf(buf, sizeof buf, "%.17g", v);
                out += buf;
            } else {
                out += "null";
            }
            return;
        }
        default:
            out += j.dump();
            return;
    }
}

json error_json(const Error& e) {
    return json{{"error", json{{"code", e.code()}, {"message", std::string(e.what())}}}};
}

json spec_echo(const ShiftSpec& spec) {
    json forb = json::array();
    for (const Word& w : spec.forbidden) forb.push_back(word_to_json(w, spec.q));
    return json{{"q", spec.q}, {"forbidden", forb}, {"p", spec.p}};
}

json report_json(const SpectralReport& rep) {
    json labels = json::array();
    for (const Word& w : rep.labels()) labels.push_back(word_to_json(w, rep.spec.q));
    json norm;
    if (rep.normalization)
        norm = json{{"value", *rep.normalization}, {"status", rep.normalization_status}};
    else
        norm = json{{"value", nullptr}, {"status", rep.normalization_status}};
    json diag{{"states", rep.adjacency.size()}};
    if (rep.one_plus_rprime) diag["one_plus_r_prime"] = *rep.one_plus_rprime;
    return json{{"input", spec_echo(rep.spec)},
                {"labels", labels},
                {"theta", rep.theta},
                {"entropy", rep.entropy},
                {"irreducible", rep.graph.irreducible},
                {"primitive", rep.graph.primitive},
                {"period", rep.graph.period},
                {"u", rep.u},
                {"v", rep.v},
                {"R", rep.R},
                {"C", rep.C},
                {"r", json{{"numerator", poly_to_json(rep.r.num)}, {"denominator", poly_to_json(rep.r.den)}}},
                {"normalization", norm},
                {"diagnostics", diag}};
}

struct CommonOpts {
    std::string file;
    double tol_root = -1.0;
    double tol_singular = -1.0;
};

void add_tol_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--tol-root", o.tol_root,
                    "residual acceptance tolerance for root finding (default 1e-10)");
    cmd->add_option("--tol-singular", o.tol_singular,
                    "removable-singularity detection tolerance (default 1e-8)");
}

SpecDocument load_spec(const CommonOpts& o) {
    SpecDocument doc = parse_spec_document(read_file(o.file));
    if (o.tol_root > 0) doc.tol.root = o.tol_root;
    if (o.tol_singular > 0) doc.tol.singular = o.tol_singular;
    return doc;
}

void emit(std::ostream& out, const json& j) { out << dump_json(j) << "\n"; }

}  // namespace

SpecDocument parse_spec_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw_invalid("ParseError", "spec file is not valid JSON");
    if (!j.is_object() || !j.contains("q") || !j["q"].is_number_integer())
        throw_invalid("ParseError", "spec file needs an integer field \"q\"");
    int q = j["q"].get<int>();
    std::vector<Word> forbidden;
    if (j.contains("forbidden")) {
        if (!j["forbidden"].is_array())
            throw_invalid("ParseError", "\"forbidden\" must be an array of words");
        for (const auto& e : j["forbidden"]) forbidden.push_back(parse_word_json(e, q));
    }
    SpecDocument doc;
    doc.spec = validate_spec(q, std::move(forbidden));
    if (j.contains("options")) {
        const json& o = j["options"];
        if (!o.is_object()) throw_invalid("ParseError", "\"options\" must be an object");
        if (o.contains("tol_root")) doc.tol.root = o["tol_root"].get<double>();
        if (o.contains("tol_singular")) doc.tol.singular = o["tol_singular"].get<double>();
    }
    return doc;
}

DigraphInput parse_matrix_document(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw_invalid("ParseError", "empty matrix file");
    DigraphInput g;
    if (text[first] == '[' || text[first] == '{') {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) throw_invalid("ParseError", "matrix file is not valid JSON");
        json rows = j.is_object() ? j.value("entries", json()) : j;
        if (!rows.is_array()) throw_invalid("ParseError", "matrix JSON must be an array of rows");
        for (const auto& row : rows) {
            if (!row.is_array()) throw_invalid("ParseError", "matrix JSON must be an array of rows");
            g.entries.emplace_back();
            for (const auto& e : row) g.entries.back().push_back(e.get<int>());
        }
        g.n = static_cast<int>(g.entries.size());
        return g;
    }
    std::istringstream in(text);
    int n = 0;
    if (!(in >> n) || n <= 0) throw_invalid("ParseError", "matrix file must start with the size n");
    g.n = n;
    g.entries.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j2 = 0; j2 < n; ++j2)
            if (!(in >> g.entries[static_cast<size_t>(i)][static_cast<size_t>(j2)]))
                throw_invalid("ParseError", "matrix file ended before n*n entries were read");
    return g;
}

std::string dump_json(const json& j, int indent) {
    std::string out;
    dump_rec(j, out, indent, 0);
    return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Perron data of subshifts of finite type from word correlations"};
    app.require_subcommand(1);

    CommonOpts analyze_o, measure_o, count_o, escape_o, verify_o;
    std::string graph_file;
    std::string measure_word;
    int count_max = 10;
    std::vector<std::string> hole_words;
    long long verify_budget = 0;

    CLI::App* c_analyze = app.add_subcommand("analyze", "full spectral report for a spec file");
    c_analyze->add_option("spec", analyze_o.file, "spec JSON file")->required();
    add_tol_flags(c_analyze, analyze_o);

    CLI::App* c_measure = app.add_subcommand("measure", "Parry measure of a cylinder");
    c_measure->add_option("spec", measure_o.file, "spec JSON file")->required();
    c_measure->add_option("--word", measure_word, "cylinder base word")->required();
    add_tol_flags(c_measure, measure_o);

    CLI::App* c_count = app.add_subcommand("count", "allowed-word counts f(0..N)");
    c_count->add_option("spec", count_o.file, "spec JSON file")->required();
    c_count->add_option("--max-n", count_max, "largest length to count")->required();
    add_tol_flags(c_count, count_o);

    CLI::App* c_escape = app.add_subcommand("escape", "escape rate into a hole");
    c_escape->add_option("spec", escape_o.file, "spec JSON file")->required();
    c_escape->add_option("--hole", hole_words, "hole word (repeatable)")->required();
    add_tol_flags(c_escape, escape_o);

    CLI::App* c_graph = app.add_subcommand("graph", "Perron data of a (0,1) digraph matrix");
    c_graph->add_option("matrix", graph_file, "matrix file (text or JSON)")->required();

    CLI::App* c_verify = app.add_subcommand("verify", "oracle cross-checks; exit 0 iff all pass");
    c_verify->add_option("spec", verify_o.file, "spec JSON file")->required();
    c_verify->add_option("--budget", verify_budget, "enumeration budget override (q^n_max bound)");
    add_tol_flags(c_verify, verify_o);

    std::vector<std::string> argv_like = args;
    try {
        std::vector<const char*> argv;
        argv.push_back("perron-sft");
        for (const auto& a : argv_like) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help() << "\n";
            return 0;
        }
        emit(out, json{{"error", json{{"code", "ParseError"}, {"message", e.what()}}}});
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_analyze->parsed()) {
            SpecDocument doc = load_spec(analyze_o);
            SpectralReport rep = analyze(doc.spec, doc.tol);
            json j = report_json(rep);
            j["command"] = "analyze";
            emit(out, j);
            return 0;
        }
        if (c_measure->parsed()) {
            SpecDocument doc = load_spec(measure_o);
            SpectralReport rep = analyze(doc.spec, doc.tol);
            Word w = parse_word_arg(measure_word, doc.spec.q);
            double mu = parry_measure(rep, w);
            emit(out, json{{"command", "measure"},
                           {"input", spec_echo(doc.spec)},
                           {"word", word_to_json(w, doc.spec.q)},
                           {"n", w.size()},
                           {"theta", rep.theta},
                           {"measure", mu}});
            return 0;
        }
        if (c_count->parsed()) {
            SpecDocument doc = load_spec(count_o);
            std::vector<BigInt> f = count_series(doc.spec, count_max);
            json arr = json::array();
            for (const auto& v : f) arr.push_back(bigint_to_json(v));
            emit(out, json{{"command", "count"},
                           {"input", spec_echo(doc.spec)},
                           {"max_n", count_max},
                           {"f", arr}});
            return 0;
        }
        if (c_escape->parsed()) {
            SpecDocument doc = load_spec(escape_o);
            std::vector<Word> hole;
            for (const auto& hw : hole_words) hole.push_back(parse_word_arg(hw, doc.spec.q));
            EscapeRate er = escape_rate(doc.spec, hole, doc.tol);
            json jh = json::array();
            for (const Word& w : hole) jh.push_back(word_to_json(w, doc.spec.q));
            emit(out, json{{"command", "escape"},
                           {"input", spec_echo(doc.spec)},
                           {"hole", jh},
                           {"theta", er.theta},
                           {"lambda", er.lambda},
                           {"escape_rate", er.rate}});
            return 0;
        }
        if (c_graph->parsed()) {
            DigraphInput g = parse_matrix_document(read_file(graph_file));
            SpectralReport rep = digraph_perron(g);
            json j = report_json(rep);
            j["command"] = "graph";
            // vertices are 1-indexed on the outside
            json verts = json::array();
            for (int v = 1; v <= g.n; ++v) verts.push_back(v);
            j["vertices"] = verts;
            emit(out, j);
            return 0;
        }
        if (c_verify->parsed()) {
            SpecDocument doc = load_spec(verify_o);
            long long budget = verify_budget > 0 ? verify_budget : oracle::default_budget();
            oracle::OracleReport rep = oracle::verify(doc.spec, budget, doc.tol);
            json checks = json::array();
            for (const auto& c : rep.checks_run) checks.push_back(c);
            json skipped = json::array();
            for (const auto& c : rep.checks_skipped) skipped.push_back(c);
            json discs = json::array();
            for (const auto& d : rep.discrepancies)
                discs.push_back(json{{"check", d.check}, {"delta", d.delta}, {"tolerance", d.tolerance}});
            emit(out, json{{"command", "verify"},
                           {"input", spec_echo(doc.spec)},
                           {"theta", rep.theta},
                           {"theta_hat", rep.theta_hat},
                           {"irreducible", rep.irreducible},
                           {"checks_run", checks},
                           {"checks_skipped", skipped},
                           {"discrepancies", discs},
                           {"pass", rep.pass()}});
            if (!rep.pass()) {
                err << "verify: " << rep.discrepancies.size() << " check(s) failed\n";
                return 1;
            }
            return 0;
        }
    } catch (const Error& e) {
        emit(out, error_json(e));
        err << "error [" << e.code() << "]: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        emit(out, json{{"error", json{{"code", "NumericFailure"}, {"message", e.what()}}}});
        err << "error: " << e.what() << "\n";
        return 4;
    }
    return 2;
}

}  // namespace cli
}  // namespace perron
