#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "retract/absolute.hpp"
#include "retract/cograph_retract.hpp"
#include "retract/folding.hpp"
#include "retract/graph_io.hpp"
#include "retract/oracle.hpp"
#include "retract/reduction.hpp"
#include "retract/sweep.hpp"
#include "retract/threshold.hpp"
#include "retract/trivially_perfect.hpp"

namespace retract::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

constexpr int kYes = 0, kNo = 1, kError = 2;

// Failure that should surface as a JSON error report.
struct CliError : std::runtime_error {
    CliError(std::string kind, const std::string& what, ordered_json extra = {})
        : std::runtime_error(what), kind(std::move(kind)), extra(std::move(extra)) {}
    std::string kind;
    ordered_json extra;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CliError("IOError", "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw CliError("IOError", "cannot write " + path);
}

std::string hex(std::uint64_t v) {
    std::ostringstream s;
    s << std::hex << std::setw(16) << std::setfill('0') << v;
    return s.str();
}

struct Input {
    std::string path;
    std::string digest;
    Graph graph;
    std::optional<Cotree> cotree;  // when given as .ct
};

Input load(const std::string& path) {
    const std::string text = read_file(path);
    Input in{path, hex(fnv1a(text)), Graph(0), std::nullopt};
    const std::string ext = fs::path(path).extension().string();
    try {
        if (ext == ".el") {
            in.graph = parse_edge_list(text);
        } else if (ext == ".g6") {
            in.graph = parse_graph6(text);
        } else if (ext == ".ct") {
            in.cotree = parse_cotree(text);
            in.graph = cotree_to_graph(*in.cotree);
        } else {
            throw CliError("FormatError", path + ": unknown extension (expected .el, .g6 or .ct)");
        }
    } catch (const ParseError& e) {
        throw CliError("ParseError", path + ": " + e.what());
    } catch (const GraphError& e) {
        throw CliError("ParseError", path + ": " + e.what());
    }
    return in;
}

ordered_json input_json(const Input& in) { return {{"path", in.path}, {"digest", in.digest}, {"order", in.graph.order()}}; }

ordered_json omega_json(const Graph& g) {
    if (auto c = recognize_cograph(g); c.cotree) return clique_number(*c.cotree);
    if (g.order() <= 64) return brute_clique(g);
    return nullptr;
}

VertexList read_ids(const std::string& path) {
    std::istringstream in(read_file(path));
    VertexList ids;
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            ids.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw CliError("ParseError", path + ": bad vertex id '" + tok + "'");
        }
    }
    return ids;
}

struct RetractOptions {
    std::string solver = "auto";
    std::string partitioned;
    bool timing = true;
};

// Runs one retract instance; the report's "exit" field holds the exit code.
ordered_json retract_report(const std::string& g_path, const std::string& h_path, const RetractOptions& opt) {
    const auto start = std::chrono::steady_clock::now();
    ordered_json rep;
    const Input g = load(g_path);
    std::optional<Input> h;
    if (!h_path.empty()) h = load(h_path);
    rep["inputs"] = {{"g", input_json(g)}};
    if (h) rep["inputs"]["h"] = input_json(*h);

    RetractResult res;
    std::string route;
    Graph hg(0);
    if (!opt.partitioned.empty()) {
        const VertexList hset = read_ids(opt.partitioned);
        for (Vertex v : hset)
            if (v < 0 || v >= g.graph.order()) throw CliError("ParseError", opt.partitioned + ": vertex id out of range");
        VertexList sorted = hset;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw CliError("ParseError", opt.partitioned + ": repeated vertex id");
        PartitionedInstance inst{g.graph, hset};
        hg = inst.pattern();
        if (h && !(h->graph == hg)) throw CliError("InputMismatch", "H differs from the subgraph induced by the id file");
        if (opt.solver == "oracle") {
            res = brute_retract_fixing(g.graph, hset, SearchBudget::retract_default().with_env_override());
            route = "oracle";
        } else {
            res = partitioned_retract(inst);
            route = std::string(route_name(Route::Partitioned));
        }
    } else {
        if (!h) throw CliError("UsageError", "retract needs G and H (or --partitioned)");
        hg = h->graph;
        if (opt.solver == "auto") {
            auto d = retract(g.graph, hg);
            res = std::move(d.result);
            route = std::string(route_name(d.route));
        } else if (opt.solver == "threshold") {
            res = threshold_retract(g.graph, hg);
            route = std::string(route_name(Route::Threshold));
        } else if (opt.solver == "tp") {
            res = tp_retract(g.graph, hg);
            route = std::string(route_name(Route::TriviallyPerfect));
        } else if (opt.solver == "fpt") {
            res = g.cotree && h->cotree ? fpt_retract(*g.cotree, *h->cotree) : fpt_retract(g.graph, hg);
            route = std::string(route_name(Route::Fpt));
        } else {
            res = brute_retract(g.graph, hg, SearchBudget::retract_default().with_env_override());
            route = std::string(route_name(Route::Oracle));
        }
    }
    if (res.yes() && !verify_retract_certificate(g.graph, hg, *res.certificate))
        throw CliError("InternalError", "solver produced a certificate that does not verify");
    rep["verdict"] = res.yes() ? "YES" : "NO";
    rep["route"] = route;
    if (res.yes())
        rep["certificate"] = {{"rho", res.certificate->rho.image}, {"gamma", res.certificate->gamma.image}};
    else {
        rep["certificate"] = nullptr;
        rep["reason"] = res.reason;
    }
    rep["omega_g"] = omega_json(g.graph);
    rep["omega_h"] = omega_json(hg);
    const std::chrono::duration<double, std::milli> ms = std::chrono::steady_clock::now() - start;
    rep["millis"] = opt.timing ? ordered_json(ms.count()) : ordered_json(nullptr);
    rep["exit"] = res.yes() ? kYes : kNo;
    return rep;
}

ordered_json error_report(const std::exception& e) {
    ordered_json rep;
    if (auto* c = dynamic_cast<const CliError*>(&e)) {
        rep["error"] = {{"kind", c->kind}, {"message", c->what()}};
        if (!c->extra.is_null()) rep["error"].update(c->extra);
    } else if (auto* nc = dynamic_cast<const NotCographError*>(&e)) {
        rep["error"] = {{"kind", "NotCograph"}, {"message", nc->what()}, {"witness", nc->witness()}};
    } else if (dynamic_cast<const NotThresholdError*>(&e)) {
        rep["error"] = {{"kind", "NotThreshold"}, {"message", e.what()}};
    } else if (dynamic_cast<const NotTriviallyPerfectError*>(&e)) {
        rep["error"] = {{"kind", "NotTriviallyPerfect"}, {"message", e.what()}};
    } else if (dynamic_cast<const NotAbsoluteCandidateError*>(&e)) {
        rep["error"] = {{"kind", "NotAbsoluteCandidate"}, {"message", e.what()}};
    } else if (dynamic_cast<const BudgetExceeded*>(&e)) {
        rep["error"] = {{"kind", "BudgetExceeded"}, {"message", e.what()}};
    } else {
        rep["error"] = {{"kind", "Error"}, {"message", e.what()}};
    }
    rep["exit"] = kError;
    return rep;
}

ordered_json fold_json(const FoldSequence& s) {
    ordered_json folds = ordered_json::array();
    for (auto [x, y] : s.folds) folds.push_back({x, y});
    return {{"component", s.component}, {"folds", folds}};
}

ordered_json folding_report(const std::string& path) {
    const Input g = load(path);
    ordered_json rep{{"inputs", {{"g", input_json(g)}}}};
    if (g.graph.order() == 0) throw CliError("UsageError", "empty graph");
    FoldSequence seq;
    int value = 0;
    std::string route;
    if (threshold_elimination(g.graph)) {
        auto r = threshold_folding_number(g.graph);
        value = r.value;
        seq = r.sequence;
        route = "threshold";
    } else {
        auto r = brute_folding_number(g.graph, SearchBudget::folding_default().with_env_override());
        value = r.value;
        seq = r.sequence;
        route = "oracle";
        if (is_connected(g.graph) && !universal_vertices(g.graph).empty()) {
            const int u = folding_number_universal(g.graph, SearchBudget::achromatic_default().with_env_override());
            if (u != value) throw CliError("InternalError", "universal-vertex formula disagrees with the search");
            route = "universal";
        }
    }
    const bool ok = verify_fold_sequence(g.graph, seq, Graph::complete(value));
    if (!ok) throw CliError("InternalError", "fold sequence does not verify");
    rep["folding_number"] = value;
    rep["route"] = route;
    rep["sequence"] = fold_json(seq);
    rep["verified"] = ok;
    rep["exit"] = kYes;
    return rep;
}

ordered_json absolute_report(const std::string& path, const std::string& out) {
    const Input h = load(path);
    ordered_json rep{{"inputs", {{"h", input_json(h)}}}};
    const auto v = is_absolute_retract(h.graph);
    rep["absolute"] = v.is_absolute;
    rep["omega"] = v.omega;
    rep["cliques"] = v.cliques;
    if (!v.is_absolute) {
        rep["failing_vertex"] = *v.failing_vertex;
        const std::string el = format_edge_list(*v.counterexample);
        rep["counterexample"] = {{"order", v.counterexample->order()}, {"graph6", format_graph6(*v.counterexample)}};
        if (!out.empty()) {
            write_file(out, el);
            rep["counterexample"]["written"] = out;
        }
    }
    rep["exit"] = v.is_absolute ? kYes : kNo;
    return rep;
}

ordered_json reduce_report(const std::string& path, const std::string& prefix, bool force) {
    const std::string text = read_file(path);
    ThreePartitionInstance inst;
    try {
        inst = parse_instance(text);
    } catch (const ParseError& e) {
        throw CliError("ParseError", path + ": " + e.what());
    }
    ordered_json rep{{"inputs", {{"instance", {{"path", path}, {"digest", hex(fnv1a(text))}}}}}};
    const auto bad = validate(inst);
    rep["violations"] = bad;
    if (!bad.empty() && !force) throw CliError("InvalidInstance", "invalid 3-partition instance", {{"violations", bad}});
    const auto enc = encode(inst, force);
    write_file(prefix + "_G.ct", to_string(enc.g) + "\n");
    write_file(prefix + "_H.ct", to_string(enc.h) + "\n");
    rep["triples"] = enc.triples;
    rep["degenerate"] = enc.degenerate;
    rep["order_g"] = enc.g.order();
    rep["order_h"] = enc.h.order();
    rep["written"] = {prefix + "_G.ct", prefix + "_H.ct"};
    rep["exit"] = kYes;
    return rep;
}

ordered_json classify_report(const std::string& path) {
    const Input g = load(path);
    const auto c = classify(g.graph);
    ordered_json rep{{"inputs", {{"g", input_json(g)}}}, {"class", class_name(c.kind)}, {"witness", c.witness}};
    if (c.kind != GraphClassKind::NotCograph) {
        const Cotree t = build_cotree(g.graph);
        rep["cotree"] = to_string(t);
        rep["omega"] = clique_number(t);
    }
    rep["exit"] = kYes;
    return rep;
}

ordered_json oracle_report(const std::string& what, const std::vector<std::string>& paths) {
    const std::size_t need = what == "retract" || what == "hom" ? 2 : 1;
    if (paths.size() != need) throw CliError("UsageError", "oracle " + what + " takes " + std::to_string(need) + " graph(s)");
    const Input g = load(paths[0]);
    ordered_json rep{{"inputs", {{"g", input_json(g)}}}, {"query", what}};
    const auto budget = SearchBudget::retract_default().with_env_override();
    int code = kYes;
    if (need == 2) {
        const Input h = load(paths[1]);
        rep["inputs"]["h"] = input_json(h);
        if (what == "retract") {
            auto r = brute_retract(g.graph, h.graph, budget);
            rep["verdict"] = r.yes() ? "YES" : "NO";
            if (r.yes()) rep["certificate"] = {{"rho", r.certificate->rho.image}, {"gamma", r.certificate->gamma.image}};
            code = r.yes() ? kYes : kNo;
        } else {
            auto r = brute_hom(g.graph, h.graph, budget);
            rep["verdict"] = r ? "YES" : "NO";
            if (r) rep["map"] = r->image;
            code = r ? kYes : kNo;
        }
    } else if (what == "achromatic") {
        auto r = brute_achromatic(g.graph, SearchBudget::achromatic_default().with_env_override());
        rep["value"] = r.value;
        rep["classes"] = r.coloring.classes;
    } else if (what == "folding") {
        auto r = brute_folding_number(g.graph, SearchBudget::folding_default().with_env_override());
        rep["value"] = r.value;
        rep["sequence"] = fold_json(r.sequence);
    } else if (what == "clique" || what == "chromatic") {
        BudgetMeter(budget).check_size(g.graph.order(), "G");
        rep["value"] = what == "clique" ? brute_clique(g.graph) : brute_chromatic(g.graph);
    } else {
        throw CliError("UsageError", "unknown oracle query " + what);
    }
    rep["exit"] = code;
    return rep;
}

struct BatchLine {
    std::string g, h;
};

std::vector<BatchLine> read_manifest(const std::string& path) {
    std::istringstream in(read_file(path));
    const fs::path base = fs::path(path).parent_path();
    std::vector<BatchLine> lines;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a) || a[0] == '#') continue;
        if (!(ls >> b) || (ls >> extra)) throw CliError("ParseError", path + ": line " + std::to_string(lineno) + ": expected 'G H'");
        auto resolve = [&](const std::string& p) { return fs::path(p).is_absolute() ? p : (base / p).string(); };
        lines.push_back({resolve(a), resolve(b)});
    }
    return lines;
}

int emit(std::ostream& out, ordered_json rep, const std::vector<std::string>& args) {
    const int code = rep.value("exit", kError);
    ordered_json full{{"command", std::vector<std::string>(args.begin() + 1, args.end())}};
    full.update(rep);
    full.erase("exit");
    out << full.dump(2) << '\n';
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Retract decisions and certificates for cographs"};
    app.require_subcommand(1);

    RetractOptions ropt;
    std::string g_path, h_path, batch;
    int threads = 0;
    auto* r = app.add_subcommand("retract", "decide whether H is a retract of G");
    r->add_option("G", g_path, "graph G (.el, .g6, .ct)");
    r->add_option("H", h_path, "graph H (.el, .g6, .ct)");
    r->add_option("--solver", ropt.solver, "solver route")->check(CLI::IsMember({"auto", "threshold", "tp", "fpt", "oracle"}));
    r->add_option("--partitioned", ropt.partitioned, "file of G's vertex ids forming H");
    r->add_option("--batch", batch, "manifest of 'G H' path pairs");
    r->add_option("--threads", threads, "batch worker threads (0 = OpenMP default)");
    r->add_flag("!--no-timing", ropt.timing, "omit wall-clock fields");

    std::string f_path;
    auto* f = app.add_subcommand("folding", "folding number with a verified fold sequence");
    f->add_option("G", f_path)->required();

    std::string a_path, a_out;
    auto* a = app.add_subcommand("absolute", "absolute retract test for a connected cograph");
    a->add_option("H", a_path)->required();
    a->add_option("--out", a_out, "write the counterexample edge list here");

    std::string inst_path, prefix;
    bool force = false;
    auto* d = app.add_subcommand("reduce3p", "encode a 3-partition instance as a cotree pair");
    d->add_option("instance", inst_path)->required();
    d->add_option("prefix", prefix)->required();
    d->add_flag("--force", force, "encode even if the instance is invalid");

    std::string c_path;
    auto* c = app.add_subcommand("classify", "threshold / trivially perfect / cograph / other");
    c->add_option("G", c_path)->required();

    std::string query;
    std::vector<std::string> o_paths;
    auto* o = app.add_subcommand("oracle", "exhaustive reference searches");
    o->add_option("query", query, "retract | hom | achromatic | folding | clique | chromatic")->required();
    o->add_option("graphs", o_paths)->required();

    std::vector<const char*> argv;
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kError;
    }

    try {
        if (r->parsed()) {
            if (!batch.empty()) {
                const auto lines = read_manifest(batch);
                auto results = parallel_map(
                    lines.size(),
                    [&](std::size_t i) {
                        try {
                            return retract_report(lines[i].g, lines[i].h, ropt);
                        } catch (const std::exception& e) {
                            return error_report(e);
                        }
                    },
                    threads);
                ordered_json arr = ordered_json::array();
                int code = kYes;
                for (auto& res : results) {
                    if (res.ok()) {
                        auto rep = *res.value;
                        if (rep.value("exit", kError) == kError) code = kError;
                        rep.erase("exit");
                        arr.push_back(std::move(rep));
                    } else {
                        arr.push_back({{"error", {{"kind", "Error"}, {"message", res.error}}}});
                        code = kError;
                    }
                }
                return emit(out, {{"batch", batch}, {"results", arr}, {"exit", code}}, args);
            }
            if (g_path.empty()) throw CliError("UsageError", "retract needs G");
            return emit(out, retract_report(g_path, h_path, ropt), args);
        }
        if (f->parsed()) return emit(out, folding_report(f_path), args);
        if (a->parsed()) return emit(out, absolute_report(a_path, a_out), args);
        if (d->parsed()) return emit(out, reduce_report(inst_path, prefix, force), args);
        if (c->parsed()) return emit(out, classify_report(c_path), args);
        if (o->parsed()) return emit(out, oracle_report(query, o_paths), args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return emit(out, error_report(e), args);
    }
    return kError;
}

}  // namespace retract::cli
