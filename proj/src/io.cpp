#include "cip/io.hpp"

#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

namespace cip {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    std::ostringstream os;
    os << name << ":" << line << ": " << msg;
    throw InputError(os.str());
}

std::vector<std::string> split_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

bool parse_id(const std::string& tok, std::int64_t& out) {
    if (tok.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(tok, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == tok.size();
}

Graph parse_edge_list(const std::vector<std::string>& lines, const std::string& name,
                      int bitset_threshold) {
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    std::int64_t min_id = -1, max_id = -1;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string body = lines[i];
        auto cut = body.find_first_of("#%");
        if (cut != std::string::npos) body.resize(cut);
        std::istringstream ls(body);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        if (!(ls >> b) || (ls >> extra))
            fail(name, (int)i + 1, "expected two vertex ids");
        std::int64_t u, v;
        if (!parse_id(a, u) || !parse_id(b, v))
            fail(name, (int)i + 1, "vertex ids must be integers");
        if (u < 0 || v < 0) fail(name, (int)i + 1, "negative vertex id");
        raw.emplace_back(u, v);
        std::int64_t lo = std::min(u, v), hi = std::max(u, v);
        min_id = min_id < 0 ? lo : std::min(min_id, lo);
        max_id = std::max(max_id, hi);
    }
    if (raw.empty()) return build_graph(0, {}, bitset_threshold);

    std::int64_t base = min_id >= 1 ? 1 : 0;
    std::int64_t n64 = max_id - base + 1;
    if (n64 > (std::int64_t)1 << 30)
        fail(name, 1, "vertex ids span too wide a range");
    std::vector<std::array<int, 2>> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.push_back({(int)(u - base), (int)(v - base)});
    return build_graph((int)n64, edges, bitset_threshold);
}

Graph parse_dimacs(const std::vector<std::string>& lines, const std::string& name,
                   int bitset_threshold) {
    int n = -1;
    std::int64_t m = -1;
    std::vector<std::array<int, 2>> edges;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::string& line = lines[i];
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "c") continue;
        if (tag == "p") {
            if (n >= 0) fail(name, (int)i + 1, "duplicate problem line");
            std::string kind;
            std::int64_t pn, pm;
            if (!(ls >> kind >> pn >> pm) || pn < 0 || pm < 0)
                fail(name, (int)i + 1, "malformed problem line");
            if (pn > (std::int64_t)1 << 30) fail(name, (int)i + 1, "vertex count out of range");
            n = (int)pn;
            m = pm;
            edges.reserve((std::size_t)pm);
            continue;
        }
        if (tag == "e") {
            if (n < 0) fail(name, (int)i + 1, "edge before problem line");
            std::string a, b, extra;
            std::int64_t u, v;
            if (!(ls >> a >> b) || (ls >> extra) || !parse_id(a, u) || !parse_id(b, v))
                fail(name, (int)i + 1, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                fail(name, (int)i + 1, "edge endpoint outside [1, n]");
            edges.push_back({(int)u - 1, (int)v - 1});
            continue;
        }
        fail(name, (int)i + 1, "unrecognized line");
    }
    if (n < 0) fail(name, (int)lines.size(), "missing problem line");
    if ((std::int64_t)edges.size() != m)
        std::fprintf(stderr, "%s: header claims %" PRId64 " edges, found %zu\n", name.c_str(), m,
                     edges.size());
    return build_graph(n, edges, bitset_threshold);
}

GraphFormat sniff(const std::vector<std::string>& lines, const std::string& name) {
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::istringstream ls(lines[i]);
        std::string tok;
        if (!(ls >> tok)) continue;
        char c = tok[0];
        if (c == '#' || c == '%') return GraphFormat::edge_list;
        if (tok == "c" || tok == "p" || tok == "e") return GraphFormat::dimacs;
        if (c == '-' || (c >= '0' && c <= '9')) return GraphFormat::edge_list;
        fail(name, (int)i + 1, "cannot tell edge list from DIMACS");
    }
    return GraphFormat::edge_list; // fully blank input, empty graph
}

int stage_vertices(const SolveReport& rep, const char* stage) {
    int total = 0;
    for (const auto& st : rep.result.stats.stages)
        if (st.stage == stage) total += st.vertices_removed;
    return total;
}

long long stage_edges(const SolveReport& rep, const char* stage) {
    long long total = 0;
    for (const auto& st : rep.result.stats.stages)
        if (st.stage == stage) total += st.edges_removed;
    return total;
}

const char* status_name(SolveStatus s) {
    return s == SolveStatus::optimal ? "optimal" : "timeout";
}

} // namespace

Graph parse_graph_stream(std::istream& in, const std::string& name, GraphFormat format,
                         int bitset_threshold) {
    auto lines = split_lines(in);
    if (format == GraphFormat::auto_detect) format = sniff(lines, name);
    return format == GraphFormat::dimacs ? parse_dimacs(lines, name, bitset_threshold)
                                         : parse_edge_list(lines, name, bitset_threshold);
}

Graph parse_graph(const std::string& path, GraphFormat format, int bitset_threshold) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return parse_graph_stream(in, path, format, bitset_threshold);
}

std::string report_json(const SolveReport& rep) {
    nlohmann::json j;
    j["instance"] = {{"name", rep.name}, {"n", rep.n}, {"m", rep.m}, {"k", rep.k}};
    if (rep.k_fraction >= 0.0) j["instance"]["k_fraction"] = rep.k_fraction;
    const SolveResult& r = rep.result;
    j["status"] = status_name(r.status);
    j["theta"] = r.theta;
    j["bounds"] = {{"lb", r.lb},
                   {"ub", r.ub},
                   {"disjoint", r.stats.lb_disjoint},
                   {"bipartite", r.stats.lb_bipartite}};
    j["interdiction_set"] = r.interdiction_set;
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& st : r.stats.stages)
        stages.push_back({{"stage", st.stage},
                          {"vertices_removed", st.vertices_removed},
                          {"edges_removed", st.edges_removed},
                          {"seconds", st.seconds},
                          {"pops", st.pops}});
    j["stats"] = {{"seconds", r.stats.seconds},
                  {"kernel_vertices", r.stats.kernel_vertices},
                  {"kernel_edges", r.stats.kernel_edges},
                  {"master_iterations", r.stats.master_iterations},
                  {"separation_calls", r.stats.separation_calls},
                  {"search_nodes", r.stats.search_nodes},
                  {"stages", std::move(stages)}};
    return j.dump(2) + "\n";
}

std::string report_text(const SolveReport& rep) {
    const SolveResult& r = rep.result;
    std::ostringstream os;
    os << rep.name << ": n=" << rep.n << " m=" << rep.m << " k=" << rep.k;
    if (rep.k_fraction >= 0.0) os << " (" << rep.k_fraction << " of n)";
    os << "\n";
    os << "status: " << status_name(r.status) << "\n";
    if (r.status == SolveStatus::optimal)
        os << "theta = " << r.theta << "\n";
    else
        os << "theta in [" << r.lb << ", " << r.ub << "], best found " << r.theta << "\n";
    os << "bounds: disjoint " << r.stats.lb_disjoint << ", bipartite " << r.stats.lb_bipartite
       << "\n";
    os << "kernel: " << r.stats.kernel_vertices << " vertices, " << r.stats.kernel_edges
       << " edges\n";
    std::vector<std::string> order;
    std::unordered_map<std::string, std::pair<int, long long>> agg;
    for (const auto& st : r.stats.stages) {
        auto [it, fresh] = agg.try_emplace(st.stage, 0, 0);
        if (fresh) order.push_back(st.stage);
        it->second.first += st.vertices_removed;
        it->second.second += st.edges_removed;
    }
    for (const auto& name : order) {
        auto [v, e] = agg[name];
        if (v == 0 && e == 0) continue;
        os << "  " << name << ": -" << v << " vertices, -" << e << " edges\n";
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "time: %.3fs, %lld master rounds, %lld separations, %lld nodes\n",
                  r.stats.seconds, r.stats.master_iterations, r.stats.separation_calls,
                  r.stats.search_nodes);
    os << buf;
    os << "interdiction set (" << r.interdiction_set.size() << "):";
    for (int v : r.interdiction_set) os << " " << v;
    os << "\n";
    return os.str();
}

std::string bench_csv_header() {
    return "name,n,m,k,v_degree_triangle,e_degree_triangle,v_color,e_strong_triangle,v_clique,"
           "v_interdiction,kernel_n,kernel_m,lb_disjoint,lb_bipartite,lb,ub,theta,status,"
           "seconds\n";
}

std::string bench_csv_row(const SolveReport& rep) {
    const SolveResult& r = rep.result;
    std::ostringstream os;
    os << rep.name << "," << rep.n << "," << rep.m << "," << rep.k << ","
       << stage_vertices(rep, "degree_triangle") << "," << stage_edges(rep, "degree_triangle")
       << "," << stage_vertices(rep, "color") << "," << stage_edges(rep, "strong_triangle") << ","
       << stage_vertices(rep, "clique") << "," << stage_vertices(rep, "interdiction") << ","
       << r.stats.kernel_vertices << "," << r.stats.kernel_edges << "," << r.stats.lb_disjoint
       << "," << r.stats.lb_bipartite << "," << r.lb << "," << r.ub << "," << r.theta << ","
       << (r.status == SolveStatus::optimal ? "optimal" : "TL") << ",";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", r.stats.seconds);
    os << buf << "\n";
    return os.str();
}

} // namespace cip
