#include "happy/io.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "happy/errors.hpp"

namespace happy {

namespace {

// yields non-comment, non-blank lines with their 1-based numbers
std::vector<std::pair<int, std::string>> significant_lines(const std::string &text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        out.emplace_back(number, line);
    }
    return out;
}

long long read_int(std::istringstream &in, int line, const char *what) {
    long long value;
    if (!(in >> value))
        throw ParseError(line, std::string("expected ") + what);
    return value;
}

void expect_end(std::istringstream &in, int line) {
    std::string extra;
    if (in >> extra)
        throw ParseError(line, "trailing token '" + extra + "'");
}

} // namespace

Instance parse_instance(const std::string &text) {
    const auto lines = significant_lines(text);
    if (lines.empty())
        throw ParseError(1, "missing header line 'p <mhv|mhe> <n> <ell> <k>'");

    auto [header_no, header] = lines.front();
    std::istringstream hin(header);
    std::string tag, kind_str;
    hin >> tag;
    if (tag != "p")
        throw ParseError(header_no, "first non-comment line must be the 'p' header");
    if (!(hin >> kind_str) || (kind_str != "mhv" && kind_str != "mhe"))
        throw ParseError(header_no, "problem kind must be 'mhv' or 'mhe'");
    const long long n = read_int(hin, header_no, "vertex count");
    const long long ell = read_int(hin, header_no, "palette size");
    const long long k = read_int(hin, header_no, "target k");
    expect_end(hin, header_no);
    if (n < 0 || n > 1'000'000)
        throw ParseError(header_no, "vertex count out of range");
    if (ell < 1)
        throw ParseError(header_no, "palette size must be at least 1");
    if (k < 0)
        throw ParseError(header_no, "target k must be nonnegative");

    std::vector<Edge> edges;
    std::set<Edge> seen_edges;
    Precoloring p(static_cast<int>(n), static_cast<int>(ell));
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        auto [no, content] = lines[idx];
        std::istringstream in(content);
        in >> tag;
        if (tag == "p") {
            throw ParseError(no, "duplicate header");
        } else if (tag == "e") {
            const long long u = read_int(in, no, "edge endpoint");
            const long long v = read_int(in, no, "edge endpoint");
            expect_end(in, no);
            if (u == v)
                throw ParseError(no, "self-loop");
            if (u < 1 || v > n || u >= v)
                throw ParseError(no, "edge endpoints must satisfy 1 <= u < v <= n");
            if (!seen_edges.emplace(static_cast<int>(u), static_cast<int>(v)).second)
                throw ParseError(no, "duplicate edge");
            edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        } else if (tag == "c") {
            const long long v = read_int(in, no, "vertex");
            const long long color = read_int(in, no, "color");
            expect_end(in, no);
            if (v < 1 || v > n)
                throw ParseError(no, "vertex index out of range");
            if (color < 1 || color > ell)
                throw ParseError(no, "color out of palette");
            if (p.is_colored(static_cast<int>(v)))
                throw ParseError(no, "repeated color record for vertex " + std::to_string(v));
            p.set(static_cast<int>(v), static_cast<int>(color));
        } else {
            throw ParseError(no, "unknown record '" + tag + "'");
        }
    }

    return Instance(kind_str == "mhv" ? Kind::MHV : Kind::MHE,
                    Graph(static_cast<int>(n), std::move(edges)), std::move(p), k);
}

Instance load_instance(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const Instance &instance) {
    std::ostringstream out;
    out << "p " << (instance.kind == Kind::MHV ? "mhv" : "mhe") << ' '
        << instance.graph.vertex_count() << ' ' << instance.precoloring.palette_size() << ' '
        << instance.k << '\n';
    for (auto [u, v] : instance.graph.edges())
        out << "e " << u << ' ' << v << '\n';
    for (int v = 1; v <= instance.graph.vertex_count(); ++v)
        if (instance.precoloring.is_colored(v))
            out << "c " << v << ' ' << instance.precoloring.color_of(v) << '\n';
    return out.str();
}

SetSystem parse_set_system(const std::string &text) {
    const auto lines = significant_lines(text);
    if (lines.empty())
        throw ParseError(1, "missing universe line 'u <n>'");

    auto [uno, uline] = lines.front();
    std::istringstream uin(uline);
    std::string tag;
    uin >> tag;
    if (tag != "u")
        throw ParseError(uno, "first non-comment line must be 'u <n>'");
    const long long n = read_int(uin, uno, "universe size");
    expect_end(uin, uno);
    if (n < 0)
        throw ParseError(uno, "universe size must be nonnegative");

    SetSystem system{static_cast<int>(n), {}, {}};
    bool any_weight = false;
    std::string prev_tag = "u";
    for (std::size_t idx = 1; idx < lines.size(); ++idx) {
        auto [no, content] = lines[idx];
        std::istringstream in(content);
        in >> tag;
        if (tag == "s") {
            std::vector<int> set;
            long long e;
            while (in >> e) {
                if (e < 1 || e > n)
                    throw ParseError(no, "set element out of universe");
                set.push_back(static_cast<int>(e));
            }
            if (set.empty())
                throw ParseError(no, "empty set");
            system.sets.push_back(std::move(set));
            system.weights.push_back(1);
        } else if (tag == "w") {
            if (prev_tag != "s")
                throw ParseError(no, "weight line must directly follow a set line");
            const long long w = read_int(in, no, "weight");
            expect_end(in, no);
            if (w < 1)
                throw ParseError(no, "weight must be positive");
            system.weights.back() = w;
            any_weight = true;
        } else {
            throw ParseError(no, "unknown record '" + tag + "'");
        }
        prev_tag = tag;
    }
    if (!any_weight)
        system.weights.clear();
    system.validate();
    return system;
}

SetSystem load_set_system(const std::string &path) {
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_set_system(buf.str());
}

std::string serialize_set_system(const SetSystem &system) {
    std::ostringstream out;
    out << "u " << system.universe_size << '\n';
    for (std::size_t j = 0; j < system.sets.size(); ++j) {
        out << "s";
        for (int e : system.sets[j])
            out << ' ' << e;
        out << '\n';
        if (system.weighted() && system.weights[j] != 1)
            out << "w " << system.weights[j] << '\n';
    }
    return out.str();
}

Instance generate_random(Kind kind, int n, int ell, double edge_probability,
                         double precolor_fraction, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("n must be at least 1");
    if (ell < 1)
        throw std::invalid_argument("palette size must be at least 1");
    if (edge_probability < 0.0 || edge_probability > 1.0)
        throw std::invalid_argument("edge probability must lie in [0,1]");
    if (precolor_fraction < 0.0 || precolor_fraction > 1.0)
        throw std::invalid_argument("precolor fraction must lie in [0,1]");

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> color(1, ell);

    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng) < edge_probability)
                edges.emplace_back(u, v);
    Precoloring p(n, ell);
    for (int v = 1; v <= n; ++v)
        if (coin(rng) < precolor_fraction)
            p.set(v, color(rng));
    return Instance(kind, Graph(n, std::move(edges)), std::move(p), 0);
}

} // namespace happy
