#include "hypershuffle/dhg.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace hypershuffle {

DhgParseError::DhgParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                         message),
      line_(line),
      column_(column) {}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

}  // namespace

DirectedHypergraph parse_dhg(std::string_view text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> index;
    bool have_vertices = false;
    std::vector<Hyperarc> arcs;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(pos, end - pos);
        ++line_no;
        pos = end + 1;

        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const auto& kw = tokens.front();
        if (kw.text == "vertices") {
            if (have_vertices) throw DhgParseError(line_no, kw.column, "duplicate 'vertices' line");
            if (!arcs.empty()) throw DhgParseError(line_no, kw.column, "'vertices' must precede arcs");
            have_vertices = true;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                std::string name(tokens[t].text);
                if (name == "->") throw DhgParseError(line_no, tokens[t].column, "'->' is not a vertex name");
                if (!index.emplace(name, static_cast<VertexId>(labels.size())).second)
                    throw DhgParseError(line_no, tokens[t].column, "duplicate vertex '" + name + "'");
                labels.push_back(std::move(name));
            }
        } else if (kw.text == "arc") {
            if (!have_vertices) throw DhgParseError(line_no, kw.column, "arc before 'vertices' line");
            std::vector<VertexId> tail, head;
            std::vector<VertexId>* side = &tail;
            bool seen_arrow = false;
            for (std::size_t t = 1; t < tokens.size(); ++t) {
                if (tokens[t].text == "->") {
                    if (seen_arrow) throw DhgParseError(line_no, tokens[t].column, "second '->'");
                    if (tail.empty()) throw DhgParseError(line_no, tokens[t].column, "empty tail");
                    seen_arrow = true;
                    side = &head;
                    continue;
                }
                auto it = index.find(std::string(tokens[t].text));
                if (it == index.end())
                    throw DhgParseError(line_no, tokens[t].column,
                                        "unknown vertex '" + std::string(tokens[t].text) + "'");
                side->push_back(it->second);
            }
            if (!seen_arrow) throw DhgParseError(line_no, kw.column + kw.text.size(), "missing '->'");
            if (head.empty()) throw DhgParseError(line_no, line.size() + 1, "empty head");
            arcs.push_back({Multiset(tail), Multiset(head)});
        } else {
            throw DhgParseError(line_no, kw.column, "unknown keyword '" + std::string(kw.text) + "'");
        }
        if (end == text.size()) break;
    }
    if (!have_vertices) throw DhgParseError(1, 1, "missing 'vertices' line");

    DirectedHypergraph h(labels.size(), std::move(arcs));
    h.set_labels(std::move(labels));
    return h;
}

std::string serialize_dhg(const DirectedHypergraph& h) {
    std::string out = "vertices";
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        out += ' ';
        out += h.label(v);
    }
    out += '\n';
    const auto sorted = h.sorted();
    for (const auto& a : sorted.arcs()) {
        out += "arc";
        for (auto v : a.tail.expand()) out += ' ' + h.label(v);
        out += " ->";
        for (auto v : a.head.expand()) out += ' ' + h.label(v);
        out += '\n';
    }
    return out;
}

DirectedHypergraph read_dhg_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_dhg(buf.str());
}

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> parse_pairs(std::string_view text) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
        auto comma = tok.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("degree pair '" + tok + "' lacks a comma");
        try {
            std::size_t used_a = 0, used_b = 0;
            auto a = std::stoul(tok.substr(0, comma), &used_a);
            auto b = std::stoul(tok.substr(comma + 1), &used_b);
            if (used_a != comma || used_b != tok.size() - comma - 1) throw std::invalid_argument(tok);
            out.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("malformed degree pair '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

DegreeSequence parse_degree_sequence(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) throw std::invalid_argument("degree sequence needs '/' between vertices and arcs");
    DegreeSequence d;
    for (auto [in, out] : parse_pairs(text.substr(0, slash))) d.vertices.push_back({in, out});
    for (auto [t, h] : parse_pairs(text.substr(slash + 1))) d.arcs.push_back({t, h});
    for (const auto& a : d.arcs)
        if (a.tail == 0 || a.head == 0) throw std::invalid_argument("arc degrees must be positive");
    if (!d.conserves_stubs()) throw std::invalid_argument("degree sequence does not conserve stubs");
    return d;
}

std::string format_degree_sequence(const DegreeSequence& d) {
    std::string out;
    for (const auto& v : d.vertices) out += std::to_string(v.in) + ',' + std::to_string(v.out) + ' ';
    out += '/';
    for (const auto& a : d.arcs) out += ' ' + std::to_string(a.tail) + ',' + std::to_string(a.head);
    return out;
}

}  // namespace hypershuffle
