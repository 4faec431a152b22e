#include <optional>
#include <regex>
#include <sstream>

#include "alba/semantics.hpp"

namespace alba {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_line(std::size_t line, const std::string& msg) {
    throw std::invalid_argument("model line " + std::to_string(line) + ": " + msg);
}

World parse_world(const std::string& s, std::size_t n, std::size_t line) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        bad_line(line, "expected a world number, got '" + s + "'");
    unsigned long w = std::stoul(s);
    if (w >= n) bad_line(line, "world '" + s + "' out of range");
    return static_cast<World>(w);
}

std::string format_set(WorldSet s, std::size_t n) {
    std::string out = "{";
    bool first = true;
    for (std::size_t w = 0; w < n; ++w) {
        if (!((s >> w) & 1U)) continue;
        if (!first) out += ",";
        out += std::to_string(w);
        first = false;
    }
    return out + "}";
}

}  // namespace

KripkeModel parse_model(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    std::optional<KripkeFrame> frame;
    KripkeModel m;
    static const std::regex worlds_re(R"(worlds\s*:\s*(\d+))");
    static const std::regex edges_re(R"(edges\s*:(.*))");
    static const std::regex edge_re(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
    static const std::regex prop_re(R"(prop\s+([A-Za-z_][A-Za-z0-9_]*)\s*:\s*\{([^}]*)\})");
    static const std::regex nom_re(R"(nom\s+'([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(\d+))");
    static const std::regex svar_re(R"(svar\s+\$([A-Za-z_][A-Za-z0-9_]*)\s*:\s*(\d+))");
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw);
        if (line.empty()) continue;
        std::smatch mt;
        if (!frame) {
            if (!std::regex_match(line, mt, worlds_re)) bad_line(lineno, "expected 'worlds: n'");
            frame.emplace(std::stoul(mt[1].str()));
            continue;
        }
        const std::size_t n = frame->size();
        if (std::regex_match(line, mt, edges_re)) {
            std::string rest = mt[1].str();
            std::string leftover = std::regex_replace(rest, edge_re, "");
            if (!trim(leftover).empty()) bad_line(lineno, "malformed edge list");
            for (auto it = std::sregex_iterator(rest.begin(), rest.end(), edge_re); it != std::sregex_iterator(); ++it)
                frame->add_edge(parse_world((*it)[1].str(), n, lineno), parse_world((*it)[2].str(), n, lineno));
        } else if (std::regex_match(line, mt, prop_re)) {
            WorldSet s = 0;
            std::stringstream items(mt[2].str());
            std::string item;
            while (std::getline(items, item, ',')) {
                item = trim(item);
                if (item.empty()) continue;
                s |= WorldSet{1} << parse_world(item, n, lineno);
            }
            m.valuation.props[mt[1].str()] = s;
        } else if (std::regex_match(line, mt, nom_re)) {
            m.valuation.noms[mt[1].str()] = parse_world(mt[2].str(), n, lineno);
        } else if (std::regex_match(line, mt, svar_re)) {
            m.assignment.vars[mt[1].str()] = parse_world(mt[2].str(), n, lineno);
        } else {
            bad_line(lineno, "unrecognised entry '" + line + "'");
        }
    }
    if (!frame) throw std::invalid_argument("model text is empty");
    m.frame = *frame;
    return m;
}

std::string format_frame(const KripkeFrame& f) {
    std::string out = "worlds: " + std::to_string(f.size()) + "\nedges:";
    for (const auto& [a, b] : f.edges()) out += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
    return out + "\n";
}

std::string format_model(const KripkeModel& m) {
    std::string out = format_frame(m.frame);
    for (const auto& [p, s] : m.valuation.props) out += "prop " + p + ": " + format_set(s, m.frame.size()) + "\n";
    for (const auto& [i, w] : m.valuation.noms) out += "nom '" + i + ": " + std::to_string(w) + "\n";
    for (const auto& [x, w] : m.assignment.vars) out += "svar $" + x + ": " + std::to_string(w) + "\n";
    return out;
}

}  // namespace alba
