#include "kacq/quiver_io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "kacq/errors.hpp"

namespace kacq {

namespace {

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> words;
    for (std::string w; in >> w;)
        words.push_back(w);
    return words;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& message) {
    throw InputError("line " + std::to_string(line) + ": " + message);
}

int parse_parameter(const std::string& family, const std::string& text, int minimum) {
    int value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        throw InputError("bad parameter '" + text + "' for builtin " + family);
    if (value < minimum)
        throw InputError("builtin " + family + " needs a parameter >= " + std::to_string(minimum));
    if (value > 1000)
        throw InputError("builtin " + family + " parameter too large");
    return value;
}

std::vector<std::string> numbered(const std::string& prefix, int n) {
    std::vector<std::string> ids;
    for (int k = 1; k <= n; ++k)
        ids.push_back(prefix + std::to_string(k));
    return ids;
}

} // namespace

Quiver parse_quiver(const std::string& text) {
    std::vector<std::string> vertices;
    std::vector<Quiver::NamedArrow> arrows;
    std::set<std::string> vertex_ids, arrow_ids;

    std::istringstream in(text);
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        auto words = split_words(line);
        if (words.empty())
            continue;
        if (words[0] == "vertex") {
            if (words.size() != 2)
                fail_at(line_no, "expected 'vertex <id>'");
            if (!vertex_ids.insert(words[1]).second)
                fail_at(line_no, "duplicate vertex id '" + words[1] + "'");
            vertices.push_back(words[1]);
        } else if (words[0] == "arrow") {
            if (words.size() != 4)
                fail_at(line_no, "expected 'arrow <id> <source> <target>'");
            if (!arrow_ids.insert(words[1]).second)
                fail_at(line_no, "duplicate arrow id '" + words[1] + "'");
            for (int k : {2, 3})
                if (!vertex_ids.count(words[k]))
                    fail_at(line_no, "undeclared vertex '" + words[k] + "'");
            arrows.push_back({words[1], words[2], words[3]});
        } else {
            fail_at(line_no, "unknown directive '" + words[0] + "'");
        }
    }
    if (vertices.empty())
        throw InputError("quiver has no vertices");
    return Quiver::from_ids(std::move(vertices), arrows);
}

std::string render_quiver(const Quiver& q) {
    std::string out;
    for (const auto& v : q.vertices())
        out += "vertex " + v + "\n";
    for (const auto& a : q.arrows())
        out += "arrow " + a.id + " " + q.vertices()[a.source] + " " + q.vertices()[a.target] + "\n";
    return out;
}

bool is_builtin_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        return false;
    static const std::set<std::string> families{"kronecker", "loops", "cycle", "path", "star"};
    return families.count(spec.substr(0, colon)) > 0;
}

Quiver builtin_quiver(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw InputError("builtin quiver must look like family:n, got '" + spec + "'");
    const std::string family = spec.substr(0, colon);
    const std::string param = spec.substr(colon + 1);
    std::vector<Quiver::NamedArrow> arrows;

    if (family == "kronecker") {
        int m = parse_parameter(family, param, 0);
        for (const auto& id : numbered("a", m))
            arrows.push_back({id, "i", "j"});
        return Quiver::from_ids({"i", "j"}, arrows);
    }
    if (family == "loops") {
        int g = parse_parameter(family, param, 0);
        for (const auto& id : numbered("l", g))
            arrows.push_back({id, "i", "i"});
        return Quiver::from_ids({"i"}, arrows);
    }
    if (family == "cycle") {
        int n = parse_parameter(family, param, 1);
        auto vs = numbered("", n);
        for (int k = 0; k < n; ++k)
            arrows.push_back({"a" + std::to_string(k + 1), vs[k], vs[(k + 1) % n]});
        return Quiver::from_ids(vs, arrows);
    }
    if (family == "path") {
        int n = parse_parameter(family, param, 1);
        auto vs = numbered("", n);
        for (int k = 0; k + 1 < n; ++k)
            arrows.push_back({"a" + std::to_string(k + 1), vs[k], vs[k + 1]});
        return Quiver::from_ids(vs, arrows);
    }
    if (family == "star") {
        int k = parse_parameter(family, param, 0);
        std::vector<std::string> vs{"c"};
        for (int leaf = 1; leaf <= k; ++leaf) {
            vs.push_back(std::to_string(leaf));
            arrows.push_back({"a" + std::to_string(leaf), vs.back(), "c"});
        }
        return Quiver::from_ids(vs, arrows);
    }
    throw InputError("unknown builtin quiver family '" + family + "'");
}

Quiver load_quiver(const std::string& spec_or_path) {
    if (is_builtin_spec(spec_or_path))
        return builtin_quiver(spec_or_path);
    std::ifstream in(spec_or_path);
    if (!in)
        throw InputError("cannot read quiver file '" + spec_or_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_quiver(buffer.str());
    } catch (const InputError& e) {
        throw InputError(spec_or_path + ": " + e.what());
    }
}

} // namespace kacq
