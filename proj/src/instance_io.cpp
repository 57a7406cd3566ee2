#include "pdc/instance_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <variant>
#include <vector>

namespace pdc {

namespace {

using json = nlohmann::json;
using PathToken = std::variant<std::string, std::size_t>;
using Path = std::vector<PathToken>;

// Finds where the value at a path starts in text that nlohmann already
// accepted, so only well-formed JSON has to be handled.
class Locator {
public:
    explicit Locator(std::string_view text) : s_(text) {}

    std::size_t find(const Path& path) {
        pos_ = 0;
        ws();
        for (const auto& token : path) {
            if (pos_ >= s_.size()) break;
            if (s_[pos_] == '{' && std::holds_alternative<std::string>(token)) {
                if (!enter_key(std::get<std::string>(token))) break;
            } else if (s_[pos_] == '[' && std::holds_alternative<std::size_t>(token)) {
                if (!enter_index(std::get<std::size_t>(token))) break;
            } else {
                break;
            }
        }
        return pos_;
    }

    std::pair<std::size_t, std::size_t> line_column(std::size_t offset) const {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i < offset && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        return {line, column};
    }

private:
    void ws() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\n' || s_[pos_] == '\r' || s_[pos_] == '\t'))
            ++pos_;
    }

    std::string read_string() {
        std::string out;
        ++pos_;  // opening quote
        while (pos_ < s_.size() && s_[pos_] != '"') {
            if (s_[pos_] == '\\') ++pos_;
            if (pos_ < s_.size()) out += s_[pos_++];
        }
        ++pos_;
        return out;
    }

    void skip_value() {
        ws();
        if (pos_ >= s_.size()) return;
        const char c = s_[pos_];
        if (c == '"') {
            read_string();
        } else if (c == '{' || c == '[') {
            const char close = c == '{' ? '}' : ']';
            ++pos_;
            ws();
            while (pos_ < s_.size() && s_[pos_] != close) {
                if (c == '{') {
                    read_string();
                    ws();
                    ++pos_;  // ':'
                }
                skip_value();
                ws();
                if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
                ws();
            }
            ++pos_;
        } else {
            while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != '}' && s_[pos_] != ']' &&
                   s_[pos_] != ' ' && s_[pos_] != '\n' && s_[pos_] != '\r' && s_[pos_] != '\t')
                ++pos_;
        }
    }

    bool enter_key(const std::string& key) {
        ++pos_;
        ws();
        while (pos_ < s_.size() && s_[pos_] != '}') {
            const std::string k = read_string();
            ws();
            ++pos_;
            ws();
            if (k == key) return true;
            skip_value();
            ws();
            if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
            ws();
        }
        return false;
    }

    bool enter_index(std::size_t index) {
        ++pos_;
        ws();
        for (std::size_t i = 0; pos_ < s_.size() && s_[pos_] != ']'; ++i) {
            if (i == index) return true;
            skip_value();
            ws();
            if (pos_ < s_.size() && s_[pos_] == ',') ++pos_;
            ws();
        }
        return false;
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

std::string describe(const Path& path) {
    std::string out;
    for (const auto& t : path) {
        out += '/';
        if (std::holds_alternative<std::string>(t))
            out += std::get<std::string>(t);
        else
            out += std::to_string(std::get<std::size_t>(t));
    }
    return out.empty() ? "/" : out;
}

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    [[noreturn]] void fail(const Path& path, const std::string& message) const {
        Locator loc(text_);
        const auto [line, column] = loc.line_column(loc.find(path));
        throw ParseError(line, column, describe(path) + ": " + message);
    }

    Rational rational(const json& j, const Path& path) const {
        if (!j.is_string()) fail(path, "expected a rational written as a string");
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            fail(path, e.what());
        }
    }

    AffinePiece piece(const json& j, const Path& path, const char* constant_key, const char* gradient_key,
                      std::size_t dimension) const {
        if (!j.is_object()) fail(path, "expected an object");
        for (const auto& [key, value] : j.items())
            if (key != constant_key && key != gradient_key) fail(extend(path, key), "unknown key \"" + key + "\"");
        if (!j.contains(constant_key)) fail(path, std::string("missing key \"") + constant_key + "\"");
        if (!j.contains(gradient_key)) fail(path, std::string("missing key \"") + gradient_key + "\"");

        AffinePiece p;
        p.constant = rational(j.at(constant_key), extend(path, constant_key));
        const auto gpath = extend(path, gradient_key);
        const auto& g = j.at(gradient_key);
        if (!g.is_array()) fail(gpath, "expected an array");
        if (g.size() != dimension)
            fail(gpath, "gradient has length " + std::to_string(g.size()) + ", dimension is " +
                            std::to_string(dimension));
        for (std::size_t k = 0; k < g.size(); ++k) p.gradient.push_back(rational(g[k], extend(gpath, k)));
        return p;
    }

    std::vector<AffinePiece> pieces(const json& root, const char* key, const char* constant_key,
                                    const char* gradient_key, std::size_t dimension) const {
        const Path path{std::string(key)};
        if (!root.contains(key)) fail({}, std::string("missing key \"") + key + "\"");
        const auto& list = root.at(key);
        if (!list.is_array() || list.empty()) fail(path, "expected a nonempty array of pieces");
        std::vector<AffinePiece> out;
        for (std::size_t i = 0; i < list.size(); ++i)
            out.push_back(piece(list[i], extend(path, i), constant_key, gradient_key, dimension));
        return out;
    }

    static Path extend(Path p, PathToken t) {
        p.push_back(std::move(t));
        return p;
    }

private:
    std::string_view text_;
};

} // namespace

Instance parse_instance(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // byte is 1-based and points just past the offending character
        Locator loc(text);
        const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        const auto [line, column] = loc.line_column(offset);
        std::string what = e.what();
        if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
        throw ParseError(line, column, what);
    }

    const Reader r(text);
    if (!root.is_object()) r.fail({}, "expected a JSON object");
    for (const auto& [key, value] : root.items())
        if (key != "label" && key != "dimension" && key != "plus" && key != "minus")
            r.fail({key}, "unknown key \"" + key + "\"");

    std::optional<std::string> label;
    if (root.contains("label")) {
        if (!root["label"].is_string()) r.fail({std::string("label")}, "expected a string");
        label = root["label"].get<std::string>();
    }

    if (!root.contains("dimension")) r.fail({}, "missing key \"dimension\"");
    const auto& dim = root["dimension"];
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
        r.fail({std::string("dimension")}, "expected a positive integer");
    const std::size_t n = dim.get<std::size_t>();

    auto plus = r.pieces(root, "plus", "a", "v", n);
    auto minus = r.pieces(root, "minus", "b", "w", n);
    return Instance{std::move(label), PolyhedralDC::make(n, std::move(plus), std::move(minus))};
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, 0, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

std::string serialize_instance(const Instance& instance) {
    nlohmann::ordered_json root;
    if (instance.label) root["label"] = *instance.label;
    const auto& f = instance.function;
    root["dimension"] = f.dimension();
    auto pieces = [](const std::vector<AffinePiece>& list, const char* ck, const char* gk) {
        auto arr = nlohmann::ordered_json::array();
        for (const auto& p : list) {
            nlohmann::ordered_json item;
            item[ck] = to_string(p.constant);
            auto g = nlohmann::ordered_json::array();
            for (const auto& v : p.gradient) g.push_back(to_string(v));
            item[gk] = std::move(g);
            arr.push_back(std::move(item));
        }
        return arr;
    };
    root["plus"] = pieces(f.plus(), "a", "v");
    root["minus"] = pieces(f.minus(), "b", "w");
    return root.dump(2) + "\n";
}

} // namespace pdc
