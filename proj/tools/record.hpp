#pragma once

// Ordered key/value output record for the CLI. Keys are dotted paths
// ("results.estimate"); the json renderer nests on the dots, csv emits flat
// key,value rows, text prints an aligned summary. Reals are always printed
// with 17 significant digits so equal inputs give byte-identical output.

#include <cstdio>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "quadcert/real_format.hpp"

namespace qcli {

class Record {
public:
    void add(std::string key, std::string v) {
        fields_.push_back({std::move(key), Value(std::move(v))});
    }
    void add(std::string key, const char* v) { add(std::move(key), std::string(v)); }
    void add_real(std::string key, double v) {
        fields_.push_back({std::move(key), Value(v)});
    }
    void add_int(std::string key, long long v) {
        fields_.push_back({std::move(key), Value(v)});
    }
    void add_bool(std::string key, bool v) {
        fields_.push_back({std::move(key), Value(v)});
    }

    std::string to_json() const {
        Node root;
        for (const auto& f : fields_) insert(root, split(f.key), 0, f.value);
        std::string out;
        render(root, 0, out);
        return out;
    }

    std::string to_csv() const {
        std::string out = "key,value\n";
        for (const auto& f : fields_)
            out += csv_escape(f.key) + "," + csv_escape(plain_value(f.value)) + "\n";
        return out;
    }

    std::string to_text() const {
        std::size_t width = 0;
        for (const auto& f : fields_) width = std::max(width, f.key.size());
        std::string out;
        for (const auto& f : fields_) {
            out += f.key;
            out.append(width - f.key.size() + 1, ' ');
            out += "= " + plain_value(f.value) + "\n";
        }
        return out;
    }

private:
    using Value = std::variant<std::string, double, long long, bool>;
    struct Field {
        std::string key;
        Value value;
    };
    struct Node {
        std::optional<Value> leaf;
        std::vector<std::pair<std::string, Node>> children;  // insertion order
    };

    std::vector<Field> fields_;

    static std::vector<std::string> split(const std::string& key) {
        std::vector<std::string> parts;
        std::size_t start = 0;
        for (std::size_t i = 0; i <= key.size(); ++i) {
            if (i == key.size() || key[i] == '.') {
                parts.push_back(key.substr(start, i - start));
                start = i + 1;
            }
        }
        return parts;
    }

    static void insert(Node& node, const std::vector<std::string>& path,
                       std::size_t depth, const Value& value) {
        if (depth == path.size()) {
            node.leaf = value;
            return;
        }
        for (auto& [name, child] : node.children) {
            if (name == path[depth]) {
                insert(child, path, depth + 1, value);
                return;
            }
        }
        node.children.emplace_back(path[depth], Node{});
        insert(node.children.back().second, path, depth + 1, value);
    }

    static void render(const Node& node, std::size_t depth, std::string& out) {
        if (node.leaf) {
            out += render_value(*node.leaf);
            return;
        }
        out += "{\n";
        for (std::size_t i = 0; i < node.children.size(); ++i) {
            out.append(2 * (depth + 1), ' ');
            out += quote(node.children[i].first) + ": ";
            render(node.children[i].second, depth + 1, out);
            if (i + 1 < node.children.size()) out += ",";
            out += "\n";
        }
        out.append(2 * depth, ' ');
        out += "}";
    }

    static std::string quote(const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            switch (c) {
                case '"': out += "\\\""; break;
                case '\\': out += "\\\\"; break;
                case '\n': out += "\\n"; break;
                case '\t': out += "\\t"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out += buf;
                    } else {
                        out += c;
                    }
            }
        }
        out += "\"";
        return out;
    }

    static std::string render_value(const Value& v) {
        if (std::holds_alternative<std::string>(v))
            return quote(std::get<std::string>(v));
        return plain_value(v);
    }

    static std::string plain_value(const Value& v) {
        if (std::holds_alternative<std::string>(v)) return std::get<std::string>(v);
        if (std::holds_alternative<double>(v))
            return quadcert::format_real(std::get<double>(v));
        if (std::holds_alternative<long long>(v))
            return std::to_string(std::get<long long>(v));
        return std::get<bool>(v) ? "true" : "false";
    }

    static std::string csv_escape(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        out += "\"";
        return out;
    }
};

}  // namespace qcli
