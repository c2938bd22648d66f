#include "cubepal/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cubepal {

namespace {

using Json = nlohmann::ordered_json;

const char* mode_name(Mode m) { return m == Mode::General ? "general" : "proper"; }

} // namespace

std::string to_json(const ColoringDocument& doc) {
    Json j;
    j["schema_version"] = doc.schema_version;
    j["n"] = doc.coloring.n;
    j["k"] = doc.coloring.k;
    j["mode"] = mode_name(doc.coloring.mode);
    j["colors"] = doc.coloring.colors;
    j["provenance"] = doc.provenance;
    return j.dump(2) + "\n";
}

ColoringDocument document_from_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& err) {
        throw FormatError(std::string("invalid JSON: ") + err.what());
    }
    try {
        if (!j.is_object()) throw FormatError("document must be a JSON object");
        const std::string schema = j.at("schema_version").get<std::string>();
        if (schema != kSchemaVersion)
            throw FormatError("unsupported schema_version '" + schema + "'");
        const int n = j.at("n").get<int>();
        const int k = j.at("k").get<int>();
        const std::string mode_text = j.at("mode").get<std::string>();
        Mode mode;
        if (mode_text == "general") mode = Mode::General;
        else if (mode_text == "proper") mode = Mode::Proper;
        else throw FormatError("mode must be 'general' or 'proper', got '" + mode_text + "'");
        std::vector<Color> colors;
        for (const auto& entry : j.at("colors")) {
            const std::int64_t value = entry.get<std::int64_t>();
            if (value < 0 || value > kMaxColorCount)
                throw FormatError("color entry out of range: " + std::to_string(value));
            colors.push_back(static_cast<Color>(value));
        }
        std::string provenance;
        if (j.contains("provenance")) provenance = j.at("provenance").get<std::string>();

        ColoringDocument doc;
        doc.schema_version = schema;
        doc.coloring = make_coloring(n, k, mode, std::move(colors));
        doc.provenance = std::move(provenance);
        return doc;
    } catch (const FormatError&) {
        throw;
    } catch (const nlohmann::json::exception& err) {
        throw FormatError(std::string("document field error: ") + err.what());
    } catch (const DomainError& err) {
        throw FormatError(std::string("document invariant violated: ") + err.what());
    } catch (const RangeError& err) {
        throw FormatError(std::string("document invariant violated: ") + err.what());
    }
}

ColoringDocument read_document(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open document: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return document_from_json(buffer.str());
}

void write_document(const std::string& path, const ColoringDocument& doc) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << to_json(doc);
    if (!out) throw IoError("write failed: " + path);
}

std::string vertex_name(int n, Vertex v) {
    std::string name(static_cast<std::size_t>(n), '0');
    for (int i = 1; i <= n; ++i)
        if (v & (Vertex{1} << (i - 1))) name[i - 1] = '1';
    return name;
}

std::string to_dot(const Coloring& c) {
    static constexpr const char* kPalette[] = {
        "#4c72b0", "#dd8452", "#55a868", "#c44e52", "#8172b3",
        "#937860", "#da8bc3", "#8c8c8c", "#ccb974", "#64b5cd",
    };
    constexpr std::size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

    std::ostringstream out;
    out << "graph hypercube {\n";
    out << "  // n=" << c.n << " k=" << c.k << " mode=" << mode_name(c.mode) << "\n";
    out << "  node [shape=circle];\n";
    const std::uint64_t vertices = std::uint64_t{1} << c.n;
    for (std::uint64_t v = 0; v < vertices; ++v)
        out << "  \"" << vertex_name(c.n, static_cast<Vertex>(v)) << "\";\n";
    for (EdgeIndex idx = 0; idx < c.colors.size(); ++idx) {
        const EdgeRef e = edge_from_index(c.n, idx);
        out << "  \"" << vertex_name(c.n, e.canonical_vertex) << "\" -- \""
            << vertex_name(c.n, other_endpoint(e)) << "\" [label=\"" << c.colors[idx]
            << "\", color=\"" << kPalette[(c.colors[idx] - 1) % kPaletteSize] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace cubepal
