#include "chern/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace chern {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw FormatError(std::string("not valid JSON: ") + e.what());
    }
}

const json& field(const json& obj, const char* name) {
    if (!obj.is_object())
        throw FormatError("expected a JSON object at the top level");
    const auto it = obj.find(name);
    if (it == obj.end())
        throw FormatError(std::string("missing field '") + name + "'");
    return *it;
}

std::string string_item(const json& j, const char* what) {
    if (!j.is_string())
        throw FormatError(std::string(what) + " must be a string");
    const std::string s = j.get<std::string>();
    if (s.empty())
        throw FormatError(std::string(what) + " must be nonempty");
    return s;
}

std::vector<Letter> letter_list(const json& j, const char* what) {
    if (!j.is_array())
        throw FormatError(std::string(what) + " must be an array of strings");
    std::vector<Letter> out;
    for (const json& item : j)
        out.emplace_back(string_item(item, what));
    return out;
}

// A word is an array of vertex names, or one compact string when every
// name is a single character.
std::vector<Letter> word_letters(const json& j, const std::string& where) {
    if (j.is_string()) {
        std::vector<Letter> out;
        for (char c : j.get<std::string>())
            out.emplace_back(std::string(1, c));
        if (out.empty())
            throw FormatError("empty word for simplex " + where);
        return out;
    }
    std::vector<Letter> out = letter_list(j, ("word of simplex " + where).c_str());
    if (out.empty())
        throw FormatError("empty word for simplex " + where);
    return out;
}

std::string tuple_str(const std::vector<Letter>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += vs[i].name();
    }
    return out;
}

struct ParsedRecords {
    SimplicialComplex complex;
    std::vector<OrientedSimplex> listed;
    std::map<VertexSet, CyclicWord> words;
};

ParsedRecords parse_records(const json& doc, bool words_required) {
    ParsedRecords out;

    std::set<Letter> declared;
    for (const Letter& v : letter_list(field(doc, "vertices"), "vertex name")) {
        if (!declared.insert(v).second)
            throw FormatError("vertex '" + v.name() + "' declared twice");
        out.complex.add_simplex({v});
    }
    if (declared.empty())
        throw FormatError("'vertices' must not be empty");

    const json& records = field(doc, "simplices");
    if (!records.is_array())
        throw FormatError("'simplices' must be an array of records");
    std::set<VertexSet> seen;
    for (const json& record : records) {
        if (!record.is_object())
            throw FormatError("each simplex record must be an object");
        std::vector<Letter> tuple = letter_list(field(record, "simplex"), "simplex vertex");
        if (tuple.empty())
            throw FormatError("a simplex record lists no vertices");
        for (const Letter& v : tuple)
            if (!declared.count(v))
                throw FormatError("simplex vertex '" + v.name() + "' is not declared");
        const VertexSet support = make_vertex_set(tuple);
        if (support.size() != tuple.size())
            throw FormatError("simplex {" + tuple_str(tuple) + "} repeats a vertex");
        if (!seen.insert(support).second)
            throw FormatError("simplex {" + tuple_str(support) + "} listed twice");
        out.complex.add_simplex(tuple);
        out.listed.emplace_back(std::move(tuple));

        if (!words_required)
            continue; // complex files ignore any word entries
        const auto word_it = record.find("word");
        if (word_it == record.end())
            throw FormatError("simplex {" + tuple_str(support) + "} has no word");
        out.words.emplace(support, CyclicWord(word_letters(*word_it, "{" + tuple_str(support) + "}")));
    }
    return out;
}

} // namespace

std::vector<OrientedSimplex> ShellingFile::listed_triangles() const {
    std::vector<OrientedSimplex> out;
    for (const OrientedSimplex& o : listed)
        if (o.dim() == 2)
            out.push_back(o);
    return out;
}

ShellingFile parse_shelling(const std::string& text) {
    ParsedRecords records = parse_records(parse_json(text), /*words_required=*/true);
    return {shelling_from_words(std::move(records.complex), records.words),
            std::move(records.listed)};
}

ComplexFile parse_complex(const std::string& text) {
    ParsedRecords records = parse_records(parse_json(text), /*words_required=*/false);
    return {std::move(records.complex), std::move(records.listed)};
}

FibrationDescription parse_fibration(const std::string& text) {
    const json doc = parse_json(text);
    FibrationDescription f;

    std::set<Letter> total_vertices;
    for (const Letter& v : letter_list(field(doc, "total_vertices"), "total vertex name")) {
        if (!total_vertices.insert(v).second)
            throw FormatError("total vertex '" + v.name() + "' declared twice");
        f.total.add_simplex({v});
    }

    const json& projection = field(doc, "projection");
    if (!projection.is_object())
        throw FormatError("'projection' must be a map of vertex names");
    for (const auto& [key, value] : projection.items()) {
        const Letter from(key);
        if (!total_vertices.count(from))
            throw FormatError("projection key '" + key + "' is not a total vertex");
        f.projection.emplace(from, Letter(string_item(value, "projection image")));
    }
    for (const Letter& v : total_vertices)
        if (!f.projection.count(v))
            throw FormatError("total vertex '" + v.name() + "' has no projection entry");

    const json& simplices = field(doc, "total_simplices");
    if (!simplices.is_array())
        throw FormatError("'total_simplices' must be an array of vertex-name lists");
    for (const json& item : simplices) {
        std::vector<Letter> tuple = letter_list(item, "total simplex vertex");
        if (tuple.empty())
            throw FormatError("a total simplex lists no vertices");
        std::vector<Letter> image;
        for (const Letter& v : tuple) {
            if (!total_vertices.count(v))
                throw FormatError("total simplex vertex '" + v.name() + "' is not declared");
            image.push_back(f.projection.at(v));
        }
        if (make_vertex_set(tuple).size() != tuple.size())
            throw FormatError("total simplex {" + tuple_str(tuple) + "} repeats a vertex");
        f.total.add_simplex(tuple);
        f.base.add_simplex(make_vertex_set(image));
    }

    const json& orders = field(doc, "fiber_orders");
    if (!orders.is_object())
        throw FormatError("'fiber_orders' must be a map vertex -> list");
    const VertexSet base_vertices = make_vertex_set(f.base.vertices());
    for (const auto& [key, value] : orders.items()) {
        const Letter vertex(key);
        if (!std::binary_search(base_vertices.begin(), base_vertices.end(), vertex))
            throw FormatError("fiber_orders key '" + key + "' is not a base vertex");
        f.fiber_orders.emplace(vertex, letter_list(value, ("fiber order of '" + key + "'").c_str()));
    }
    return f;
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw FormatError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

ShellingFile read_shelling_file(const std::string& path) { return parse_shelling(slurp(path)); }
ComplexFile read_complex_file(const std::string& path) { return parse_complex(slurp(path)); }
FibrationDescription read_fibration_file(const std::string& path) {
    return parse_fibration(slurp(path));
}

std::string render_shelling(const Shelling& s, const std::vector<OrientedSimplex>& orientations) {
    std::map<VertexSet, const OrientedSimplex*> oriented;
    for (const OrientedSimplex& o : orientations)
        oriented.emplace(o.support(), &o);

    json doc;
    doc["vertices"] = json::array();
    for (const Letter& v : s.complex().vertices())
        doc["vertices"].push_back(v.name());

    doc["simplices"] = json::array();
    for (const VertexSet& simplex : s.complex().maximal_simplices()) {
        json record;
        const auto it = oriented.find(simplex);
        const std::vector<Letter>& tuple = it != oriented.end() ? it->second->vertices() : simplex;
        record["simplex"] = json::array();
        for (const Letter& v : tuple)
            record["simplex"].push_back(v.name());
        record["word"] = json::array();
        for (const Letter& l : s.word_of(simplex).linearization())
            record["word"].push_back(l.name());
        doc["simplices"].push_back(std::move(record));
    }
    return doc.dump(2) + "\n";
}

void write_shelling_file(const std::string& path, const Shelling& s,
                         const std::vector<OrientedSimplex>& orientations) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot open file for writing: " + path);
    out << render_shelling(s, orientations);
    if (!out)
        throw FormatError("write failed: " + path);
}

} // namespace chern
