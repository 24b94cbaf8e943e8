#include "srcot/report.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace srcot {

using nlohmann::json;

std::vector<std::string> face_names(const SimplicialComplex& x, Face f) {
    std::vector<std::string> out;
    for (int v : f.members()) out.push_back(x.name_of(v));
    return out;
}

Face face_from_names(const SimplicialComplex& x, const std::string& csv) {
    return exponents_from_names(x, csv).support();
}

ExponentVector exponents_from_names(const SimplicialComplex& x,
                                    const std::string& csv) {
    ExponentVector e;
    std::size_t start = 0;
    while (start < csv.size()) {
        std::size_t comma = csv.find(',', start);
        if (comma == std::string::npos) comma = csv.size();
        std::string name = csv.substr(start, comma - start);
        start = comma + 1;
        if (name.empty()) continue;
        auto idx = x.index_of(name);
        if (!idx)
            throw std::invalid_argument("unknown vertex name '" + name + "'");
        e.set(*idx, e[*idx] + 1);
    }
    return e;
}

ReportDocument build_report(
    const SimplicialComplex& x,
    const std::vector<std::pair<DegreeKey, PieceDims>>& rows) {
    ReportDocument doc;
    doc.vertex_count = x.vertex_set().size();
    for (int v : x.vertex_set().members())
        doc.vertex_names.push_back(x.name_of(v));
    for (Face f : x.facets()) doc.facets.push_back(face_names(x, f));
    doc.f_vector = x.f_vector();

    int d_min = 0;
    for (const auto& [key, dims] : rows) {
        ReportDocument::Row row;
        row.a = face_names(x, key.a);
        row.b = face_names(x, key.b);
        row.hom = dims.hom;
        row.t1 = dims.t1;
        row.t2 = dims.t2;
        doc.rows.push_back(std::move(row));
        d_min = std::min(d_min, (int)key.a.size() - (int)key.b.size());
    }
    for (int i : {1, 2})
        for (int d = d_min; d <= 0; ++d) {
            long total = 0;
            for (const auto& [key, dims] : rows)
                total += (i == 1 ? dims.t1 : dims.t2) *
                         multiplicity_count(key.a, (int)key.b.size() + d);
            doc.coarse.push_back({i, d, total});
        }
    return doc;
}

ReportDocument build_report(const SimplicialComplex& x, int jobs,
                            const Caps& caps) {
    std::vector<std::pair<DegreeKey, PieceDims>> rows;
    for (const auto& p : full_report(x, jobs, caps))
        rows.emplace_back(p.key, p.dims);
    return build_report(x, rows);
}

std::string report_to_json(const ReportDocument& doc) {
    json j;
    j["vertex_count"] = doc.vertex_count;
    j["vertices"] = doc.vertex_names;
    j["facets"] = doc.facets;
    j["f_vector"] = doc.f_vector;
    j["rows"] = json::array();
    for (const auto& r : doc.rows)
        j["rows"].push_back({{"a", r.a},
                             {"b", r.b},
                             {"hom", r.hom},
                             {"t1", r.t1},
                             {"t2", r.t2}});
    j["coarse"] = json::array();
    for (const auto& s : doc.coarse)
        j["coarse"].push_back({{"i", s.i}, {"d", s.d}, {"dim", s.dim}});
    return j.dump(2);
}

ReportDocument report_from_json(const std::string& text) {
    json j = json::parse(text);
    ReportDocument doc;
    doc.vertex_count = j.at("vertex_count").get<int>();
    doc.vertex_names = j.at("vertices").get<std::vector<std::string>>();
    doc.facets = j.at("facets").get<std::vector<std::vector<std::string>>>();
    doc.f_vector = j.at("f_vector").get<std::vector<int>>();
    for (const auto& r : j.at("rows")) {
        ReportDocument::Row row;
        row.a = r.at("a").get<std::vector<std::string>>();
        row.b = r.at("b").get<std::vector<std::string>>();
        row.hom = r.at("hom").get<int>();
        row.t1 = r.at("t1").get<int>();
        row.t2 = r.at("t2").get<int>();
        doc.rows.push_back(std::move(row));
    }
    for (const auto& s : j.at("coarse"))
        doc.coarse.push_back({s.at("i").get<int>(), s.at("d").get<int>(),
                              s.at("dim").get<long>()});
    return doc;
}

namespace {

std::string join_names(const std::vector<std::string>& names) {
    if (names.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) out += ",";
        out += names[i];
    }
    return out;
}

} // namespace

std::string report_to_table(const ReportDocument& doc) {
    std::ostringstream os;
    os << "vertices (" << doc.vertex_count << "): " << join_names(doc.vertex_names)
       << "\n";
    os << "facets:";
    for (const auto& f : doc.facets) os << ' ' << join_names(f);
    os << "\nf-vector:";
    for (int c : doc.f_vector) os << ' ' << c;
    os << "\n\n";
    if (doc.rows.empty()) {
        os << "no nonzero T1/T2 pieces\n";
    } else {
        os << "a | b | hom | t1 | t2\n";
        for (const auto& r : doc.rows)
            os << join_names(r.a) << " | " << join_names(r.b) << " | " << r.hom
               << " | " << r.t1 << " | " << r.t2 << "\n";
    }
    os << "\ncoarse slices (i, degree, dim):\n";
    for (const auto& s : doc.coarse)
        os << "T" << s.i << " deg " << s.d << ": " << s.dim << "\n";
    return os.str();
}

SimplicialComplex parse_complex(const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos)
        throw std::invalid_argument("empty complex description");
    if (text[first] == '{') {
        json j = json::parse(text);
        std::vector<std::string> vertices;
        if (j.contains("vertices"))
            vertices = j.at("vertices").get<std::vector<std::string>>();
        auto facets = j.at("facets").get<std::vector<std::vector<std::string>>>();
        return SimplicialComplex::from_facets(std::move(vertices), facets);
    }
    std::vector<std::vector<std::string>> facets;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::string> facet;
        std::string word;
        while (ls >> word) facet.push_back(word);
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    if (facets.empty()) throw std::invalid_argument("no facets in input");
    return SimplicialComplex::from_facets({}, facets);
}

SimplicialComplex load_complex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return parse_complex(os.str());
}

} // namespace srcot
