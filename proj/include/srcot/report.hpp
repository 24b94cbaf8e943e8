#ifndef SRCOT_REPORT_HPP
#define SRCOT_REPORT_HPP

#include <string>
#include <vector>

#include "srcot/complex.hpp"
#include "srcot/cotangent.hpp"

namespace srcot {

/// The machine-facing summary of a full cotangent computation, using vertex
/// names throughout; round-trips losslessly through its JSON form.
struct ReportDocument {
    struct Row {
        std::vector<std::string> a;
        std::vector<std::string> b;
        int hom = 0;
        int t1 = 0;
        int t2 = 0;
        bool operator==(const Row&) const = default;
    };
    struct Slice {
        int i = 0;
        int d = 0;
        long dim = 0;
        bool operator==(const Slice&) const = default;
    };

    int vertex_count = 0;
    std::vector<std::string> vertex_names;
    std::vector<std::vector<std::string>> facets;
    std::vector<int> f_vector;
    std::vector<Row> rows;       // canonical key order
    std::vector<Slice> coarse;   // i = 1,2 over the negative degree window

    bool operator==(const ReportDocument&) const = default;
};

ReportDocument build_report(const SimplicialComplex& x, int jobs = 1,
                            const Caps& caps = default_caps());
/// Same document assembled from precomputed per-key dimensions (nonzero
/// rows only), e.g. from an alternative computation route.
ReportDocument build_report(
    const SimplicialComplex& x,
    const std::vector<std::pair<DegreeKey, PieceDims>>& rows);

std::string report_to_json(const ReportDocument& doc);
ReportDocument report_from_json(const std::string& text);
std::string report_to_table(const ReportDocument& doc);

/// Parses either the JSON complex format {"vertices": [...], "facets":
/// [[...]]} or the plain-text one-facet-per-line format (whitespace-separated
/// vertex names). JSON is detected by a leading '{'.
SimplicialComplex parse_complex(const std::string& text);

SimplicialComplex load_complex_file(const std::string& path);

std::vector<std::string> face_names(const SimplicialComplex& x, Face f);
/// Comma-separated vertex names -> face; empty string -> empty face.
/// Repeated names raise multiplicities in the exponent-vector overload.
Face face_from_names(const SimplicialComplex& x, const std::string& csv);
ExponentVector exponents_from_names(const SimplicialComplex& x,
                                    const std::string& csv);

} // namespace srcot

#endif
