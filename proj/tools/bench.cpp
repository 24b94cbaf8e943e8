#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "srcot/cotangent.hpp"
#include "srcot/gen.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace srcot;

namespace {

double time_report(const SimplicialComplex& x, int jobs, std::size_t& rows) {
    auto start = std::chrono::steady_clock::now();
    auto report = full_report(x, jobs);
    auto stop = std::chrono::steady_clock::now();
    rows = report.size();
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    int jobs = 4;
#ifdef _OPENMP
    jobs = omp_get_max_threads();
#endif
    std::vector<std::string> descriptors = {"octahedron-diagonals", "ngon:9",
                                            "simplex-boundary:4"};
    if (argc > 1) descriptors.assign(argv + 1, argv + argc);

    for (const auto& d : descriptors) {
        SimplicialComplex x = make_generator(d);
        std::size_t rows_serial = 0, rows_par = 0;
        double serial = time_report(x, 1, rows_serial);
        double par = time_report(x, jobs, rows_par);
        if (rows_serial != rows_par) {
            std::cerr << d << ": parallel result disagrees with serial\n";
            return 1;
        }
        std::cout << d << ": " << rows_serial << " rows, serial " << serial
                  << "s, " << jobs << " jobs " << par << "s, speedup "
                  << (par > 0 ? serial / par : 0.0) << "x\n";
    }
    return 0;
}
