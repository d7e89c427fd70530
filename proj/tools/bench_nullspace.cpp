#include <chrono>
#include <iomanip>
#include <iostream>

#include <CLI11.hpp>

#include "fmethod/solver.hpp"

// Times the OpenMP kernels against their serial references on the linear
// systems the solver actually builds, and checks they return identical
// results: system construction (column-parallel) and nullspace extraction
// (row-parallel).

using namespace fmethod;
using Clock = std::chrono::steady_clock;

namespace {

double best_ms(size_t repeat, const std::function<void()>& f) {
    double best = 1e300;
    for (size_t i = 0; i < repeat; ++i) {
        auto t0 = Clock::now();
        f();
        auto t1 = Clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

bool same_matrix(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"nullspace kernel benchmark: OpenMP vs serial reference"};
    size_t repeat = 3;
    uint32_t rc_max = 8, juhl_max = 6, juhl_n = 4;
    app.add_option("--repeat", repeat, "timings per case, best taken")->capture_default_str();
    app.add_option("--rc-degree-max", rc_max, "highest rankin_cohen degree")->capture_default_str();
    app.add_option("--juhl-degree-max", juhl_max, "highest juhl degree")->capture_default_str();
    app.add_option("--juhl-n", juhl_n, "juhl dimension")->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    struct Case {
        std::string label;
        FSetting s;
        uint32_t degree;
    };
    std::vector<Case> cases;
    FSetting rc = builtin_setting("rankin_cohen");
    for (uint32_t d = 2; d <= rc_max; d += 2)
        cases.push_back({cat("rankin_cohen  degree ", d), rc, d});
    FSetting ju = builtin_setting("juhl", juhl_n);
    for (uint32_t d = 2; d <= juhl_max; d += 2)
        cases.push_back({cat("juhl n=", juhl_n, "      degree ", d), ju, d});

    std::cout << std::left << std::setw(28) << "case" << std::right << std::setw(7) << "rows"
              << std::setw(7) << "cols" << std::setw(11) << "kernel" << std::setw(12)
              << "serial ms" << std::setw(12) << "openmp ms" << std::setw(10) << "speedup"
              << std::setw(8) << "agree" << "\n";
    bool all_agree = true;
    auto report = [&](const Case& c, const ExactMatrix& m, const std::string& kernel, double ts,
                      double tp, bool agree) {
        all_agree = all_agree && agree;
        std::cout << std::left << std::setw(28) << c.label << std::right << std::setw(7)
                  << m.rows() << std::setw(7) << m.cols() << std::setw(11) << kernel
                  << std::setw(12) << std::fixed << std::setprecision(2) << ts << std::setw(12)
                  << tp << std::setw(10) << std::setprecision(2) << (tp > 0 ? ts / tp : 0.0)
                  << std::setw(8) << (agree ? "yes" : "NO") << "\n";
    };
    for (const auto& c : cases) {
        ExactMatrix ms(0, 0, {}), mp(0, 0, {});
        double ts = best_ms(repeat, [&] { ms = build_system_reference(c.s, c.degree); });
        double tp = best_ms(repeat, [&] { mp = build_system(c.s, c.degree); });
        report(c, ms, "build", ts, tp, same_matrix(ms, mp));

        NullspaceResult serial, parallel;
        ts = best_ms(repeat, [&] { serial = nullspace_reference(ms); });
        tp = best_ms(repeat, [&] { parallel = nullspace(ms); });
        report(c, ms, "nullspace", ts, tp,
               serial.rank == parallel.rank && serial.basis == parallel.basis);
    }
    if (!all_agree) {
        std::cerr << "disagreement between a serial reference and its OpenMP kernel\n";
        return 1;
    }
    return 0;
}
