#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <algorithm>

#include "doctest.h"
#include "json.hpp"

#include "qrotor/io.hpp"
#include "qrotor/wigner.hpp"

using namespace qrotor;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("double formatting round-trips") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double x = u(rng) * std::pow(10.0, i % 40 - 20);
        CHECK(std::stod(io::format_double(x)) == x);
    }
    CHECK(io::format_double(0.0) == "0");
    CHECK(io::format_double(1.0 / 6.0) == "0.16666666666666666");
}

TEST_CASE("wigner csv") {
    const auto grid = build_wigner(make_momentum_state(1, 0));
    std::ostringstream out;
    io::write_wigner_csv(out, grid);
    const auto lines = lines_of(out.str());
    REQUIRE(lines.size() == 37);
    CHECK(lines[0] == "D,3");
    int r0 = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].find(",0,") != std::string::npos) {
            CHECK(lines[i].substr(lines[i].rfind(',') + 1) == "0.16666666666666666");
            ++r0;
        }
    }
    CHECK(r0 == 6);

    std::mt19937_64 rng(3);
    const auto random = build_wigner(make_random_state(4, rng));
    std::stringstream buffer;
    io::write_wigner_csv(buffer, random);
    const auto back = io::read_wigner_csv(buffer);
    CHECK(back.dim() == 9);
    CHECK(max_abs_deviation(back, random) == 0.0);

    std::istringstream bad("D,4\n");
    CHECK_THROWS(io::read_wigner_csv(bad));
    std::istringstream truncated("D,3\n0,-2,0.5\n");
    CHECK_THROWS(io::read_wigner_csv(truncated));
}

TEST_CASE("representative csv") {
    std::mt19937_64 rng(5);
    const auto rep = representative(build_wigner(make_random_state(3, rng)));
    std::stringstream buffer;
    io::write_representative_csv(buffer, rep);
    const auto text = buffer.str();
    CHECK(lines_of(text).size() == 1 + 49);
    const auto back = io::read_representative_csv(buffer);
    CHECK(max_abs_deviation(back, rep) == 0.0);
}

TEST_CASE("marginals and state csv") {
    const auto grid = build_wigner(make_momentum_state(1, 1));
    std::ostringstream out;
    io::write_marginals_csv(out, grid);
    const auto lines = lines_of(out.str());
    CHECK(lines[0] == "D,3");
    CHECK(lines[1] == "axis,index,probability");
    CHECK(lines.size() == 2 + 6 + 6);
    const auto row = std::find_if(lines.begin(), lines.end(), [](const auto& l) { return l.starts_with("momentum,2,"); });
    REQUIRE(row != lines.end());
    CHECK(std::stod(row->substr(11)) == doctest::Approx(1.0).epsilon(1e-15));

    std::ostringstream state;
    io::write_state_csv(state, make_momentum_state(1, -1));
    CHECK(state.str() == "D,3\nm,re,im\n-1,1,0\n0,0,0\n1,0,0\n");
}

TEST_CASE("revival csv") {
    RevivalScan scan;
    scan.samples = {{0, 1.0}, {1, 0.25}};
    std::ostringstream out;
    io::write_revival_csv(out, scan);
    CHECK(out.str() == "j,autocorrelation\n0,1\n1,0.25\n");
}

TEST_CASE("admissibility json") {
    const auto doc = nlohmann::json::parse(io::admissibility_json(admissibility_report(canonicalize(1, 4))));
    CHECK(doc["alpha"] == "1/4");
    CHECK(doc["full_grid_ok_at_base"] == true);
    CHECK(doc["representative_ok_at_base"] == false);
    CHECK(doc["minimal_dilation"] == 2);
    CHECK(doc["paper_dilation"] == 4);
}

TEST_CASE("graymap") {
    std::mt19937_64 rng(9);
    const auto grid = build_wigner(make_random_state(2, rng));
    std::ostringstream image;
    std::ostringstream sidecar;
    io::write_graymap(image, sidecar, grid);
    std::istringstream in(image.str());
    std::string magic;
    int w = 0;
    int h = 0;
    int maxval = 0;
    in >> magic >> w >> h >> maxval;
    CHECK(magic == "P2");
    CHECK(w == 10);
    CHECK(h == 10);
    CHECK(maxval == 65535);

    double offset = 0.0;
    double scale = 0.0;
    for (const auto& line : lines_of(sidecar.str())) {
        if (line.starts_with("offset=")) offset = std::stod(line.substr(7));
        if (line.starts_with("scale=")) scale = std::stod(line.substr(6));
    }
    REQUIRE(scale > 0.0);
    // First pixel row is r = r_max.
    for (long r = grid.r_max(); r >= grid.r_min(); --r) {
        for (long s = 0; s < grid.side(); ++s) {
            int pixel = -1;
            in >> pixel;
            CHECK(std::abs(offset + pixel / scale - grid.at(s, r)) <= 0.5 / scale + 1e-15);
        }
    }
}
