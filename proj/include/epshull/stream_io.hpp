#pragma once

#include <cstdint>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "epshull/geom.hpp"
#include "epshull/multipass.hpp"

namespace epshull {

// Plain-text point streams: '#' lines are comments, every other nonblank line
// holds exactly d whitespace-separated decimal reals. d comes from the first
// data line. Line order is stream order.

std::vector<PointN> read_point_stream(const std::string& path);
void write_point_stream(const std::string& path, std::span<const PointN> points);

/// File-backed rewindable 2D source for the multipass driver. Each reset()
/// seeks back to the start of the file; memory stays O(1) in the stream size.
class FileSource2D final : public PointSource2D {
public:
    explicit FileSource2D(std::string path);
    void reset() override;
    bool next(Vec2& out) override;

private:
    std::string path_;
    std::ifstream in_;
    std::size_t lineno_ = 0;
};

struct ResultRow {
    std::string algo;
    std::size_t n = 0;
    int d = 0;
    double eps = 0.0;
    double delta = 0.0;
    double gamma = 0.0;
    int k = 0;
    std::int64_t seed = 0;
    int passes = 0;
    std::size_t stored_final = 0;
    std::size_t stored_peak = 0;
    std::size_t opt_estimate = 0;
    std::string opt_method = "none";  // brute|boundary_brute|boundary_cover|constructive|none
    bool is_eps_hull = false;
    double max_violation = 0.0;
    double bad_fraction = -1.0;  // negative means not applicable
    double wall_ms = 0.0;
    std::string mode;
};

std::string result_csv_header();
std::string to_csv_line(const ResultRow& row);
void append_result_row(const std::string& path, const ResultRow& row);

std::string format_double(double v);  // 17 significant digits, round-trip exact

}  // namespace epshull
