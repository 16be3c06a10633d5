#include "epshull/stream_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "epshull/errors.hpp"

namespace epshull {

std::vector<PointN> read_point_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInputError("cannot open point stream: " + path);
    std::vector<PointN> out;
    std::string line;
    std::size_t dim = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;  // blank
        if (line[first] == '#') continue;
        std::istringstream ss(line);
        PointN p;
        double v;
        while (ss >> v) {
            if (!std::isfinite(v))
                throw InvalidInputError(path + ":" + std::to_string(lineno) +
                                        ": non-finite coordinate");
            p.push_back(v);
        }
        std::string trailing;
        if (!ss.eof() && ss.fail()) {
            ss.clear();
            ss >> trailing;
            if (!trailing.empty())
                throw InvalidInputError(path + ":" + std::to_string(lineno) +
                                        ": cannot parse '" + trailing + "'");
        }
        if (p.empty())
            throw InvalidInputError(path + ":" + std::to_string(lineno) + ": empty data line");
        if (dim == 0) dim = p.size();
        if (p.size() != dim)
            throw InvalidInputError(path + ":" + std::to_string(lineno) + ": expected " +
                                    std::to_string(dim) + " coordinates, got " +
                                    std::to_string(p.size()));
        out.push_back(std::move(p));
    }
    return out;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_point_stream(const std::string& path, std::span<const PointN> points) {
    std::ofstream out(path);
    if (!out) throw InvalidInputError("cannot write point stream: " + path);
    for (const PointN& p : points) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) out << ' ';
            out << format_double(p[i]);
        }
        out << '\n';
    }
}

FileSource2D::FileSource2D(std::string path) : path_(std::move(path)), in_(path_) {
    if (!in_) throw InvalidInputError("cannot open point stream: " + path_);
}

void FileSource2D::reset() {
    in_.clear();
    in_.seekg(0);
    lineno_ = 0;
}

bool FileSource2D::next(Vec2& out) {
    std::string line;
    while (std::getline(in_, line)) {
        ++lineno_;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ss(line);
        double x, y;
        if (!(ss >> x >> y) || !std::isfinite(x) || !std::isfinite(y))
            throw InvalidInputError(path_ + ":" + std::to_string(lineno_) +
                                    ": expected two finite reals");
        double extra;
        if (ss >> extra)
            throw InvalidInputError(path_ + ":" + std::to_string(lineno_) +
                                    ": stream is not 2-dimensional");
        out = {x, y};
        return true;
    }
    return false;
}

std::string result_csv_header() {
    return "algo,n,d,eps,delta,gamma,k,seed,passes,stored_final,stored_peak,"
           "opt_estimate,opt_method,is_eps_hull,max_violation,bad_fraction,wall_ms,mode";
}

std::string to_csv_line(const ResultRow& r) {
    std::ostringstream ss;
    ss << r.algo << ',' << r.n << ',' << r.d << ',' << format_double(r.eps) << ','
       << format_double(r.delta) << ',' << format_double(r.gamma) << ',' << r.k << ',' << r.seed
       << ',' << r.passes << ',' << r.stored_final << ',' << r.stored_peak << ','
       << r.opt_estimate << ',' << r.opt_method << ',' << (r.is_eps_hull ? "true" : "false")
       << ',' << format_double(r.max_violation) << ','
       << (r.bad_fraction < 0.0 ? std::string() : format_double(r.bad_fraction)) << ','
       << format_double(r.wall_ms) << ',' << r.mode;
    return ss.str();
}

void append_result_row(const std::string& path, const ResultRow& row) {
    bool fresh = !std::filesystem::exists(path) || std::filesystem::file_size(path) == 0;
    std::ofstream out(path, std::ios::app);
    if (!out) throw InvalidInputError("cannot write CSV: " + path);
    if (fresh) out << result_csv_header() << '\n';
    out << to_csv_line(row) << '\n';
}

}  // namespace epshull
