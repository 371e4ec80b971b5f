#include "fiberising/output.hpp"

#include <cstdio>
#include <fstream>
#include <system_error>

namespace fiberising {

std::string format_g12(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ignore;
            std::filesystem::remove(tmp, ignore);
            throw IoError("short write to '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignore;
        std::filesystem::remove(tmp, ignore);
        throw IoError("cannot rename '" + tmp.string() + "' to '" + path.string() +
                      "': " + ec.message());
    }
}

namespace {

const char* status_name(CellStatus s) {
    switch (s) {
        case CellStatus::ok: return "ok";
        case CellStatus::pole: return "pole";
        case CellStatus::invalid: return "invalid";
    }
    return "invalid";
}

}  // namespace

std::string sweep_csv(const SweepGrid& grid) {
    std::string out;
    out.reserve(grid.cells.size() * 96 + 128);
    out += "# schema: ";
    out += kSweepSchema;
    out += "\ndelta,gamma0,j12,j23,j31,pole_distance,status\n";
    for (std::size_t di = 0; di < grid.delta_axis.size(); ++di) {
        for (std::size_t gi = 0; gi < grid.gamma_axis.size(); ++gi) {
            const SweepCell& c = grid.at(di, gi);
            out += format_g12(grid.delta_axis[di]);
            out += ',';
            out += format_g12(grid.gamma_axis[gi]);
            out += ',';
            out += format_g12(c.j12);
            out += ',';
            out += format_g12(c.j23);
            out += ',';
            out += format_g12(c.j31);
            out += ',';
            out += format_g12(c.pole_distance);
            out += ',';
            out += status_name(c.status);
            out += '\n';
        }
    }
    return out;
}

std::string series_csv(const EntanglementSeries& series,
                       std::span<const std::string> extra_comments) {
    std::string out;
    out.reserve(series.samples.size() * 112 + 128);
    out += "# schema: ";
    out += kSeriesSchema;
    out += '\n';
    for (const std::string& line : extra_comments) {
        out += "# ";
        out += line;
        out += '\n';
    }
    out += "t,c12,c23,c13,c1_23,c123,norm_error\n";
    for (const EntanglementSample& s : series.samples) {
        out += format_g12(s.t);
        out += ',';
        out += format_g12(s.c12);
        out += ',';
        out += format_g12(s.c23);
        out += ',';
        out += format_g12(s.c13);
        out += ',';
        out += format_g12(s.c1_23);
        out += ',';
        out += format_g12(s.c123);
        out += ',';
        out += format_g12(s.norm_error);
        out += '\n';
    }
    return out;
}

}  // namespace fiberising
