#include "geophase/problem_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "geophase/error.hpp"

namespace geophase {
namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& msg) {
    throw Error(ErrorKind::Parse, msg);
}

ComplexMatrix parse_matrix(const json& doc, const char* key, int dim) {
    if (!doc.contains(key)) parse_fail(std::string("missing key '") + key + "'");
    const json& rows = doc.at(key);
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(dim)) {
        std::ostringstream msg;
        msg << "shape mismatch: '" << key << "' has "
            << (rows.is_array() ? std::to_string(rows.size()) : std::string("no"))
            << " rows but dimension is " << dim;
        parse_fail(msg.str());
    }
    ComplexMatrix m(dim, dim);
    for (int r = 0; r < dim; ++r) {
        const json& row = rows[static_cast<std::size_t>(r)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
            std::ostringstream msg;
            msg << "shape mismatch: '" << key << "' row " << r << " has "
                << (row.is_array() ? std::to_string(row.size()) : std::string("no"))
                << " entries but dimension is " << dim;
            parse_fail(msg.str());
        }
        for (int c = 0; c < dim; ++c) {
            const json& z = row[static_cast<std::size_t>(c)];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
                std::ostringstream msg;
                msg << "'" << key << "'[" << r << "][" << c << "] must be [re, im]";
                parse_fail(msg.str());
            }
            m(r, c) = cxd(z[0].get<double>(), z[1].get<double>());
        }
    }
    return m;
}

json matrix_to_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::ordered_json optional_phase(const std::optional<double>& v) {
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string csv_number(double v) {
    if (!std::isfinite(v)) return "nan";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string csv_phase(const std::optional<double>& v) {
    return v ? csv_number(*v) : "nan";
}

}  // namespace

ProblemFile parse_problem(const json& doc) {
    if (!doc.is_object()) parse_fail("problem file must be a JSON object");
    if (!doc.contains("dimension") || !doc.at("dimension").is_number_integer()) {
        parse_fail("missing integer key 'dimension'");
    }
    const auto dim = doc.at("dimension").get<long long>();
    if (dim < 1 || dim > 4096) parse_fail("'dimension' must be a positive integer");
    ProblemFile f;
    f.dimension = static_cast<int>(dim);
    f.rho = parse_matrix(doc, "rho", f.dimension);
    f.hamiltonian = parse_matrix(doc, "hamiltonian", f.dimension);
    return f;
}

ProblemFile parse_problem_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    return parse_problem(doc);
}

ProblemFile read_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) parse_fail("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_text(buf.str());
}

json to_json(const ProblemFile& file) {
    return json{{"dimension", file.dimension},
                {"rho", matrix_to_json(file.rho)},
                {"hamiltonian", matrix_to_json(file.hamiltonian)}};
}

std::string serialize_problem(const ProblemFile& file) {
    return to_json(file).dump(2) + "\n";
}

Problem to_problem(const ProblemFile& file, const Tolerances& tol) {
    return make_problem(file.rho, file.hamiltonian, tol);
}

ProblemFile to_problem_file(const Problem& problem) {
    return ProblemFile{static_cast<int>(problem.dim()), problem.rho0.mat(),
                       problem.hamiltonian_lab};
}

nlohmann::ordered_json report_to_json(const PhaseReport& report) {
    nlohmann::ordered_json components = nlohmann::ordered_json::array();
    for (const auto& c : report.components) {
        components.push_back({{"j", c.j + 1},
                              {"q", c.q},
                              {"visibility", c.visibility},
                              {"gamma", c.gamma},
                              {"dyn_phase", c.dyn_phase},
                              {"total_phase", c.total_phase}});
    }
    return nlohmann::ordered_json{{"t", report.t},
                {"gamma_total", optional_phase(report.gamma_total)},
                {"uhlmann", optional_phase(report.uhlmann)},
                {"sjoqvist", optional_phase(report.sjoqvist)},
                {"overlap_magnitude", report.overlap_magnitude},
                {"components", std::move(components)},
                {"warnings", report.warnings}};
}

std::string sweep_csv_header(Eigen::Index dim) {
    std::string h = "t,gamma_total,uhlmann,sjoqvist,overlap_magnitude";
    for (Eigen::Index j = 1; j <= dim; ++j) {
        const auto s = std::to_string(j);
        h += ",q_" + s + ",nu_" + s + ",gamma_" + s;
    }
    return h;
}

std::string sweep_csv_row(const PhaseReport& report) {
    std::string row = csv_number(report.t) + "," + csv_phase(report.gamma_total) + "," +
                      csv_phase(report.uhlmann) + "," + csv_phase(report.sjoqvist) + "," +
                      csv_number(report.overlap_magnitude);
    for (const auto& c : report.components) {
        row += "," + csv_number(c.q) + "," + csv_number(c.visibility) + "," + csv_number(c.gamma);
    }
    return row;
}

nlohmann::ordered_json sweep_row_json(const PhaseReport& report) {
    nlohmann::ordered_json row = {{"t", report.t},
                {"gamma_total", optional_phase(report.gamma_total)},
                {"uhlmann", optional_phase(report.uhlmann)},
                {"sjoqvist", optional_phase(report.sjoqvist)},
                {"overlap_magnitude", report.overlap_magnitude}};
    for (const auto& c : report.components) {
        const auto s = std::to_string(c.j + 1);
        row["q_" + s] = c.q;
        row["nu_" + s] = c.visibility;
        row["gamma_" + s] = c.gamma;
    }
    return row;
}

}  // namespace geophase
