#include "relationdata.hpp"

#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>

#include "weyl.hpp"

namespace relationdata {

using polyring::Poly;

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    return h;
}

std::string data_directory() {
    if (const char* env = std::getenv("E8V_DATA_DIR")) return env;
    return E8V_DATA_DIR;
}

namespace {

// topological degree each named entry must be homogeneous of; -1 = skip
int expected_degree(const std::string& name) {
    auto num_after = [&](const std::string& prefix) -> int {
        std::size_t i = prefix.size(), j = i;
        while (j < name.size() && std::isdigit(static_cast<unsigned char>(name[j]))) ++j;
        if (j == i) return -1;
        return std::stoi(name.substr(i, j - i));
    };
    if (name.rfind("rho", 0) == 0) {
        int n = num_after("rho");
        if (n > 0) return 2 * n;  // rho8_A2, rho12', rho15h, ... all encode the degree
    }
    if (name.rfind("lemIp", 0) == 0) return 2 * num_after("lemIp");
    if (name.rfind("lemI", 0) == 0) return 2 * num_after("lemI");
    if (name.rfind("lemJ", 0) == 0) return 2 * num_after("lemJ");
    if (name.rfind("xcof_", 0) == 0) {
        if (name == "xcof_extra10") return 30 - 20;
        int n = num_after("xcof_");
        if (n > 0) return 30 - 2 * n;
    }
    if (name == "j6_explicit" || name == "jt6_tuc" || name == "jt6_gamma" ||
        name == "generator_v" || name == "v_mod_display" || name == "g6h_from_g6t" ||
        name == "rho6t")
        return 12;
    if (name == "j10_explicit" || name == "jt10_tuc" || name == "jt10_gamma" ||
        name == "generator_w" || name == "w_mod_display")
        return 20;
    if (name == "c8_gamma" || name == "rho8_c8elim_corrected") return 16;
    if (name == "x_expansion" || name == "r15") return 30;
    if (name == "r20") return 40;
    if (name == "r24") return 48;
    if (name == "r30") return 60;
    return -1;
}

void load_file(Library& lib, const std::string& file) {
    std::string path = data_directory() + "/" + file;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("relation library: cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string bytes = buffer.str();
    lib.checksums[file] = fnv1a(bytes);

    std::istringstream lines(bytes);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t");
        if (start == std::string::npos || line[start] == '#') continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error(file + ":" + std::to_string(lineno) + ": expected 'name = expr'");
        std::string name = line.substr(start, eq - start);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.pop_back();
        Poly value;
        try {
            value = polyring::parse_expr(line.substr(eq + 1));
        } catch (const std::exception& e) {
            throw std::runtime_error(file + ":" + std::to_string(lineno) + " (" + name + "): " + e.what());
        }
        int deg = expected_degree(name);
        if (deg >= 0) {
            if (!value.is_homogeneous())
                throw std::runtime_error(file + ": entry '" + name + "' is not homogeneous");
            if (!value.is_zero() && value.homogeneous_degree() != deg)
                throw std::runtime_error(file + ": entry '" + name + "' has degree " +
                                         std::to_string(value.homogeneous_degree()) + ", expected " +
                                         std::to_string(deg));
        }
        if (!lib.entries.emplace(name, std::move(value)).second)
            throw std::runtime_error(file + ": duplicate entry '" + name + "'");
    }
}

}  // namespace

const Poly& Library::get(const std::string& name) const {
    auto it = entries.find(name);
    if (it == entries.end()) throw std::invalid_argument("relation library: no entry '" + name + "'");
    return it->second;
}

const Library& library() {
    static Library lib = [] {
        weyl::register_all_variables();
        Library l;
        load_file(l, "e8t_relations.txt");
        load_file(l, "e7t_relations.txt");
        load_file(l, "displays.txt");
        return l;
    }();
    return lib;
}

}  // namespace relationdata
