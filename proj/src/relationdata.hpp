#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "polyring.hpp"

// Loader for the relation library: the flag-space presentations and the
// displayed identities, shipped as text files and parsed into exact
// polynomials.  Every entry is homogeneity-checked at load against the
// degree encoded in its name.  Checksums of the raw files are recorded
// so reports can name the exact data they verified against.
namespace relationdata {

struct Library {
    std::map<std::string, polyring::Poly> entries;
    std::map<std::string, std::uint64_t> checksums;  // file name -> FNV-1a of bytes

    const polyring::Poly& get(const std::string& name) const;
    bool has(const std::string& name) const { return entries.count(name) != 0; }
};

// Loads once per process.  Directory resolution: $E8V_DATA_DIR when set,
// otherwise the build-time default.
const Library& library();
std::string data_directory();

std::uint64_t fnv1a(const std::string& bytes);

}  // namespace relationdata
