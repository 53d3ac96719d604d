#include "uiverify/io.hpp"

#include <fstream>
#include <sstream>

#include "uiverify/errors.hpp"

namespace uiverify {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open file: " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw IoError("error while reading: " + path);
    }
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open file for writing: " + path);
    }
    out << content;
    out.flush();
    if (!out) {
        throw IoError("error while writing: " + path);
    }
}

} // namespace uiverify
