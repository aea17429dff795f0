#pragma once

// Runs the orbhf executable and captures stdout, stderr and the exit code.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace orbhf::testing {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

inline std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() /
               ("orbhf-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir);
    return dir;
}

inline CliResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto dir = scratch_dir();
    const auto out = dir / ("out" + std::to_string(counter) + ".txt");
    const auto err = dir / ("err" + std::to_string(counter) + ".txt");
    ++counter;
    const std::string cmd = std::string("\"") + ORBHF_CLI_PATH + "\" " + args + " >\"" +
                            out.string() + "\" 2>\"" + err.string() + "\"";
    int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out);
    r.err = slurp(err);
    return r;
}

inline std::filesystem::path write_scratch(const std::string& name, const std::string& text) {
    auto p = scratch_dir() / name;
    std::ofstream(p, std::ios::binary) << text;
    return p;
}

}  // namespace orbhf::testing
