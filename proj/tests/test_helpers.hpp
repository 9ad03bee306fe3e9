#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "compwave/riemann.hpp"
#include "compwave/stress.hpp"
#include "compwave/waves.hpp"

namespace cwtest {

inline compwave::StressModel default_model() {
    return compwave::StressModel::make(1.0, 1.0, 0.5);
}

inline compwave::FarFieldData default_data() {
    return compwave::build_case1(default_model(), 0.0, 2.0);
}

inline compwave::WaveAnsatz default_ansatz() {
    return compwave::WaveAnsatz(default_model(), default_data(), 0.5);
}

/// Fresh scratch directory under the current working directory.
inline std::filesystem::path scratch_dir(const std::string& name) {
    const std::filesystem::path p = std::filesystem::current_path() / "scratch" / name;
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
    std::ofstream os(p, std::ios::binary);
    os << text;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

/// Run the compwave binary (path baked in by the build) with the given
/// arguments, capturing stdout/stderr.
inline CliResult run_cli(const std::string& args, const std::filesystem::path& workdir) {
#ifndef COMPWAVE_CLI_PATH
#error "COMPWAVE_CLI_PATH must be defined by the build"
#endif
    const std::filesystem::path out = workdir / "cli_stdout.txt";
    const std::filesystem::path err = workdir / "cli_stderr.txt";
    const std::string cmd = std::string("cd '") + workdir.string() + "' && '" +
                            COMPWAVE_CLI_PATH + "' " + args + " > '" + out.string() +
                            "' 2> '" + err.string() + "'";
    const int status = std::system(cmd.c_str());
    CliResult r;
    r.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    r.out = read_file(out);
    r.err = read_file(err);
    return r;
}

}  // namespace cwtest
