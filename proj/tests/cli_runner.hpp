#pragma once

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#ifndef JACOBI_SPECTRA_BIN
#error "JACOBI_SPECTRA_BIN must name the command-line binary"
#endif

/// Runs the command-line binary through the shell.
struct CliRun {
  int exit_code = -1;
  std::string out;
};

/// `env` is an optional VAR=value prefix.
inline CliRun run_cli(const std::string& args, const std::string& env = "") {
  const std::string command =
      env + " '" + std::string(JACOBI_SPECTRA_BIN) + "' " + args + " 2>/dev/null";
  CliRun run;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return run;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) run.out.append(buffer, got);
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  std::random_device rd;
  const auto dir = std::filesystem::temp_directory_path() /
                   ("jacobi-spectra-" + tag + "-" + std::to_string(rd()));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& name,
                                        const std::string& contents) {
  const auto path = dir / name;
  std::ofstream(path) << contents;
  return path;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}
