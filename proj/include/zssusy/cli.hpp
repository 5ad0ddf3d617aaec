#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace zssusy::cli {

enum ExitCode : int { kSuccess = 0, kUsage = 1, kVerification = 2 };

/// Runs one subcommand. argv[0] is the program name. The summary line goes
/// to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out,
        std::ostream& err);
int run(const std::vector<std::string>& argv);

// -- config files -----------------------------------------------------------

/// `key = value` per line, `#` starts a comment. Throws std::runtime_error
/// on malformed lines, duplicate keys or unreadable files.
std::map<std::string, std::string> read_config(const std::string& path);

/// Prepends `--key=value` for every config entry whose flag is not already
/// present among `args`, so explicit flags win.
std::vector<std::string> merge_config(
    const std::map<std::string, std::string>& config,
    const std::vector<std::string>& args);

// -- tabular output ---------------------------------------------------------

using Cell = std::variant<double, long long, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, json };

/// Doubles as %.17g; non-finite doubles become nan/inf in CSV and null in
/// JSON.
std::string format_double(double v);
std::string render(const Table& table, Format format);
/// Throws std::runtime_error on I/O failure.
void write_table(const Table& table, Format format, const std::string& path);

/// $ZSSUSY_OUT_DIR/<stem>.<ext>, or ./<stem>.<ext> when unset.
std::string default_output_path(const std::string& stem, Format format);

}  // namespace zssusy::cli
