#ifndef CLI_COMMANDS_HPP
#define CLI_COMMANDS_HPP

#include <iosfwd>
#include <vector>

#include "cli/literal.hpp"

namespace cli {

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& text);

struct CommonOpts {
  fps::RingSpec ring = fps::RingSpec::f2();
  Format format = Format::Text;
  std::string out_path;  // empty writes to stdout
};

// Exit codes: 0 success, 1 verification failure, 2 usage/input errors.
// Precondition violations from the core throw and are reported by main.

int cmd_table1(std::ostream& out, int max_index, bool engine_check, Format format);

int cmd_element(std::ostream& out, const CommonOpts& opts, std::size_t order,
                const std::string& action, const std::vector<std::string>& args);

int cmd_group_order(std::ostream& out, const CommonOpts& opts, const std::string& group,
                    int level);

int cmd_lcs(std::ostream& out, const CommonOpts& opts, int level, int depth);

int cmd_abelianization(std::ostream& out, const CommonOpts& opts, const std::string& group,
                       int level);

int cmd_dihedral(std::ostream& out, const CommonOpts& opts, int n, int infinite_level);

int cmd_shapiro(std::ostream& out, const CommonOpts& opts, const json& input);

int cmd_verify(std::ostream& out, const CommonOpts& opts, const std::vector<std::string>& suites,
               int n_max);

}  // namespace cli

#endif
