#pragma once

#include "bgg/bggcore.hpp"

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bgg::cli {

enum class Command { Cohomology, Diagram, Verify };

struct JobSpec {
  std::string algebra;                     // series label such as "A3"; empty when cartan is given
  std::vector<std::vector<int>> cartan;    // explicit Cartan matrix, rows
  std::vector<int> sigma;                  // crossed nodes, 1-based, sorted
  std::vector<int> weight;                 // highest weight of the coefficient module
  Command command = Command::Diagram;
  std::vector<std::string> emit{"text"};   // subset of text, dot, json in that order
  Budgets budgets;
  std::string output;                      // empty: standard output

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// argv[0] is the program name. Throws ParseError or ValidationError; a help request
/// is reported through the optional `help` text instead.
JobSpec parse_args(const std::vector<std::string>& args, std::string* help = nullptr);
/// Arguments that parse back to the same job (program name not included).
std::vector<std::string> format_args(const JobSpec& job);

CartanMatrix cartan_of(const JobSpec& job);
std::string algebra_name(const JobSpec& job);

struct Report {
  JobSpec job;
  ContextPtr ctx;
  std::vector<BGGArrow> arrows;
  std::vector<std::string> notes;
  std::map<std::string, bool> verify;

  bool passed() const;
};

Report run(const JobSpec& job);

std::string emit_text(const Report& r);
std::string emit_dot(const Report& r);
std::string emit_json(const Report& r);

/// Whole command line: parse, run, write outputs. Returns the process exit code:
/// 0 success, 1 a verification failed, 2 bad input, 3 computation error.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bgg::cli
