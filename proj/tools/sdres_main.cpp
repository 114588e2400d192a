#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sdres/error.hpp"
#include "sdres/parser.hpp"
#include "sdres/pipeline.hpp"
#include "sdres/report.hpp"

namespace {

int fail(const std::string& msg, int code) {
  std::cerr << "sdres: " << msg << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sparse difference resultants of generic Laurent difference systems"};
  app.require_subcommand(1);

  std::string input;
  std::uint64_t seed = 0;
  std::string format = "text";
  std::string out_path;
  bool paranoid = false;
  int max_retries = 8;
  bool verbose = false;
  std::vector<int> keep_vars;

  for (const char* name : {"check", "super", "bounds", "resultant"}) {
    CLI::App* sub = app.add_subcommand(name, std::string("run the pipeline through the ") + name + " stage");
    sub->add_option("file", input, "system file ('-' for stdin)")->required();
    sub->add_option("--seed", seed, "seed for every randomized stage");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "write the report here instead of stdout");
    sub->add_flag("--paranoid", paranoid, "confirm randomized ranks exactly");
    sub->add_option("--max-retries", max_retries, "liftings to try before giving up")->check(CLI::NonNegativeNumber);
    sub->add_flag("--verbose,-v", verbose, "print stage timings to stderr");
    sub->add_option("--keep-vars", keep_vars, "force the variables kept by the specialization");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string command = app.get_subcommands().front()->get_name();

  std::string text;
  if (input == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(input);
    if (!in) return fail("cannot read " + input, 1);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  sdres::PipelineOptions opts;
  opts.seed = seed;
  opts.paranoid = paranoid;
  opts.max_retries = max_retries;
  if (!keep_vars.empty()) opts.kept_vars = keep_vars;
  if (command == "check") opts.stop_after = sdres::Stage::Check;
  else if (command == "super") opts.stop_after = sdres::Stage::Super;
  else if (command == "bounds") opts.stop_after = sdres::Stage::Bounds;

  sdres::PipelineReport report;
  try {
    report = sdres::run_pipeline(sdres::parse_system(text), opts);
  } catch (const sdres::Error& e) {
    std::string where = e.stage().empty() ? "parse" : e.stage();
    return fail(where + ": " + std::string(sdres::to_string(e.kind())) + ": " + e.what(),
                sdres::is_input_error(e.kind()) ? 1 : 2);
  } catch (const std::exception& e) {
    return fail(e.what(), 2);
  }

  if (verbose)
    for (const auto& [stage, ms] : report.timing) std::cerr << stage << ": " << ms << " ms\n";

  const std::string body =
      sdres::serialize(report, format == "json" ? sdres::Format::Json : sdres::Format::Text);
  if (out_path.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(out_path);
    if (!out) return fail("cannot write " + out_path, 1);
    out << body;
  }
  return 0;
}
