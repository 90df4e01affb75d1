// Copyright 2026 The edumine Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <memory>

#include <CLI11.hpp>

#include "edumine/error.hpp"
#include "edumine/pipeline.hpp"

namespace edumine {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"edumine - opinion mining for education feedback", "edumine"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> alpha;
  std::string out_dir;
  app.add_option("--config", config_path, "JSON run configuration");
  app.add_option("--seed", seed, "split seed (overrides config)");
  app.add_option("--alpha", alpha, "smoothing constant (overrides config)");
  app.add_option("--out", out_dir, "output directory (overrides config)");

  CLI::App* ingest = app.add_subcommand("ingest", "summarize the corpus");
  CLI::App* train = app.add_subcommand("train", "train and save the model");
  CLI::App* classify =
      app.add_subcommand("classify", "label free text or a JSONL file");
  CLI::App* evaluate =
      app.add_subcommand("evaluate", "metrics on the held-out split");
  CLI::App* report =
      app.add_subcommand("report", "per-aspect summary CSV and SVG chart");
  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "ingest, train, evaluate and report in one run");

  std::string text, input;
  auto* text_opt = classify->add_option("--text", text, "comment to classify");
  auto* input_opt =
      classify->add_option("--input", input, "JSONL file to classify");
  text_opt->excludes(input_opt);
  classify->require_option(1);

  // CLI11 wants argv-style input with the program name first.
  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("edumine");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "edumine: usage error: " << e.what() << '\n'
        << "run 'edumine --help' for usage\n";
    return 2;
  }

  try {
    PipelineConfig config;
    if (!config_path.empty()) config = load_config(config_path);
    if (seed) config.seed = *seed;
    if (alpha) config.alpha = *alpha;
    if (!out_dir.empty()) config.out_dir = out_dir;

    Pipeline run(std::move(config), out, err);
    if (ingest->parsed()) {
      run.ingest();
    } else if (train->parsed()) {
      run.train();
    } else if (classify->parsed()) {
      if (!input.empty()) {
        run.classify_jsonl(input);
      } else {
        run.classify_text(text);
      }
    } else if (evaluate->parsed()) {
      run.evaluate();
    } else if (report->parsed()) {
      run.report();
    } else if (pipeline->parsed()) {
      run.run_all();
    }
  } catch (const std::exception& e) {
    err << "edumine: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace edumine
