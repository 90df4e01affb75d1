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

/// \file
/// Defines the `edumine._edumine` extension module: the preprocessing
/// stages, aspect extraction, the Naive Bayes classifier, evaluation and
/// reporting, plus the command-line entry point.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "edumine/aspect.hpp"
#include "edumine/classifier.hpp"
#include "edumine/corpus.hpp"
#include "edumine/error.hpp"
#include "edumine/eval.hpp"
#include "edumine/pipeline.hpp"
#include "edumine/preprocess.hpp"
#include "edumine/report.hpp"

namespace py = pybind11;

namespace edumine {
namespace {

std::vector<std::string> surfaces(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const Token& t : tokens) out.push_back(t.surface);
  return out;
}

ProcessedDocument as_document(const std::vector<std::string>& tokens) {
  ProcessedDocument doc;
  for (const std::string& s : tokens) {
    doc.tokens.push_back(Token{s, doc.tokens.size()});
  }
  return doc;
}

StageToggles stages_from(const std::map<std::string, bool>& flags) {
  StageToggles st;
  for (const auto& [name, on] : flags) {
    if (name == kStageCaseFold) {
      st.case_fold = on;
    } else if (name == kStageTokenize) {
      st.tokenize = on;
    } else if (name == kStageSpellCorrect) {
      st.spell_correct = on;
    } else if (name == kStageRemoveStopwords) {
      st.remove_stopwords = on;
    } else if (name == kStageStem) {
      st.stem = on;
    } else {
      throw ConfigError("unknown stage '" + name + "'");
    }
  }
  return st;
}

std::vector<TrainingExample> as_examples(
    const std::vector<std::pair<std::vector<std::string>, SentimentLabel>>&
        docs) {
  std::vector<TrainingExample> out;
  for (const auto& [tokens, label] : docs) {
    out.emplace_back(as_document(tokens), label);
  }
  return out;
}

}  // namespace
}  // namespace edumine

PYBIND11_MODULE(_edumine, m) {
  using namespace edumine;
  m.doc() = "Naive Bayes opinion mining for education feedback";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::enum_<SentimentLabel>(m, "SentimentLabel")
      .value("negative", SentimentLabel::kNegative)
      .value("neutral", SentimentLabel::kNeutral)
      .value("positive", SentimentLabel::kPositive)
      .def("__str__", [](SentimentLabel l) { return std::string(to_string(l)); });

  // corpus
  py::class_<FeedbackRecord>(m, "FeedbackRecord")
      .def(py::init<>())
      .def_readwrite("id", &FeedbackRecord::id)
      .def_readwrite("source", &FeedbackRecord::source)
      .def_readwrite("created_at", &FeedbackRecord::created_at)
      .def_readwrite("text", &FeedbackRecord::text)
      .def_readwrite("label", &FeedbackRecord::label)
      .def("__eq__", &FeedbackRecord::operator==);
  py::class_<LabeledCorpus>(m, "LabeledCorpus")
      .def(py::init<>())
      .def_readwrite("records", &LabeledCorpus::records)
      .def_readwrite("skipped", &LabeledCorpus::skipped)
      .def("__len__", [](const LabeledCorpus& c) { return c.records.size(); });
  m.def("ingest_jsonl",
        [](const std::filesystem::path& path) { return ingest_jsonl(path); },
        py::arg("path"));
  m.def("parse_jsonl", [](const std::string& text) {
    std::istringstream in(text);
    return parse_jsonl(in);
  });
  m.def("to_jsonl", [](const LabeledCorpus& c) {
    std::ostringstream out;
    write_jsonl(out, c);
    return out.str();
  });
  m.def("split", &split, py::arg("corpus"), py::arg("train_fraction"),
        py::arg("seed"));

  // preprocess
  m.def("case_fold", &case_fold);
  m.def("tokenize", [](const std::string& text) { return surfaces(tokenize(text)); });
  m.def("remove_stopwords",
        [](const std::vector<std::string>& tokens,
           const std::vector<std::string>& stopwords) {
          return surfaces(
              remove_stopwords(as_document(tokens).tokens, StopwordList(stopwords)));
        });
  m.def("english_stopwords", [] {
    const auto& words = StopwordList::english().words();
    return std::vector<std::string>(words.begin(), words.end());
  });
  m.def("spell_correct",
        [](const std::string& word, std::map<std::string, std::uint64_t> lexicon) {
          return spell_correct(Token{word, 0}, SpellLexicon(std::move(lexicon)))
              .surface;
        });
  m.def("porter_stem", [](const std::string& w) { return porter_stem(w); });
  m.def("stem",
        [](const std::string& word, const std::map<std::string, std::string>& lemmas) {
          LemmaExceptions ex(lemmas.begin(), lemmas.end());
          return stem(Token{word, 0}, ex).surface;
        },
        py::arg("word"), py::arg("exceptions") = std::map<std::string, std::string>{});
  m.def(
      "preprocess",
      [](const std::string& text, const std::map<std::string, bool>& stages,
         std::optional<std::vector<std::string>> stopwords,
         std::map<std::string, std::uint64_t> spell,
         std::optional<std::map<std::string, std::string>> lemmas) {
        const StopwordList sw =
            stopwords ? StopwordList(*stopwords) : StopwordList::english();
        const SpellLexicon lex(std::move(spell));
        const LemmaExceptions ex =
            lemmas ? LemmaExceptions(lemmas->begin(), lemmas->end())
                   : default_lemma_exceptions();
        PreprocessConfig cfg{stages_from(stages), &sw, &lex, &ex};
        return surfaces(preprocess_text(text, cfg).tokens);
      },
      py::arg("text"), py::arg("stages") = std::map<std::string, bool>{},
      py::arg("stopwords") = py::none(),
      py::arg("spell") = std::map<std::string, std::uint64_t>{},
      py::arg("lemmas") = py::none(),
      "Runs the preprocessing chain and returns the surviving token surfaces.");

  // aspect
  m.def("filter_alphabetic", [](const std::vector<std::string>& tokens) {
    return surfaces(filter_alphabetic(as_document(tokens).tokens));
  });
  m.def(
      "pos_tag",
      [](const std::vector<std::string>& tokens,
         std::optional<std::map<std::string, std::string>> lexicon) {
        TagLexicon lex;
        if (lexicon) {
          for (const auto& [w, t] : *lexicon) {
            auto tag = parse_pos_tag(t);
            if (!tag) throw ConfigError("unknown tag '" + t + "'");
            lex.emplace(w, *tag);
          }
        } else {
          lex = default_tag_lexicon();
        }
        std::vector<std::tuple<std::string, std::string, std::string>> out;
        for (const TaggedToken& t : pos_tag(as_document(tokens).tokens, lex)) {
          out.emplace_back(t.token.surface, std::string(to_string(t.tag)),
                           std::string(to_string(t.tier)));
        }
        return out;
      },
      py::arg("tokens"), py::arg("lexicon") = py::none(),
      "Returns (surface, tag, tier) triples.");
  m.def(
      "formulate_taxonomy",
      [](const std::map<std::string, std::vector<std::string>>& doc_nouns,
         const SeedSets& seeds) {
        NounIndex index;
        for (const auto& [id, nouns] : doc_nouns) {
          std::vector<TaggedToken> tagged;
          for (const std::string& n : nouns) {
            tagged.push_back({Token{n, tagged.size()}, PosTag::kNoun,
                              TagTier::kLexicon});
          }
          index.add(id, tagged);
        }
        AspectTaxonomy t = formulate_taxonomy(index, seeds);
        std::map<std::string, std::set<std::string>> cats(t.categories.begin(),
                                                          t.categories.end());
        return std::make_pair(cats, std::set<std::string>(t.uncategorized.begin(),
                                                          t.uncategorized.end()));
      },
      py::arg("doc_nouns"), py::arg("seeds"),
      "Indexes {doc_id: [noun, ...]} and partitions it by seed sets; returns "
      "(categories, uncategorized).");

  // classifier
  py::class_<Posterior>(m, "Posterior")
      .def_readonly("scores", &Posterior::scores)
      .def_readonly("log_joint", &Posterior::log_joint)
      .def_readonly("log_evidence", &Posterior::log_evidence)
      .def_readonly("predicted", &Posterior::predicted)
      .def_property_readonly("evidence", &Posterior::evidence);
  py::class_<NaiveBayesModel>(m, "NaiveBayesModel")
      .def_property_readonly("classes", &NaiveBayesModel::classes)
      .def_property_readonly("alpha", &NaiveBayesModel::alpha)
      .def_property_readonly("doc_counts", &NaiveBayesModel::doc_counts)
      .def_property_readonly("vocabulary",
                             [](const NaiveBayesModel& model) {
                               return std::set<std::string>(
                                   model.vocabulary().begin(),
                                   model.vocabulary().end());
                             })
      .def("prior", &NaiveBayesModel::prior)
      .def("count", [](const NaiveBayesModel& model, const std::string& t,
                       SentimentLabel c) { return model.count(t, c); })
      .def("log_likelihood",
           [](const NaiveBayesModel& model, const std::string& t,
              SentimentLabel c) { return log_likelihood(model, t, c); })
      .def("posterior",
           [](const NaiveBayesModel& model,
              const std::vector<std::string>& tokens) {
             return posterior(model, as_document(tokens));
           })
      .def("classify",
           [](const NaiveBayesModel& model,
              const std::vector<std::string>& tokens) {
             return classify(model, as_document(tokens));
           })
      .def("to_json", &model_to_json)
      .def_static("from_json",
                  [](const std::string& s) { return model_from_json(s); })
      .def("save", [](const NaiveBayesModel& model,
                      const std::filesystem::path& p) { save_model(model, p); })
      .def_static("load",
                  [](const std::filesystem::path& p) { return load_model(p); })
      .def("__eq__", &NaiveBayesModel::operator==);
  m.def(
      "train",
      [](const std::vector<std::pair<std::vector<std::string>, SentimentLabel>>&
             docs,
         double alpha) { return train(as_examples(docs), alpha); },
      py::arg("docs"), py::arg("alpha") = 1.0,
      "Trains on [(tokens, label), ...].");

  // eval
  py::class_<ConfusionMatrix>(m, "ConfusionMatrix")
      .def_readonly("labels", &ConfusionMatrix::labels)
      .def_readonly("cells", &ConfusionMatrix::cells)
      .def("total", &ConfusionMatrix::total);
  py::class_<ClassMetrics>(m, "ClassMetrics")
      .def_readonly("precision", &ClassMetrics::precision)
      .def_readonly("recall", &ClassMetrics::recall)
      .def_readonly("f1", &ClassMetrics::f1);
  py::class_<Metrics>(m, "Metrics")
      .def_readonly("per_class", &Metrics::per_class)
      .def_readonly("accuracy", &Metrics::accuracy)
      .def_readonly("macro_f1", &Metrics::macro_f1)
      .def("to_csv", [](const Metrics& mt) {
        std::ostringstream out;
        write_metrics_csv(out, mt);
        return out.str();
      });
  m.def("confusion",
        [](const NaiveBayesModel& model,
           const std::vector<std::pair<std::vector<std::string>, SentimentLabel>>&
               docs) { return confusion(model, as_examples(docs)); });
  m.def("confusion_from_pairs", &confusion_from_pairs);
  m.def("metrics", &metrics);

  // report
  py::class_<AspectSentimentSummary>(m, "AspectSentimentSummary")
      .def_readonly("rows", &AspectSentimentSummary::rows)
      .def_readonly("total_docs", &AspectSentimentSummary::total_docs)
      .def_readonly("generated_at", &AspectSentimentSummary::generated_at)
      .def("to_csv", &summary_csv)
      .def("to_svg", &summary_svg);
  m.def(
      "aggregate",
      [](const std::vector<std::tuple<std::string, SentimentLabel,
                                      std::set<std::string>>>& docs) {
        std::vector<ClassifiedDocument> in;
        for (const auto& [id, label, aspects] : docs) {
          in.push_back(ClassifiedDocument{id, label, aspects});
        }
        return aggregate(in);
      },
      "Aggregates [(doc_id, label, {aspect, ...}), ...].");

  // cli
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
