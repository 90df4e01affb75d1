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

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "edumine/classifier.hpp"
#include "edumine/error.hpp"
#include "support/test_util.hpp"

using namespace edumine;
using edumine::testing::doc_of;
using edumine::testing::examples_of;
using edumine::testing::three_doc_fixture;

namespace {
constexpr auto kPos = SentimentLabel::kPositive;
constexpr auto kNeg = SentimentLabel::kNegative;
constexpr auto kNeu = SentimentLabel::kNeutral;
}  // namespace

TEST_CASE("train: three-document fixture") {
  const NaiveBayesModel model = train(examples_of(three_doc_fixture()), 1.0);
  CHECK(model.classes() == std::vector<SentimentLabel>{kNeg, kPos});
  CHECK(model.prior(kPos) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(model.prior(kNeg) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(model.vocabulary() ==
        std::set<std::string, std::less<>>{"bad", "exam", "good", "teacher"});
  CHECK(model.token_counts(kPos) ==
        NaiveBayesModel::TokenCounts{{"good", 2}, {"teacher", 1}, {"exam", 1}});
  CHECK(model.class_token_total(kPos) == 4);
  CHECK(model.class_token_total(kNeg) == 2);
}

TEST_CASE("train: degenerate and invalid corpora") {
  const NaiveBayesModel one = train(examples_of({{{"good"}, kPos}}), 1.0);
  CHECK(one.classes() == std::vector<SentimentLabel>{kPos});
  CHECK(one.prior(kPos) == 1.0);
  CHECK_THROWS_AS(train({}, 1.0), ConfigError);
  CHECK_THROWS_AS(train(examples_of(three_doc_fixture()), 0.0), ConfigError);
  CHECK_THROWS_AS(train(examples_of(three_doc_fixture()), -1.0), ConfigError);
}

TEST_CASE("log_likelihood") {
  const NaiveBayesModel model = train(examples_of(three_doc_fixture()), 1.0);
  CHECK(log_likelihood(model, "good", kPos) == doctest::Approx(std::log(3.0 / 8.0)));
  CHECK(log_likelihood(model, "good", kNeg) == doctest::Approx(std::log(1.0 / 6.0)));
  CHECK_THROWS_AS(log_likelihood(model, "good", kNeu), ConfigError);
  CHECK_THROWS_AS(log_likelihood(model, "great", kPos), ConfigError);

  const NaiveBayesModel smooth = train(examples_of(three_doc_fixture()), 1e6);
  for (const std::string& t : smooth.vocabulary()) {
    CHECK(std::abs(log_likelihood(smooth, t, kPos) - std::log(0.25)) < 1e-3);
  }
}

TEST_CASE("posterior: hand-derived fixture") {
  const NaiveBayesModel model = train(examples_of(three_doc_fixture()), 1.0);
  const Posterior p = posterior(model, doc_of({"good", "exam"}));
  // unnormalized: pos 2/3 * 3/8 * 2/8 = 1/16, neg 1/3 * 1/6 * 2/6 = 1/54
  const double pos = 1.0 / 16.0, neg = 1.0 / 54.0;
  CHECK(p.scores.at(kPos) == doctest::Approx(pos / (pos + neg)).epsilon(1e-12));
  CHECK(p.scores.at(kPos) == doctest::Approx(0.7714).epsilon(1e-4));
  CHECK(p.evidence() == doctest::Approx(pos + neg).epsilon(1e-12));
  CHECK(p.predicted == kPos);
  CHECK(classify(model, doc_of({"good", "exam"})) == kPos);
}

TEST_CASE("posterior: empty and out-of-vocabulary documents give the priors") {
  const NaiveBayesModel model = train(examples_of(three_doc_fixture()), 1.0);
  for (const auto& doc : {doc_of({}), doc_of({"unseen", "words"})}) {
    const Posterior p = posterior(model, doc);
    CHECK(p.scores.at(kPos) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(p.scores.at(kNeg) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(p.predicted == kPos);
  }
}

TEST_CASE("classify: ties go to the canonical-order winner") {
  const NaiveBayesModel model =
      train(examples_of({{{"a"}, kPos}, {{"b"}, kNeg}}), 1.0);
  const Posterior p = posterior(model, doc_of({}));
  CHECK(p.scores.at(kPos) == p.scores.at(kNeg));
  CHECK(p.predicted == kNeg);
  CHECK(argmax({{kNeu, 0.5}, {kPos, 0.5}}) == kNeu);
}

TEST_CASE("posterior: long documents do not underflow") {
  const NaiveBayesModel model = train(examples_of(three_doc_fixture()), 1.0);
  std::vector<std::string> tokens(5000, "bad");
  const Posterior p = posterior(model, doc_of(tokens));
  CHECK(p.predicted == kNeg);
  CHECK(std::isfinite(p.log_evidence));
  CHECK(p.scores.at(kNeg) + p.scores.at(kPos) == doctest::Approx(1.0));
}

TEST_CASE("property: posterior is invariant to token order") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    auto corpus = testing::random_corpus(rng, 8, 10);
    const NaiveBayesModel model = train(examples_of(corpus), 1.0);
    std::vector<std::string> q;
    for (int k = 0; k < 8; ++k) q.push_back("w" + std::to_string(rng() % 12));
    const Posterior a = posterior(model, doc_of(q));
    std::shuffle(q.begin(), q.end(), rng);
    const Posterior b = posterior(model, doc_of(q));
    for (SentimentLabel c : model.classes()) {
      CHECK(a.scores.at(c) == doctest::Approx(b.scores.at(c)).epsilon(1e-12));
    }
    CHECK(a.predicted == b.predicted);
  }
}

TEST_CASE("property: duplicating the corpus k times") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    auto corpus = testing::random_corpus(rng, 5, 8);
    const int k = 2 + trial % 3;
    std::vector<testing::RawDoc> repeated;
    for (int i = 0; i < k; ++i) repeated.insert(repeated.end(), corpus.begin(), corpus.end());
    const NaiveBayesModel base = train(examples_of(corpus), 1.0);
    const NaiveBayesModel scaled = train(examples_of(repeated), 1.0 * k);
    const NaiveBayesModel plain = train(examples_of(repeated), 1.0);
    for (SentimentLabel c : base.classes()) {
      CHECK(plain.prior(c) == doctest::Approx(base.prior(c)).epsilon(1e-15));
      CHECK(plain.class_token_total(c) == k * base.class_token_total(c));
      for (const auto& [t, n] : base.token_counts(c)) CHECK(plain.count(t, c) == k * n);
      for (const std::string& t : base.vocabulary()) {
        CHECK(log_likelihood(scaled, t, c) ==
              doctest::Approx(log_likelihood(base, t, c)).epsilon(1e-12));
      }
    }
    std::vector<std::string> q = {"w1", "w2", "w2", "w5"};
    CHECK(classify(scaled, doc_of(q)) == classify(base, doc_of(q)));
  }
}

TEST_CASE("model file: round trip and format") {
  const NaiveBayesModel model = train(examples_of(three_doc_fixture()), 1.0);
  const std::string json = model_to_json(model);
  CHECK(json.find("\"version\": 1") != std::string::npos);
  // sorted keys
  CHECK(json.find("\"alpha\"") < json.find("\"classes\""));
  CHECK(json.find("\"classes\"") < json.find("\"doc_counts\""));
  CHECK(json.find("\"doc_counts\"") < json.find("\"token_counts\""));
  CHECK(json.find("\"token_counts\"") < json.find("\"version\""));
  const NaiveBayesModel back = model_from_json(json);
  CHECK(back == model);
  CHECK(model_to_json(back) == json);

  const auto dir = testing::temp_dir("model");
  save_model(model, dir / "m.json");
  CHECK(load_model(dir / "m.json") == model);
  std::filesystem::remove_all(dir);
}

TEST_CASE("model file: validation names the field") {
  const auto err = [](const std::string& text) -> std::string {
    try {
      model_from_json(text);
    } catch (const SchemaError& e) {
      return e.what();
    }
    return "";
  };
  const std::string ok =
      R"("alpha":1,"classes":["negative","positive"],"doc_counts":{"negative":1,"positive":2},"token_counts":{"negative":{"bad":1},"positive":{"good":2}})";
  CHECK(err("{" + ok + R"(,"version":1})").empty());
  CHECK(err("").find("not a JSON") != std::string::npos);
  CHECK(err("{" + ok + R"(,"version":2})").find("version") != std::string::npos);
  CHECK(err("{" + ok + "}").find("version") != std::string::npos);
  CHECK(err("{" + ok + R"(,"version":1,"priors":{"negative":0.3,"positive":0.5}})")
            .find("priors") != std::string::npos);
  CHECK(err("{" + ok + R"(,"version":1,"priors":{"negative":0.3333333333333333,"positive":0.6666666666666666}})")
            .empty());
  CHECK(err(R"({"alpha":0,"classes":["positive"],"doc_counts":{"positive":1},"token_counts":{"positive":{}},"version":1})")
            .find("alpha") != std::string::npos);
  CHECK(err(R"({"alpha":1,"classes":["positive","negative"],"doc_counts":{"positive":1,"negative":1},"token_counts":{"positive":{},"negative":{}},"version":1})")
            .find("classes") != std::string::npos);
  CHECK(err(R"({"alpha":1,"classes":["positive"],"doc_counts":{"positive":1},"token_counts":{"positive":{"a":-1}},"version":1})")
            .find("token_counts.positive.a") != std::string::npos);
  CHECK(err(R"({"alpha":1,"classes":["positive"],"doc_counts":{"positive":1.5},"token_counts":{"positive":{}},"version":1})")
            .find("doc_counts.positive") != std::string::npos);
  CHECK(err(R"({"alpha":1,"classes":["positive"],"doc_counts":{"positive":1},"token_counts":{"positive":{}},"version":1,"bias":3})")
            .find("bias") != std::string::npos);
}

TEST_CASE("property: per-class likelihoods sum to one over the vocabulary") {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const double alpha = 0.05 + static_cast<double>(rng() % 400) / 100.0;
    const NaiveBayesModel model = train(examples_of(testing::random_corpus(rng, 10, 15)), alpha);
    for (SentimentLabel c : model.classes()) {
      double sum = 0.0;
      for (const std::string& t : model.vocabulary()) sum += std::exp(log_likelihood(model, t, c));
      if (!model.vocabulary().empty()) CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
    double priors = 0.0;
    for (SentimentLabel c : model.classes()) priors += model.prior(c);
    CHECK(priors == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("property: posterior matches direct evaluation of Bayes' rule") {
  std::mt19937_64 rng(34);
  for (int trial = 0; trial < 300; ++trial) {
    const auto corpus = testing::random_corpus(rng, 12, 10, 8);
    const double alpha = 0.1 + static_cast<double>(rng() % 300) / 100.0;
    std::vector<std::string> q;
    for (std::size_t k = rng() % 10; k > 0; --k) q.push_back("w" + std::to_string(rng() % 13));
    const Posterior p = posterior(train(examples_of(corpus), alpha), doc_of(q));
    const auto oracle = testing::brute_force_posterior(corpus, alpha, q);
    REQUIRE(p.scores.size() == oracle.size());
    double total = 0.0;
    for (const auto& [c, v] : oracle) {
      CHECK(std::abs(p.scores.at(c) - static_cast<double>(v)) < 1e-12);
      total += p.scores.at(c);
    }
    CHECK(std::abs(total - 1.0) < 1e-12);
  }
}

TEST_CASE("property: model files round-trip random models") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const double alpha = 0.01 + static_cast<double>(rng() % 10000) / 997.0;
    const NaiveBayesModel model = train(examples_of(testing::random_corpus(rng, 10, 20)), alpha);
    const NaiveBayesModel back = model_from_json(model_to_json(model));
    CHECK(back == model);
    CHECK(back.alpha() == model.alpha());
  }
}
