// Copyright 2026 The nisonto Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "nisonto/error.hpp"
#include "nisonto/pipeline.hpp"
#include "nisonto/serialize.hpp"
#include "nisonto/turtle.hpp"

namespace nisonto::pipeline {
namespace {

namespace fs = std::filesystem;

const fs::path kData = NISONTO_DATA_DIR;

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nisonto_pipeline_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    config_.input = kData / "corpus" / "nis2_excerpt.txt";
    config_.gold = kData / "corpus" / "gold.csv";
    config_.out_dir = dir_;
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(Stage s, Config* cfg = nullptr) {
    out_.str("");
    log_.str("");
    return pipeline::run(cfg ? *cfg : config_, s, out_, log_);
  }

  std::string read(std::string_view rel) const { return io::read_file(dir_ / std::string(rel)); }

  fs::path dir_;
  Config config_;
  std::ostringstream out_, log_;
};

TEST(Stages, Names) {
  for (Stage s : {Stage::kIngest, Stage::kExtract, Stage::kTabulate, Stage::kMap, Stage::kBuild,
                  Stage::kCheck, Stage::kAll}) {
    EXPECT_EQ(parse_stage(stage_name(s)), s);
  }
  EXPECT_THROW(parse_stage("deploy"), Error);
}

TEST_F(PipelineTest, AllProducesEveryArtifact) {
  EXPECT_EQ(run(Stage::kAll), 0);
  for (std::string_view rel : {artifact::kDocument, artifact::kClauses, artifact::kPosRows,
                               artifact::kTabulationSummary, artifact::kDictionary, artifact::kReview,
                               artifact::kDirectiveTtl, artifact::kCompliance, artifact::kManifest}) {
    EXPECT_TRUE(fs::exists(dir_ / std::string(rel))) << rel;
  }
  EXPECT_TRUE(fs::exists(dir_ / "tables" / "article_8.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "turtle" / "article_8.ttl"));
  rdf::Graph g = rdf::parse_turtle(read(artifact::kDirectiveTtl));
  EXPECT_TRUE(g.contains({g.iri("MemberState"), rdf::vocab::kEquivalentClass,
                          g.iri("Article-8-MemberState-Compliant")}));
  auto compliance = io::parse_json(read(artifact::kCompliance), "compliance");
  EXPECT_FALSE(compliance["article_classes"].empty());
}

TEST_F(PipelineTest, MissingEarlierArtifact) {
  try {
    run(Stage::kTabulate);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kStageInputMissing);
  }
  run(Stage::kIngest);
  EXPECT_THROW(run(Stage::kMap), Error);
}

TEST_F(PipelineTest, RerunIsANoOp) {
  run(Stage::kAll);
  std::string ttl = read(artifact::kDirectiveTtl);
  auto stamp = fs::last_write_time(dir_ / std::string(artifact::kDirectiveTtl));
  run(Stage::kBuild);
  EXPECT_NE(log_.str().find("[build] inputs unchanged, skipped"), std::string::npos) << log_.str();
  EXPECT_EQ(read(artifact::kDirectiveTtl), ttl);
  EXPECT_EQ(fs::last_write_time(dir_ / std::string(artifact::kDirectiveTtl)), stamp);

  // A changed parameter reruns the stage.
  config_.subclass_mode = true;
  run(Stage::kBuild);
  EXPECT_NE(log_.str().find("[build] wrote directive.ttl"), std::string::npos);
  EXPECT_NE(read(artifact::kDirectiveTtl), ttl);
}

TEST_F(PipelineTest, TamperedOutputIsRebuilt) {
  run(Stage::kAll);
  std::string ttl = read(artifact::kDirectiveTtl);
  io::write_file(dir_ / std::string(artifact::kDirectiveTtl), "garbage");
  run(Stage::kBuild);
  EXPECT_EQ(read(artifact::kDirectiveTtl), ttl);
}

TEST_F(PipelineTest, ManifestRecordsDataVersions) {
  run(Stage::kAll);
  auto m = io::parse_json(read(artifact::kManifest), "manifest");
  EXPECT_EQ(m["tool"], "nisonto");
  const auto& extract = m["stages"]["extract"]["inputs"];
  for (const char* key : {"lexicon", "gazetteer"}) {
    ASSERT_TRUE(extract.contains(key)) << key;
    EXPECT_EQ(extract[key]["sha256"].get<std::string>().size(), 64u);
    EXPECT_FALSE(extract[key]["version"].get<std::string>().empty());
  }
  EXPECT_EQ(m["stages"]["ingest"]["inputs"]["input"]["file"], "nis2_excerpt.txt");
  const auto& outs = m["stages"]["build"]["outputs"];
  EXPECT_EQ(outs["directive.ttl"]["sha256"].get<std::string>().size(), 64u);
}

TEST_F(PipelineTest, WithoutGoldUsesExtraction) {
  config_.gold.reset();
  EXPECT_EQ(run(Stage::kAll), 0);
  auto dict = io::dictionary_from_json(io::parse_json(read(artifact::kDictionary), "dictionary"));
  EXPECT_GT(dict.measure_count(), 0u);
  for (const auto& [key, measures] : dict.groups) {
    for (const auto& m : measures) EXPECT_FALSE(m.from_gold);
  }
}

TEST_F(PipelineTest, ExplicitCheck) {
  run(Stage::kAll);
  Config cfg = config_;
  cfg.abox = kData / "corpus" / "abox_example.json";
  cfg.article_class = "Article-10-MemberState-Compliant";
  cfg.individual = "Italy";
  EXPECT_EQ(run(Stage::kCheck, &cfg), 0);
  EXPECT_NE(out_.str().find("is compliant"), std::string::npos);
  cfg.individual = "Malta";
  EXPECT_EQ(run(Stage::kCheck, &cfg), 1);
  EXPECT_NE(out_.str().find("missing: ensure"), std::string::npos);
  cfg.abox.reset();
  EXPECT_THROW(run(Stage::kCheck, &cfg), Error);
}

int shell(const std::string& cmd) {
  int rc = std::system((cmd + " >/dev/null 2>&1").c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

TEST_F(PipelineTest, CliExitCodes) {
  std::string cli = NISONTO_CLI_PATH;
  std::string common = " --input " + config_.input.string() + " --gold " + config_.gold->string() +
                       " --out-dir " + dir_.string();
  EXPECT_EQ(shell(cli + " --version"), 0);
  EXPECT_EQ(shell(cli + common + " all"), 0);
  std::string check = cli + " --out-dir " + dir_.string() + " check --abox " +
                      (kData / "corpus" / "abox_example.json").string() +
                      " --article Article-10-MemberState-Compliant --individual ";
  EXPECT_EQ(shell(check + "Italy"), 0);
  EXPECT_EQ(shell(check + "Malta"), 1);
  EXPECT_EQ(shell(check + "Nobody"), 2);
  EXPECT_EQ(shell(cli + " --out-dir " + (dir_ / "empty").string() + " tabulate"), 2);
  EXPECT_EQ(shell(cli + " frobnicate"), 2);
}

TEST_F(PipelineTest, CliConfigFile) {
  fs::create_directories(dir_);
  fs::path cfg = dir_ / "run.toml";
  std::ofstream(cfg) << "input = \"" << config_.input.string() << "\"\n"
                     << "out-dir = \"" << (dir_ / "from_config").string() << "\"\n"
                     << "articles = \"8..8\"\n";
  EXPECT_EQ(shell(std::string(NISONTO_CLI_PATH) + " --config " + cfg.string() + " all"), 0);
  EXPECT_TRUE(fs::exists(dir_ / "from_config" / "turtle" / "article_8.ttl"));
  EXPECT_FALSE(fs::exists(dir_ / "from_config" / "turtle" / "article_7.ttl"));
}

}  // namespace
}  // namespace nisonto::pipeline
