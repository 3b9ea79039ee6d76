// Serializes the built-in identity catalog to the JSON corpus file, and can
// run a quick verification pass over a subset while editing records.
//
//   corpusgen --out data/corpus.json
//   corpusgen --check id1,id2 --digits 30

#include <cstdio>
#include <cstring>
#include <fstream>
#include <string>

#include "hyperid/corpus.hpp"
#include "hyperid/verify.hpp"

int main(int argc, char** argv) {
  std::string out_path;
  std::string check;
  long digits = 30;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--out") && i + 1 < argc) {
      out_path = argv[++i];
    } else if (!std::strcmp(argv[i], "--check") && i + 1 < argc) {
      check = argv[++i];
    } else if (!std::strcmp(argv[i], "--digits") && i + 1 < argc) {
      digits = std::atol(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: corpusgen [--out file] [--check ids|all] [--digits N]\n");
      return 2;
    }
  }

  auto corpus = hyperid::corpus::builtin_corpus();
  std::fprintf(stderr, "built-in corpus: %zu records\n", corpus.records.size());

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    out << hyperid::corpus::corpus_to_json_text(corpus) << "\n";
    std::fprintf(stderr, "wrote %s\n", out_path.c_str());
  }

  if (!check.empty()) {
    hyperid::corpus::VerifyConfig cfg;
    cfg.digits = digits;
    if (check != "all") {
      size_t pos = 0;
      while (pos < check.size()) {
        size_t comma = check.find(',', pos);
        if (comma == std::string::npos) comma = check.size();
        cfg.only_ids.push_back(check.substr(pos, comma - pos));
        pos = comma + 1;
      }
    }
    auto rep = hyperid::corpus::verify_all(corpus, cfg);
    for (const auto& rr : rep.records) {
      for (const auto& so : rr.samples) {
        std::printf("%-14s %-30s %s agree=%.1f %s\n", rr.id.c_str(), so.point.c_str(),
                    so.pass ? "pass" : "FAIL", so.agreement_digits,
                    so.error.empty() ? "" : so.error.c_str());
      }
    }
    std::printf("pass %d fail %d conjectural %d (%.1fs)\n", rep.passed, rep.failed,
                rep.conjectural, rep.wall_ms / 1000.0);
    return rep.failed == 0 ? 0 : 1;
  }
  return 0;
}
