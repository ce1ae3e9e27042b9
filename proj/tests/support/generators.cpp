#include "generators.hpp"

#include "nmir/session.hpp"

namespace nmir::gen {

std::vector<Term> terms(std::size_t n) {
  std::vector<Term> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

Corpus corpus(Rng& rng, std::size_t max_terms, std::size_t max_docs) {
  std::uniform_int_distribution<std::size_t> n_terms(1, max_terms);
  std::uniform_int_distribution<std::size_t> n_docs(0, max_docs);
  std::uniform_int_distribution<int> label(0, 2);
  std::bernoulli_distribution coin(0.45);
  const auto vocab = terms(n_terms(rng));
  std::vector<Document> docs;
  const auto nd = n_docs(rng);
  for (std::size_t i = 0; i < nd; ++i) {
    Document d;
    d.id = "d" + std::to_string(i + 1);
    for (const auto& t : vocab)
      if (coin(rng)) d.terms.insert(t);
    if (d.terms.empty()) d.terms.insert(vocab[std::uniform_int_distribution<std::size_t>(0, vocab.size() - 1)(rng)]);
    const int l = label(rng);
    d.label = l == 0 ? Label::positive : l == 1 ? Label::negative : Label::unlabeled;
    docs.push_back(std::move(d));
  }
  return Corpus(vocab, std::move(docs));
}

TermPreorder rational_ordering(Rng& rng, std::size_t n, int levels) {
  std::uniform_int_distribution<int> level(0, levels - 1);
  const auto vocab = terms(n);
  std::vector<int> score(n);
  for (auto& s : score) s = level(rng);
  std::vector<TermPair> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && score[a] <= score[b]) pairs.emplace_back(vocab[a], vocab[b]);
  return TermPreorder(Universe(vocab), std::move(pairs), OrderKind::rational);
}

TermPreorder random_ordering(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  const auto vocab = terms(n);
  std::vector<TermPair> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && coin(rng)) pairs.emplace_back(vocab[a], vocab[b]);
  return TermPreorder(Universe(vocab), std::move(pairs), OrderKind::preferential);
}

FiniteRelation relation(Rng& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  FiniteRelation rel{Universe(terms(n))};
  const auto count = static_cast<Universe::Mask>(rel.subset_count());
  for (Universe::Mask q = 1; q <= count; ++q)
    for (Universe::Mask d = 1; d <= count; ++d)
      if (coin(rng)) rel.add(q, d);
  return rel;
}

std::string fixture_path(const std::string& name) { return std::string(NMIR_FIXTURES) + "/" + name; }

Corpus example_corpus() { return parse_corpus(read_text_file(fixture_path("example.csv"))); }

}  // namespace nmir::gen
